from concurrent.futures import ThreadPoolExecutor
from contextvars import copy_context

import pytest
from fastapi.testclient import TestClient

from app import create_app
from app.exceptions.exception import BadTemperatureException
from app.middleware.translation_manager import _, current_lang, use_language
from app.modules.thermal_dimer.engine import dimer
from app.modules.thermal_dimer.engine.dimer import thermal_point, thermal_sweep

ENGLISH = 'All amplitudes are zero'
VIETNAMESE = 'Tất cả biên độ đều bằng 0'


def test_language_is_scoped_to_the_context():
	before = current_lang.get()
	inner = copy_context().run(lambda: (use_language('vi'), _('state_zero_vector'))[1])
	assert inner == VIETNAMESE
	assert current_lang.get() == before
	assert copy_context().run(lambda: (use_language('en'), _('state_zero_vector'))[1]) == ENGLISH


def test_unknown_language_falls_back():
	assert copy_context().run(use_language, 'fr') == 'en'
	assert copy_context().run(use_language, 'VI-vn') == 'vi'


def test_sweep_workers_keep_the_callers_language(monkeypatch):
	def failing_point(j, tau, cross_check=False):
		if tau > 1.0:
			raise BadTemperatureException(tau)
		return thermal_point(j, tau, cross_check)

	monkeypatch.setattr(dimer, 'thermal_point', failing_point)

	def sweep_in_vietnamese():
		use_language('vi')
		with pytest.raises(BadTemperatureException) as info:
			thermal_sweep(-1.0, [0.5, 1.5, 0.7, 1.6], workers=2)
		return info.value.message

	english = copy_context().run(lambda: (use_language('en'), BadTemperatureException(1.5).message)[1])
	assert copy_context().run(sweep_in_vietnamese) != english


def test_concurrent_requests_keep_their_own_language():
	client = TestClient(create_app())
	body = {'amplitudes': [0, 0, 0, 0, 0, 0, 0, 0], 'normalize': True}
	langs = ['en', 'vi'] * 16

	def post(lang: str) -> tuple[str, str]:
		response = client.post('/api/v1/pure-state/evaluate', json=body, headers={'lang': lang})
		return lang, response.json()['message']

	with ThreadPoolExecutor(max_workers=8) as pool:
		results = list(pool.map(post, langs))
	for lang, message in results:
		assert message == (ENGLISH if lang == 'en' else VIETNAMESE)
