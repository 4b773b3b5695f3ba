import json
import math

import numpy as np
import pytest

from app.enums.entanglement_enums import BellStateEnum
from app.exceptions.exception import (
	BadBellWeightsException,
	BadTraceException,
	DensityFileException,
	DimMismatchException,
	NotHermitianException,
	NotPositiveSemiDefiniteException,
)
from app.modules.linalg import ComplexMatrix
from app.modules.linalg.engine.matrix_ops import hermiticity_deviation, outer
from app.modules.mixed_state.engine.bell import bell_concurrence, bell_mixture, werner_weights
from app.modules.mixed_state.engine.density import (
	dump_density_matrix,
	load_density_matrix,
	parse_density_payload,
	validate_density_matrix,
)
from app.modules.mixed_state.engine.hill_wootters import (
	concurrence_hw,
	hill_wootters_matrix,
	mixed_state_stats,
	spin_flip,
)
from app.modules.mixed_state.schemas.mixed_state import BellWeights
from app.modules.pure_state.engine.pure_state import bell_state, concurrence_pure, density_matrix

MAXIMALLY_MIXED = ComplexMatrix.diag([0.25] * 4)
BELL_ORDER = [BellStateEnum.PSI_PLUS, BellStateEnum.PSI_MINUS, BellStateEnum.PHI_PLUS, BellStateEnum.PHI_MINUS]


def pure_rho(psi):
	return validate_density_matrix(density_matrix(psi))


class TestValidateDensityMatrix:
	def test_maximally_mixed(self):
		rho = validate_density_matrix(MAXIMALLY_MIXED)
		assert rho.matrix.max_abs_diff(MAXIMALLY_MIXED) == 0.0

	def test_negative_eigenvalue(self):
		with pytest.raises(NotPositiveSemiDefiniteException) as info:
			validate_density_matrix(ComplexMatrix.diag([0.6, 0.6, -0.1, -0.1]))
		assert info.value.magnitude == pytest.approx(-0.1)

	def test_not_hermitian(self):
		entries = np.diag([0.25] * 4).astype(complex)
		entries[0, 1] = 0.1
		with pytest.raises(NotHermitianException):
			validate_density_matrix(ComplexMatrix(entries=entries))

	def test_bad_trace(self):
		with pytest.raises(BadTraceException) as info:
			validate_density_matrix(ComplexMatrix.diag([0.5] * 4))
		assert info.value.magnitude == pytest.approx(2.0)

	def test_two_by_two_is_rejected(self):
		with pytest.raises(DimMismatchException):
			validate_density_matrix(ComplexMatrix.diag([0.5, 0.5]))

	def test_keeps_hermitian_part(self):
		entries = np.diag([0.25] * 4).astype(complex)
		entries[0, 1] = 1e-11
		rho = validate_density_matrix(ComplexMatrix(entries=entries))
		assert hermiticity_deviation(rho.matrix) == 0.0
		assert rho.entries[0, 1] == pytest.approx(5e-12)


class TestSpinFlip:
	def test_maximally_mixed_is_fixed(self):
		rho = validate_density_matrix(MAXIMALLY_MIXED)
		assert spin_flip(rho).max_abs_diff(MAXIMALLY_MIXED) <= 1e-15

	def test_singlet_is_fixed(self):
		rho = pure_rho(bell_state(BellStateEnum.PSI_MINUS))
		assert spin_flip(rho).max_abs_diff(rho.matrix) <= 1e-15

	def test_maps_up_up_to_down_down(self):
		rho = validate_density_matrix(ComplexMatrix.diag([1, 0, 0, 0]))
		assert spin_flip(rho).max_abs_diff(ComplexMatrix.diag([0, 0, 0, 1])) == 0.0

	def test_involution(self, haar_state):
		for _ in range(20):
			rho = pure_rho(haar_state())
			flipped = validate_density_matrix(spin_flip(rho))
			assert spin_flip(flipped).max_abs_diff(rho.matrix) <= 1e-12


class TestHillWootters:
	def test_pure_states_match_closed_form(self, haar_state):
		worst = 0.0
		for _ in range(1000):
			psi = haar_state()
			worst = max(worst, abs(concurrence_hw(pure_rho(psi)).concurrence - concurrence_pure(psi)))
		assert worst <= 1e-9

	@pytest.mark.parametrize('label', BELL_ORDER)
	def test_bell_states(self, label):
		assert concurrence_hw(pure_rho(bell_state(label))).concurrence == pytest.approx(1.0, abs=1e-9)

	def test_werner_state(self):
		rho = bell_mixture(werner_weights(0.75))
		assert concurrence_hw(rho).concurrence == pytest.approx(0.5, abs=1e-9)

	def test_maximally_mixed(self):
		result = concurrence_hw(validate_density_matrix(MAXIMALLY_MIXED))
		assert result.concurrence == 0.0
		assert result.sqrt_eigenvalues == pytest.approx((0.25,) * 4, abs=1e-12)

	def test_sqrt_eigenvalues_of_bell_mixture_are_the_weights(self, dirichlet_weights):
		for _ in range(500):
			p = dirichlet_weights()
			result = concurrence_hw(bell_mixture(p))
			assert np.max(np.abs(np.array(result.sqrt_eigenvalues) - sorted(p.as_tuple(), reverse=True))) <= 1e-9
			assert result.concurrence == pytest.approx(bell_concurrence(p), abs=1e-9)

	@pytest.mark.parametrize(
		'weights',
		[(0.02623, 0.85198, 0.06109, 0.06070), (0.05, 0.8, 0.1, 0.05), (0.0, 1.0, 0.0, 0.0)],
	)
	def test_dominant_singlet_mixtures(self, weights):
		p = BellWeights(p1=weights[0], p2=weights[1], p3=weights[2], p4=weights[3])
		result = concurrence_hw(bell_mixture(p))
		assert all(np.isfinite(result.sqrt_eigenvalues))
		assert result.sqrt_eigenvalues == pytest.approx(sorted(weights, reverse=True), abs=1e-9)
		assert result.concurrence == pytest.approx(bell_concurrence(p), abs=1e-9)

	def test_hill_wootters_matrix_is_hermitian_psd(self, haar_state, dirichlet_weights):
		states = [pure_rho(haar_state()) for _ in range(20)] + [bell_mixture(dirichlet_weights()) for _ in range(20)]
		for rho in states:
			m = hill_wootters_matrix(rho)
			assert hermiticity_deviation(m) <= 1e-10
			assert np.linalg.eigvalsh((m.entries + m.entries.conj().T) / 2).min() >= -1e-10

	def test_mixture_of_two_product_states(self):
		up_up = outer(np.array([1, 0, 0, 0], dtype=complex)).entries
		down_down = outer(np.array([0, 0, 0, 1], dtype=complex)).entries
		rho = validate_density_matrix(ComplexMatrix(entries=(up_up + down_down) / 2))
		assert concurrence_hw(rho).concurrence == pytest.approx(0.0, abs=1e-12)

	def test_stats_follow_concurrence(self):
		result = mixed_state_stats(bell_mixture(werner_weights(0.75)))
		assert result.c == pytest.approx(0.5, abs=1e-9)
		assert result.e > 0.0
		assert result.rel == pytest.approx(result.delta_e / result.e)
		assert mixed_state_stats(validate_density_matrix(MAXIMALLY_MIXED)).rel is None


class TestBellMixture:
	def test_matches_direct_sum(self):
		p = BellWeights(p1=0.0, p2=0.75, p3=1 / 12, p4=1 - 0.75 - 1 / 12)
		expected = sum(w * density_matrix(bell_state(label)).entries for w, label in zip(p.as_tuple(), BELL_ORDER))
		assert np.max(np.abs(bell_mixture(p).entries - expected)) <= 1e-12

	def test_random_weights_match_direct_sum(self, dirichlet_weights):
		for _ in range(50):
			p = dirichlet_weights()
			expected = sum(w * density_matrix(bell_state(label)).entries for w, label in zip(p.as_tuple(), BELL_ORDER))
			assert np.max(np.abs(bell_mixture(p).entries - expected)) <= 1e-12

	def test_uniform_is_maximally_mixed(self):
		rho = bell_mixture(BellWeights(p1=0.25, p2=0.25, p3=0.25, p4=0.25))
		assert rho.matrix.max_abs_diff(MAXIMALLY_MIXED) <= 1e-15

	def test_closed_form_concurrence(self):
		assert bell_concurrence(werner_weights(0.75)) == pytest.approx(0.5)
		assert bell_concurrence(BellWeights(p1=0.25, p2=0.25, p3=0.25, p4=0.25)) == 0.0
		assert bell_concurrence(BellWeights(p1=0.5, p2=0.5, p3=0.0, p4=0.0)) == 0.0
		assert bell_concurrence(BellWeights(p1=0.0, p2=0.0, p3=1.0, p4=0.0)) == 1.0

	def test_negative_weight(self):
		with pytest.raises(BadBellWeightsException):
			BellWeights(p1=-0.1, p2=0.6, p3=0.25, p4=0.25)

	@pytest.mark.parametrize('bad', [math.nan, math.inf, -math.inf])
	def test_non_finite_weight(self, bad):
		with pytest.raises(BadBellWeightsException):
			BellWeights(p1=bad, p2=0.5, p3=0.25, p4=0.25)
		with pytest.raises(BadBellWeightsException):
			BellWeights(p1=0.25, p2=0.5, p3=0.25, p4=bad)

	def test_weights_must_sum_to_one(self):
		with pytest.raises(BadBellWeightsException) as info:
			BellWeights(p1=0.3, p2=0.3, p3=0.3, p4=0.3)
		assert info.value.magnitude == pytest.approx(1.2)


class TestDensityFile:
	def test_round_trip(self, tmp_path):
		rho = bell_mixture(werner_weights(0.75))
		path = tmp_path / 'rho.json'
		path.write_text(json.dumps(dump_density_matrix(rho)))
		assert load_density_matrix(path).matrix.max_abs_diff(rho.matrix) == 0.0

	def test_singlet_file(self, tmp_path):
		h = 0.5
		payload = {
			'rho': [
				[[0, 0], [0, 0], [0, 0], [0, 0]],
				[[0, 0], [h, 0], [-h, 0], [0, 0]],
				[[0, 0], [-h, 0], [h, 0], [0, 0]],
				[[0, 0], [0, 0], [0, 0], [0, 0]],
			]
		}
		path = tmp_path / 'singlet.json'
		path.write_text(json.dumps(payload))
		assert concurrence_hw(load_density_matrix(path)).concurrence == pytest.approx(1.0, abs=1e-9)

	def test_missing_file(self, tmp_path):
		with pytest.raises(DensityFileException):
			load_density_matrix(tmp_path / 'missing.json')

	def test_invalid_json(self, tmp_path):
		path = tmp_path / 'broken.json'
		path.write_text('{"rho": [')
		with pytest.raises(DensityFileException):
			load_density_matrix(path)

	def test_missing_key(self):
		with pytest.raises(DensityFileException):
			parse_density_payload({'matrix': []})

	def test_not_pairs(self):
		with pytest.raises(DensityFileException):
			parse_density_payload({'rho': [[['x', 0]]]})

	def test_invalid_matrix_is_reported_as_such(self, tmp_path):
		path = tmp_path / 'trace.json'
		path.write_text(json.dumps(dump_density_matrix(ComplexMatrix.diag([0.5] * 4))))
		with pytest.raises(BadTraceException):
			load_density_matrix(path)
