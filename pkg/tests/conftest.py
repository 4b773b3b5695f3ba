"""Shared fixtures: seeded generators, Haar-random pure states, Dirichlet Bell weights"""

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from app.modules.mixed_state.schemas.mixed_state import BellWeights
from app.modules.pure_state.schemas.pure_state import PureState

settings.register_profile('ci', max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile('ci')

SEED = 20240521


def haar_amplitudes(rng: np.random.Generator) -> np.ndarray:
	"""Four independent standard complex Gaussians, normalized"""
	z = rng.standard_normal(4) + 1j * rng.standard_normal(4)
	return z / np.linalg.norm(z)


def random_hermitian(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
	a = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
	return (a + a.conj().T) / 2


@pytest.fixture
def rng():
	return np.random.default_rng(SEED)


@pytest.fixture
def haar_state(rng):
	def make() -> PureState:
		return PureState(amplitudes=haar_amplitudes(rng))

	return make


@pytest.fixture
def dirichlet_weights(rng):
	def make() -> BellWeights:
		p = rng.dirichlet(np.ones(4))
		return BellWeights(p1=p[0], p2=p[1], p3=p[2], p4=p[3])

	return make
