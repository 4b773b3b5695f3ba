"""Hill-Wootters concurrence of a two-qubit density matrix.

The spectrum of R = rho * rho_tilde equals that of the Hermitian matrix
M = sqrt(rho) rho_tilde sqrt(rho) = B B^dagger with
B = sqrt(rho) (Y sqrt(rho)* Y), Y = sigma_y x sigma_y. The square roots of
R's eigenvalues are therefore the singular values of B.
"""

import logging

import numpy as np

from app.core.config import get_settings
from app.modules.linalg.engine.jacobi import psd_sqrt, singular_values
from app.modules.linalg.engine.matrix_ops import SIGMA_Y_SIGMA_Y
from app.modules.linalg.schemas.linalg import ComplexMatrix
from app.modules.measures.engine.measures import entanglement_stats
from app.modules.mixed_state.schemas.mixed_state import DensityMatrix, HillWoottersResult, MixedEvalResult

logger = logging.getLogger(__name__)

_Y = SIGMA_Y_SIGMA_Y.entries


def _flip(entries: np.ndarray) -> np.ndarray:
	return _Y @ entries.conj() @ _Y


def spin_flip(rho: DensityMatrix) -> ComplexMatrix:
	"""rho_tilde = (sigma_y x sigma_y) rho* (sigma_y x sigma_y)"""
	return ComplexMatrix(entries=_flip(rho.entries))


def _sqrt_rho(rho: DensityMatrix) -> np.ndarray:
	return psd_sqrt(rho.matrix, clamp_tol=get_settings().DENSITY_TOL).entries


def hill_wootters_matrix(rho: DensityMatrix) -> ComplexMatrix:
	"""M = sqrt(rho) rho_tilde sqrt(rho), same spectrum as rho * rho_tilde"""
	root = _sqrt_rho(rho)
	return ComplexMatrix(entries=root @ _flip(rho.entries) @ root)


def concurrence_hw(rho: DensityMatrix) -> HillWoottersResult:
	root = _sqrt_rho(rho)
	sqrt_lambdas = singular_values(root @ _flip(root))
	value = sqrt_lambdas[0] - sqrt_lambdas[1] - sqrt_lambdas[2] - sqrt_lambdas[3]
	concurrence = min(1.0, max(0.0, float(value)))
	logger.debug(f'Hill-Wootters: sqrt_lambdas={sqrt_lambdas.tolist()}, C={concurrence:.12g}')
	return HillWoottersResult(concurrence=concurrence, sqrt_eigenvalues=tuple(float(x) for x in sqrt_lambdas))


def mixed_state_stats(rho: DensityMatrix) -> MixedEvalResult:
	"""C, sqrt(lambda_i) and the entanglement statistics of the optimal ensemble"""
	hw = concurrence_hw(rho)
	stats = entanglement_stats(hw.concurrence)
	return MixedEvalResult(
		c=hw.concurrence,
		sqrt_lambdas=list(hw.sqrt_eigenvalues),
		e=stats.e,
		delta_e=stats.delta_e,
		rel=stats.rel,
	)
