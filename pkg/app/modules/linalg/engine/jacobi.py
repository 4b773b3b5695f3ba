"""Cyclic Jacobi eigensolver for small Hermitian matrices

Each rotation first removes the phase of the pivot a[p, q] with a diagonal
unitary and then applies the real symmetric Jacobi rotation, so the whole
step is the 2x2 unitary

	G = [[c, s], [-s u, c u]],  u = conj(a_pq) / |a_pq|

acting on rows/columns p and q.
"""

import logging
import math
import sys

import numpy as np

from app.core.config import get_settings
from app.exceptions.exception import (
	NoConvergenceException,
	NonFiniteException,
	NotHermitianException,
	NotPositiveSemiDefiniteException,
)
from app.modules.linalg.engine.matrix_ops import hermiticity_deviation
from app.modules.linalg.schemas.linalg import ComplexMatrix, EigenSystem

logger = logging.getLogger(__name__)

EPS = sys.float_info.epsilon
TINY = sys.float_info.min


def _off_norm(a: np.ndarray) -> float:
	return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotation(a: np.ndarray, p: int, q: int) -> np.ndarray | None:
	beta = complex(a[p, q])
	b = abs(beta)
	alpha = a[p, p].real
	gamma = a[q, q].real
	# negligible or subnormal pivots are dropped instead of rotated
	if b < TINY or b <= EPS * (abs(alpha) + abs(gamma)):
		return None
	u = complex(beta.real / b, -beta.imag / b)
	zeta = (gamma - alpha) / (2.0 * b)
	t = math.copysign(1.0, zeta) / (abs(zeta) + math.sqrt(zeta * zeta + 1.0))
	c = 1.0 / math.sqrt(t * t + 1.0)
	s = t * c
	return np.array([[c, s], [-s * u, c * u]], dtype=complex)


def jacobi_hermitian(matrix: np.ndarray, offdiag_tol: float | None = None, max_sweeps: int | None = None) -> tuple[np.ndarray, np.ndarray]:
	"""Diagonalize a Hermitian array of any small size.

	Returns (values, vectors) with values sorted descending (stable for ties)
	and eigenvectors as the columns of `vectors`. The input is assumed
	Hermitian; only its Hermitian part is used.
	"""
	settings = get_settings()
	offdiag_tol = settings.EIGEN_OFFDIAG_TOL if offdiag_tol is None else offdiag_tol
	max_sweeps = settings.EIGEN_MAX_SWEEPS if max_sweeps is None else max_sweeps

	a = np.array(matrix, dtype=complex)
	if not np.all(np.isfinite(a)):
		raise NonFiniteException('matrix')
	a = (a + a.conj().T) / 2
	n = a.shape[0]
	v = np.eye(n, dtype=complex)
	threshold = offdiag_tol * max(1.0, float(np.linalg.norm(a)))

	sweeps = 0
	off = _off_norm(a)
	while not off <= threshold:
		if sweeps >= max_sweeps or not math.isfinite(off):
			raise NoConvergenceException(sweeps, off)
		for p in range(n - 1):
			for q in range(p + 1, n):
				g = _rotation(a, p, q)
				if g is None:
					a[p, q] = a[q, p] = 0.0
					continue
				idx = [p, q]
				a[:, idx] = a[:, idx] @ g
				a[idx, :] = g.conj().T @ a[idx, :]
				v[:, idx] = v[:, idx] @ g
				a[p, q] = a[q, p] = 0.0
		sweeps += 1
		off = _off_norm(a)

	values = np.real(np.diag(a)).copy()
	order = np.argsort(-values, kind='stable')
	logger.debug(f'Jacobi converged: n={n}, sweeps={sweeps}, off_norm={off:.3e}')
	return values[order], v[:, order]


def hermitian_eigen(m: ComplexMatrix, require_hermitian_tol: float | None = None) -> EigenSystem:
	"""Eigen-decomposition of a Hermitian 2x2 or 4x4 matrix"""
	tol = get_settings().HERMITIAN_TOL if require_hermitian_tol is None else require_hermitian_tol
	deviation = hermiticity_deviation(m)
	if deviation > tol:
		raise NotHermitianException(deviation, tol)
	values, vectors = jacobi_hermitian(m.entries)
	return EigenSystem(values=values, vectors=vectors)


def psd_sqrt(m: ComplexMatrix, clamp_tol: float | None = None) -> ComplexMatrix:
	"""Principal square root of a Hermitian positive semidefinite matrix.

	Eigenvalues in [-clamp_tol, 0) are treated as 0; clamp_tol defaults to
	PSD_CLAMP_TOL. Eigenvalues within 8 n EPS max|lambda| of zero are
	zeroed as well, so a projector is its own root.
	"""
	clamp_tol = get_settings().PSD_CLAMP_TOL if clamp_tol is None else clamp_tol
	eigen = hermitian_eigen(m)
	smallest = float(eigen.values[-1])
	if smallest < -clamp_tol:
		raise NotPositiveSemiDefiniteException(smallest, clamp_tol)
	values = eigen.values.copy()
	floor = 8 * values.size * EPS * float(np.max(np.abs(values)))
	values[np.abs(values) <= floor] = 0.0
	roots = np.sqrt(np.clip(values, 0.0, None))
	root = (eigen.vectors * roots) @ eigen.vectors.conj().T
	return ComplexMatrix(entries=(root + root.conj().T) / 2)


def singular_values(matrix: np.ndarray) -> np.ndarray:
	"""Singular values of a square array, descending.

	Read off as the non-negative half of the spectrum of the Hermitian
	dilation [[0, B], [B^dagger, 0]], whose eigenvalues are +-sigma_i.
	"""
	b = np.asarray(matrix, dtype=complex)
	n = b.shape[0]
	dilation = np.zeros((2 * n, 2 * n), dtype=complex)
	dilation[:n, n:] = b
	dilation[n:, :n] = b.conj().T
	values, _ = jacobi_hermitian(dilation)
	return np.clip(values[:n], 0.0, None)
