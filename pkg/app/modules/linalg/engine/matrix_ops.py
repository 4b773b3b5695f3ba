"""Elementary matrix algebra on ComplexMatrix values"""

import numpy as np

from app.exceptions.exception import DimMismatchException
from app.modules.linalg.schemas.linalg import ComplexMatrix

# sigma_y (x) sigma_y in the |00>,|01>,|10>,|11> basis
SIGMA_Y_SIGMA_Y = ComplexMatrix(
	entries=[
		[0, 0, 0, -1],
		[0, 0, 1, 0],
		[0, 1, 0, 0],
		[-1, 0, 0, 0],
	]
)


def _check_same_dim(a: ComplexMatrix, b: ComplexMatrix):
	if a.dim != b.dim:
		raise DimMismatchException(a.dim, b.dim)


def matmul(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
	_check_same_dim(a, b)
	return ComplexMatrix(entries=a.entries @ b.entries)


def add(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
	_check_same_dim(a, b)
	return ComplexMatrix(entries=a.entries + b.entries)


def scale(a: ComplexMatrix, factor: complex) -> ComplexMatrix:
	return ComplexMatrix(entries=a.entries * factor)


def conjugate(a: ComplexMatrix) -> ComplexMatrix:
	return ComplexMatrix(entries=a.entries.conj())


def adjoint(a: ComplexMatrix) -> ComplexMatrix:
	return ComplexMatrix(entries=a.entries.conj().T)


def trace(a: ComplexMatrix) -> complex:
	return complex(np.trace(a.entries))


def hermitian_part(a: ComplexMatrix) -> ComplexMatrix:
	"""(A + A^dagger) / 2"""
	return ComplexMatrix(entries=(a.entries + a.entries.conj().T) / 2)


def hermiticity_deviation(a: ComplexMatrix) -> float:
	"""Entrywise max of |A - A^dagger|"""
	return float(np.max(np.abs(a.entries - a.entries.conj().T)))


def outer(ket: np.ndarray) -> ComplexMatrix:
	"""|ket><ket|"""
	ket = np.asarray(ket, dtype=complex)
	return ComplexMatrix(entries=np.outer(ket, ket.conj()))


def kron(a: ComplexMatrix, b: ComplexMatrix) -> ComplexMatrix:
	"""Tensor product of two single-qubit operators"""
	if a.dim != 2 or b.dim != 2:
		raise DimMismatchException(a.dim, b.dim)
	return ComplexMatrix(entries=np.kron(a.entries, b.entries))
