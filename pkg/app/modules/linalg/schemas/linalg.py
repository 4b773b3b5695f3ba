"""Matrix value types

Matrices are stored row-major in the fixed basis |00>, |01>, |10>, |11>
(4x4) or |0>, |1> (2x2).
"""

from typing import Sequence

import numpy as np
from pydantic import field_validator

from app.core.base_model import ArrayModel
from app.exceptions.exception import DimMismatchException, NonFiniteException

SUPPORTED_DIMS = (2, 4)

# [re, im] pairs, as used by the density-matrix file format
ComplexPairs = list[list[tuple[float, float]]]


def _frozen(array: np.ndarray) -> np.ndarray:
	array.setflags(write=False)
	return array


class ComplexMatrix(ArrayModel):
	"""Dense complex matrix of dimension 2 or 4"""

	entries: np.ndarray

	@field_validator('entries', mode='before')
	@classmethod
	def _coerce_entries(cls, value):
		array = np.array(value, dtype=complex)
		if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] not in SUPPORTED_DIMS:
			raise DimMismatchException(array.shape)
		if not np.all(np.isfinite(array)):
			raise NonFiniteException('matrix')
		return _frozen(array)

	@property
	def dim(self) -> int:
		return self.entries.shape[0]

	@classmethod
	def identity(cls, dim: int) -> 'ComplexMatrix':
		return cls(entries=np.eye(dim, dtype=complex))

	@classmethod
	def diag(cls, values: Sequence[complex]) -> 'ComplexMatrix':
		return cls(entries=np.diag(np.asarray(values, dtype=complex)))

	@classmethod
	def from_pairs(cls, pairs: Sequence[Sequence[Sequence[float]]]) -> 'ComplexMatrix':
		"""Build from rows of [re, im] pairs"""
		array = np.asarray(pairs, dtype=float)
		if array.ndim != 3 or array.shape[-1] != 2:
			raise DimMismatchException(array.shape)
		return cls(entries=array[..., 0] + 1j * array[..., 1])

	def to_pairs(self) -> ComplexPairs:
		return [[(float(z.real), float(z.imag)) for z in row] for row in self.entries]

	def max_abs_diff(self, other: 'ComplexMatrix') -> float:
		"""Entrywise max norm of the difference"""
		if self.dim != other.dim:
			raise DimMismatchException(self.dim, other.dim)
		return float(np.max(np.abs(self.entries - other.entries)))

	def __matmul__(self, other: 'ComplexMatrix') -> 'ComplexMatrix':
		from app.modules.linalg.engine.matrix_ops import matmul

		return matmul(self, other)


class EigenSystem(ArrayModel):
	"""Eigenvalues sorted descending with their orthonormal eigenvectors as columns"""

	values: np.ndarray
	vectors: np.ndarray

	@field_validator('values', 'vectors', mode='before')
	@classmethod
	def _freeze(cls, value):
		return _frozen(np.array(value))

	def reconstruct(self) -> np.ndarray:
		"""V diag(values) V^dagger"""
		return (self.vectors * self.values) @ self.vectors.conj().T
