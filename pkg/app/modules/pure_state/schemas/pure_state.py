import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from app.core.base_model import ArrayModel, RequestSchema, ResponseSchema
from app.core.config import get_settings
from app.exceptions.exception import DimMismatchException, NonFiniteException, NotNormalizedException


class PureState(ArrayModel):
	"""a|00> + b|01> + c|10> + d|11>, normalized"""

	amplitudes: np.ndarray

	@field_validator('amplitudes', mode='before')
	@classmethod
	def _coerce(cls, value):
		array = np.array(value, dtype=complex).reshape(-1)
		if array.shape != (4,):
			raise DimMismatchException(array.shape)
		if not np.all(np.isfinite(array)):
			raise NonFiniteException('amplitudes')
		array.setflags(write=False)
		return array

	@model_validator(mode='after')
	def _check_norm(self):
		tol = get_settings().NORM_TOL
		norm_sq = float(np.sum(np.abs(self.amplitudes) ** 2))
		if abs(norm_sq - 1.0) > tol:
			raise NotNormalizedException(norm_sq, tol)
		return self

	@property
	def a(self) -> complex:
		return complex(self.amplitudes[0])

	@property
	def b(self) -> complex:
		return complex(self.amplitudes[1])

	@property
	def c(self) -> complex:
		return complex(self.amplitudes[2])

	@property
	def d(self) -> complex:
		return complex(self.amplitudes[3])

	def to_real_pairs(self) -> list[float]:
		"""re, im pairs in basis order"""
		return [float(x) for z in self.amplitudes for x in (z.real, z.imag)]


class PureEvalRequest(RequestSchema):
	"""Eight reals: (re, im) of a, b, c, d"""

	amplitudes: list[float] = Field(..., min_length=8, max_length=8, description='re,im pairs in basis order |00>,|01>,|10>,|11>')
	normalize: bool = Field(False, description='Divide by the Euclidean norm instead of requiring a unit vector')


class PureEvalResult(ResponseSchema):
	amplitudes: list[float] = Field(..., description='Normalized amplitudes as re,im pairs')
	c: float = Field(..., description='Concurrence 2|ad - bc|')
	e: float = Field(..., description='Entanglement E')
	delta_e: float = Field(..., description='Fluctuation Delta E')
	rel: float | None = Field(None, description='Delta E / E, empty when E = 0')
	lambda1: float = Field(..., description='Largest reduced eigenvalue')
	lambda2: float = Field(..., description='Smallest reduced eigenvalue')


class ReducedSpectrum(BaseModel):
	lambda1: float
	lambda2: float
