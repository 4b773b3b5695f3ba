import math

import numpy as np
from pydantic import BaseModel, Field, model_validator

from app.core.base_model import ArrayModel, RequestSchema, ResponseSchema
from app.core.config import get_settings
from app.exceptions.exception import BadBellWeightsException
from app.modules.linalg.schemas.linalg import ComplexMatrix, ComplexPairs


class DensityMatrix(ArrayModel):
	"""Validated 4x4 density matrix; build through validate_density_matrix"""

	matrix: ComplexMatrix

	@property
	def entries(self) -> np.ndarray:
		return self.matrix.entries


class BellWeights(BaseModel):
	"""Weights of |Psi+>, |Psi->, |Phi+>, |Phi-> in a Bell mixture"""

	p1: float = Field(..., description='|Psi+> weight')
	p2: float = Field(..., description='|Psi-> weight')
	p3: float = Field(..., description='|Phi+> weight')
	p4: float = Field(..., description='|Phi-> weight')

	@model_validator(mode='after')
	def _check_probabilities(self):
		tol = get_settings().BELL_WEIGHT_TOL
		weights = self.as_tuple()
		for weight in weights:
			if not math.isfinite(weight):
				raise BadBellWeightsException('non-finite weight', weight)
		smallest = min(weights)
		if smallest < 0.0:
			raise BadBellWeightsException('negative weight', smallest)
		total = sum(weights)
		if abs(total - 1.0) > tol:
			raise BadBellWeightsException(f'weights sum to {total!r}, tolerance {tol:g}', total)
		return self

	def as_tuple(self) -> tuple[float, float, float, float]:
		return (self.p1, self.p2, self.p3, self.p4)

	@property
	def p_max(self) -> float:
		return max(self.as_tuple())


class HillWoottersResult(BaseModel):
	"""Concurrence with the square roots of the eigenvalues of rho * rho_tilde, descending"""

	concurrence: float = Field(..., ge=0.0, le=1.0)
	sqrt_eigenvalues: tuple[float, float, float, float]


class RhoConcurrenceRequest(RequestSchema):
	"""Density matrix as a 4x4 array of [re, im] pairs, row-major"""

	rho: ComplexPairs = Field(..., description='4x4 array of [re, im] pairs in basis order |00>,|01>,|10>,|11>')


class MixedEvalResult(ResponseSchema):
	c: float = Field(..., description='Hill-Wootters concurrence')
	sqrt_lambdas: list[float] = Field(..., description='sqrt of the eigenvalues of R, descending')
	e: float = Field(..., description='Entanglement of formation')
	delta_e: float = Field(..., description='Fluctuation over the optimal ensemble')
	rel: float | None = Field(None, description='Delta E / E, empty when E = 0')


class BellEvalResult(ResponseSchema):
	p_max: float
	c_closed_form: float = Field(..., description='2 p_max - 1 or 0')
	c_hill_wootters: float
	sqrt_lambdas: list[float]
	e: float
	delta_e: float
	rel: float | None = None
