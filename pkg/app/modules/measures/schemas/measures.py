from typing import Annotated

from pydantic import BaseModel, Field, model_validator

from app.enums.entanglement_enums import AsymptoticLimitEnum

Concurrence = Annotated[float, Field(ge=0.0, le=1.0, description='Concurrence C in [0, 1]')]


class EntanglementStats(BaseModel):
	"""Entanglement E, its rms fluctuation and the relative fluctuation (bits)"""

	e: float = Field(..., ge=0.0, le=1.0, description='Entanglement E (first entropy moment)')
	delta_e: float = Field(..., ge=0.0, description='rms fluctuation Delta E')
	rel: float | None = Field(None, ge=0.0, description='Delta E / E, None where E = 0')

	@model_validator(mode='after')
	def _rel_undefined_iff_zero(self):
		if (self.rel is None) != (self.e == 0.0):
			raise ValueError('rel must be undefined exactly when e = 0')
		return self


class EntropySpectrum(BaseModel):
	"""Reduced-state eigenvalues with the matching entropy-operator eigenvalues -log2(lambda)"""

	weights: tuple[float, float]
	entropy_values: tuple[float, float]


class ConcurrenceStats(BaseModel):
	"""Everything derived from a single concurrence value"""

	c: Concurrence
	stats: EntanglementStats
	moments: list[float] = Field(default_factory=list, description='Entropy moments k = 0, 1, 2, ...')


class AsymptoticsReport(BaseModel):
	"""Boundary expansions side by side with the exact values"""

	c: float
	limit: AsymptoticLimitEnum
	entanglement: float
	entanglement_exact: float
	fluctuation: float
	fluctuation_exact: float
	relative: float
	relative_exact: float | None


class EntanglementInversion(BaseModel):
	"""Concurrence and fluctuation recovered from a measured E"""

	e: float = Field(..., ge=0.0, le=1.0)
	c: Concurrence
	delta_e: float = Field(..., ge=0.0)
	rel: float | None = None
