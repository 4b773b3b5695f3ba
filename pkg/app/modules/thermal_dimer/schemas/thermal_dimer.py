import math

from pydantic import BaseModel, Field, field_validator, model_validator

from app.core.base_model import RequestSchema
from app.enums.entanglement_enums import CouplingRegimeEnum
from app.exceptions.exception import BadTemperatureException, NonFiniteException, ZeroCouplingException


def check_coupling(j: float) -> float:
	j = float(j)
	if not math.isfinite(j):
		raise NonFiniteException('j')
	if j == 0.0:
		raise ZeroCouplingException(j)
	return j


def check_temperature(tau: float) -> float:
	tau = float(tau)
	if not (math.isfinite(tau) and tau > 0.0):
		raise BadTemperatureException(tau)
	return tau


class DimerParams(BaseModel):
	"""Exchange coupling j (k_B = 1) and temperature tau of a Heisenberg dimer"""

	j: float = Field(..., description='Signed exchange coupling; j < 0 is antiferromagnetic')
	tau: float = Field(..., description='Temperature k_B T in the units of j')

	@field_validator('j', mode='before')
	@classmethod
	def _check_j(cls, value):
		return check_coupling(value)

	@field_validator('tau', mode='before')
	@classmethod
	def _check_tau(cls, value):
		return check_temperature(value)

	@property
	def k(self) -> float:
		"""K = j / (2 tau)"""
		return self.j / (2.0 * self.tau)

	@property
	def regime(self) -> CouplingRegimeEnum:
		return CouplingRegimeEnum.ANTIFERROMAGNETIC if self.j < 0.0 else CouplingRegimeEnum.FERROMAGNETIC


class ThermalPoint(BaseModel):
	"""One temperature of a dimer sweep"""

	tau: float
	tau_over_te: float
	c: float = Field(..., ge=0.0, le=1.0)
	e: float
	delta_e: float
	rel: float | None = None
	hw_deviation: float | None = Field(None, description='|closed form - Hill-Wootters| when cross-checked')
	hw_mismatch: bool = Field(False, description='hw_deviation exceeded HW_CROSSCHECK_TOL')

	@model_validator(mode='after')
	def _separable_above_te(self):
		if self.tau_over_te >= 1.0 and self.c != 0.0:
			raise ValueError('concurrence must vanish at or above the entanglement temperature')
		return self


class DimerSweepRequest(RequestSchema):
	j: float = Field(-1.0, description='Exchange coupling')
	taus: list[float] = Field(..., min_length=1, description='Temperatures, each > 0')
	cross_check: bool = Field(False, description='Compare against the Hill-Wootters concurrence of the thermal state')


class DimerSweepResult(BaseModel):
	j: float
	regime: CouplingRegimeEnum
	tau_e: float
	points: list[ThermalPoint]
