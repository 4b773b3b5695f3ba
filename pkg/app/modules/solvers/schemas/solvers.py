from pydantic import BaseModel, Field


class RootResult(BaseModel):
	"""Outcome of a bracketed root search"""

	value: float = Field(..., description='Located root')
	residual: float = Field(..., description='f(value)')
	iterations: int = Field(..., description='Brent iterations used')
	bracket: tuple[float, float] = Field(..., description='Initial bracket (lo, hi)')
	converged_by: str = Field(..., description="'residual' when |f| <= ftol, 'bracket' when the bracket shrank below xtol")


class FluctuationConstants(BaseModel):
	"""Characteristic constants where entanglement and its fluctuation meet"""

	c_f: float = Field(..., description='Concurrence with Delta E = E')
	c_f_residual: float = Field(..., description='Residual of the transcendental equation at c_f')
	tau_e: float = Field(..., description='Entanglement temperature in units of |J|')
	tau_e_residual: float = Field(..., description='Thermal concurrence at tau_e')
	tau_f: float = Field(..., description='Temperature with Delta E = E in units of |J|')
	tau_f_residual: float = Field(..., description='Delta E - E on the thermal curve at tau_f')
	tau_f_over_tau_e: float = Field(..., description='tau_f / tau_e')
