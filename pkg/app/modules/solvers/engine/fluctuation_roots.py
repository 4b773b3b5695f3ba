"""Where entanglement and its fluctuation meet.

C_f solves (C + sqrt(1 - C^2)) ln[(1 + sqrt(1 - C^2)) / C] = ln(2 / C), which
is (Delta E - E) ln 2 = 0 rewritten. The dimer reaches C_f at
tau_f = 2 |j| / ln[3 (1 + C_f) / (1 - C_f)].
"""

import logging
import math

from app.exceptions.exception import NoSignChangeException
from app.modules.measures.engine.measures import entanglement, fluctuation, sqrt_one_minus_c2
from app.modules.solvers.engine.brent import find_root
from app.modules.solvers.schemas.solvers import FluctuationConstants, RootResult
from app.modules.thermal_dimer.engine.dimer import (
	entanglement_temperature,
	fluctuation_equal_temperature,
	thermal_concurrence,
)
from app.modules.thermal_dimer.schemas.thermal_dimer import DimerParams

logger = logging.getLogger(__name__)

C_F_BRACKET = (0.5, 0.99)
C_F_FALLBACK_BRACKET = (0.01, 0.999)
CROSSING_TOL = 1e-10
REFERENCE_COUPLING = -1.0


def c_f_equation(c: float) -> float:
	"""Left minus right side of the transcendental equation for C_f"""
	s = sqrt_one_minus_c2(c)
	return (c + s) * math.log((1.0 + s) / c) - math.log(2.0 / c)


def crossing_difference(c: float) -> float:
	return fluctuation(c) - entanglement(c)


def _bracketed(f, xtol: float | None) -> RootResult:
	try:
		return find_root(f, *C_F_BRACKET, xtol=xtol)
	except NoSignChangeException:
		logger.warning(f'No sign change on {C_F_BRACKET}, retrying on {C_F_FALLBACK_BRACKET}')
		return find_root(f, *C_F_FALLBACK_BRACKET, xtol=xtol)


def solve_c_f(xtol: float | None = None) -> RootResult:
	result = _bracketed(c_f_equation, xtol)
	gap = abs(crossing_difference(result.value))
	if gap > CROSSING_TOL:
		logger.warning(f'C_f={result.value!r} leaves |Delta E - E|={gap:.3e}')
	return result


def solve_c_f_crossing(xtol: float | None = None) -> RootResult:
	"""C_f as the root of Delta E(C) - E(C) itself"""
	return _bracketed(crossing_difference, xtol)


def solve_tau_f() -> tuple[float, float]:
	"""(tau_f, tau_f / tau_e) for |j| = 1"""
	c_f = solve_c_f().value
	tau_f = fluctuation_equal_temperature(REFERENCE_COUPLING, c_f)
	return tau_f, tau_f / entanglement_temperature(REFERENCE_COUPLING)


def fluctuation_constants() -> FluctuationConstants:
	c_f = solve_c_f()
	tau_e = entanglement_temperature(REFERENCE_COUPLING)
	tau_f, ratio = solve_tau_f()
	c_at_tau_f = thermal_concurrence(DimerParams(j=REFERENCE_COUPLING, tau=tau_f))
	return FluctuationConstants(
		c_f=c_f.value,
		c_f_residual=c_f.residual,
		tau_e=tau_e,
		tau_e_residual=thermal_concurrence(DimerParams(j=REFERENCE_COUPLING, tau=tau_e)),
		tau_f=tau_f,
		tau_f_residual=crossing_difference(c_at_tau_f),
		tau_f_over_tau_e=ratio,
	)
