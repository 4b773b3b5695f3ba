"""Thermal equilibrium of the isotropic Heisenberg dimer.

The Gibbs state is a Werner-type Bell mixture: weight e^{-3K}/Z on the
singlet |Psi-> and e^{K}/Z on each triplet Bell state, with K = j / (2 tau)
and Z = 3 e^{K} + e^{-3K}. Weights are always normalized in log space
(shifted by the dominant exponent) so no exponential overflows.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from contextvars import copy_context
from typing import Sequence

from app.core.config import get_settings
from app.enums.entanglement_enums import CouplingRegimeEnum
from app.modules.measures.engine.measures import check_open_concurrence, entanglement_stats
from app.modules.mixed_state.engine.bell import bell_mixture
from app.modules.mixed_state.engine.hill_wootters import concurrence_hw
from app.modules.mixed_state.schemas.mixed_state import BellWeights, DensityMatrix
from app.modules.thermal_dimer.schemas.thermal_dimer import DimerParams, ThermalPoint, check_coupling, check_temperature

logger = logging.getLogger(__name__)

LN3 = math.log(3.0)


def _log_weights(p: DimerParams) -> tuple[float, float]:
	"""(log w_singlet, log w_triplet) before normalization"""
	return -3.0 * p.k, p.k


def log_partition_function(p: DimerParams) -> float:
	log_singlet, log_triplet = _log_weights(p)
	shift = max(log_singlet, log_triplet)
	return shift + math.log(math.exp(log_singlet - shift) + 3.0 * math.exp(log_triplet - shift))


def partition_function(p: DimerParams) -> float:
	"""Z = 3 e^K + e^{-3K}; +inf once it leaves the double range"""
	log_z = log_partition_function(p)
	try:
		return math.exp(log_z)
	except OverflowError:
		return math.inf


def thermal_weights(p: DimerParams) -> BellWeights:
	log_singlet, log_triplet = _log_weights(p)
	log_z = log_partition_function(p)
	singlet = math.exp(log_singlet - log_z)
	triplet = math.exp(log_triplet - log_z)
	return BellWeights(p1=triplet, p2=singlet, p3=triplet, p4=triplet)


def singlet_weight(p: DimerParams) -> float:
	return thermal_weights(p).p2


def thermal_state(p: DimerParams) -> DensityMatrix:
	return bell_mixture(thermal_weights(p))


def entanglement_temperature(j: float) -> float:
	"""tau_e = 2 |j| / ln 3; the thermal concurrence vanishes from here on"""
	return 2.0 * abs(check_coupling(j)) / LN3


def coupling_regime(j: float) -> CouplingRegimeEnum:
	return CouplingRegimeEnum.ANTIFERROMAGNETIC if check_coupling(j) < 0.0 else CouplingRegimeEnum.FERROMAGNETIC


def is_ferromagnetic(j: float) -> bool:
	return coupling_regime(j) is CouplingRegimeEnum.FERROMAGNETIC


def thermal_concurrence(p: DimerParams) -> float:
	"""-1 + 2 / (1 + 3 exp(-2|j|/tau)) below tau_e for j < 0, else 0"""
	if p.j > 0.0 or p.tau / entanglement_temperature(p.j) >= 1.0:
		return 0.0
	value = -1.0 + 2.0 / (1.0 + 3.0 * math.exp(-2.0 * abs(p.j) / p.tau))
	return min(1.0, max(0.0, value))


def fluctuation_equal_temperature(j: float, c_f: float) -> float:
	"""Temperature at which the thermal concurrence equals c_f"""
	j = check_coupling(j)
	c_f = check_open_concurrence(c_f)
	return abs(j) * 2.0 / math.log(3.0 * (1.0 + c_f) / (1.0 - c_f))


def thermal_point(j: float, tau: float, cross_check: bool = False) -> ThermalPoint:
	params = DimerParams(j=j, tau=tau)
	c = thermal_concurrence(params)
	stats = entanglement_stats(c)

	hw_deviation = None
	hw_mismatch = False
	if cross_check:
		hw_deviation = abs(concurrence_hw(thermal_state(params)).concurrence - c)
		hw_mismatch = hw_deviation > get_settings().HW_CROSSCHECK_TOL
		if hw_mismatch:
			logger.warning(f'Hill-Wootters cross-check deviates by {hw_deviation:.3e} at j={j}, tau={tau}')

	return ThermalPoint(
		tau=params.tau,
		tau_over_te=params.tau / entanglement_temperature(j),
		c=c,
		e=stats.e,
		delta_e=stats.delta_e,
		rel=stats.rel,
		hw_deviation=hw_deviation,
		hw_mismatch=hw_mismatch,
	)


def thermal_sweep(j: float, taus: Sequence[float], workers: int | None = None, cross_check: bool = False) -> list[ThermalPoint]:
	"""Evaluate every temperature; results follow the order of `taus`"""
	j = check_coupling(j)
	taus = [check_temperature(tau) for tau in taus]
	workers = get_settings().SWEEP_WORKERS if workers is None else workers
	logger.debug(f'Thermal sweep: j={j}, points={len(taus)}, workers={workers}, cross_check={cross_check}')

	if workers <= 1 or len(taus) < 2:
		return [thermal_point(j, tau, cross_check) for tau in taus]
	with ThreadPoolExecutor(max_workers=workers) as pool:
		# each task runs in a copy of the caller's context (message language)
		futures = [pool.submit(copy_context().run, thermal_point, j, tau, cross_check) for tau in taus]
		return [future.result() for future in futures]
