"""Entropy moments, entanglement and its fluctuations as functions of concurrence.

All entropies are in bits. A two-qubit reduced state has the spectrum
lambda_{1,2} = (1 +- sqrt(1 - C^2)) / 2, so every statistic of the entropy
operator S = -log2(rho_A) is a function of C alone. Eigenvalues equal to zero
contribute nothing (0 log 0 = 0).
"""

import logging
import math

from app.core.config import get_settings
from app.exceptions.exception import OutOfDomainException, UndefinedAtZeroException
from app.modules.measures.schemas.measures import ConcurrenceStats, EntanglementStats, EntropySpectrum

logger = logging.getLogger(__name__)

LN2 = math.log(2.0)


def check_unit_interval(value: float, name: str) -> float:
	"""Clamp values within DOMAIN_SLACK of [0, 1], reject the rest"""
	slack = get_settings().DOMAIN_SLACK
	value = float(value)
	if math.isnan(value) or value < -slack or value > 1.0 + slack:
		raise OutOfDomainException(name, value, 0.0, 1.0)
	return min(1.0, max(0.0, value))


def check_concurrence(c: float) -> float:
	return check_unit_interval(c, 'C')


def check_open_concurrence(c: float) -> float:
	"""Concurrence strictly inside (0, 1), as the boundary expansions require"""
	c = float(c)
	if not 0.0 < c < 1.0:
		raise OutOfDomainException('C', c, 0.0, 1.0, closed=False)
	return c


def sqrt_one_minus_c2(c: float) -> float:
	"""sqrt(1 - C^2), guarded at 0"""
	return math.sqrt(max(0.0, (1.0 - c) * (1.0 + c)))


def reduced_spectrum(c: float) -> tuple[float, float]:
	"""(lambda_1, lambda_2) with lambda_1 >= lambda_2.

	lambda_2 is taken from lambda_1 * lambda_2 = C^2 / 4, which keeps it
	accurate when C is small.
	"""
	c = check_concurrence(c)
	lam1 = (1.0 + sqrt_one_minus_c2(c)) / 2.0
	lam2 = c * c / (4.0 * lam1)
	return lam1, lam2


def _log2_pair(lam1: float, lam2: float) -> tuple[float, float]:
	# lambda_1 = 1 - lambda_2; log1p keeps log2(lambda_1) accurate near 1
	log_lam1 = math.log1p(-lam2) / LN2 if lam2 < 0.25 else math.log2(lam1)
	log_lam2 = math.log2(lam2) if lam2 > 0.0 else -math.inf
	return log_lam1, log_lam2


def _binary_entropy(x: float, y: float) -> float:
	total = 0.0
	for p in (x, y):
		if p > 0.0:
			total -= p * math.log2(p)
	return total


def shannon_h(x: float) -> float:
	"""H(x) = -x log2 x - (1 - x) log2 (1 - x)"""
	x = check_unit_interval(x, 'x')
	return _binary_entropy(x, 1.0 - x)


def entropy_operator_spectrum(c: float) -> EntropySpectrum:
	"""Eigenvalues of rho_A and of S = -log2(rho_A) (inf for a zero eigenvalue)"""
	lam1, lam2 = reduced_spectrum(c)
	log_lam1, log_lam2 = _log2_pair(lam1, lam2)
	return EntropySpectrum(weights=(lam1, lam2), entropy_values=(-log_lam1, -log_lam2))


def entropy_moment(c: float, k: int) -> float:
	"""k-th moment Tr(rho_A S^k) of the entropy operator"""
	if k < 0 or int(k) != k:
		raise OutOfDomainException('k', k, 0, math.inf)
	if k == 0:
		return 1.0
	lam1, lam2 = reduced_spectrum(c)
	log_lam1, log_lam2 = _log2_pair(lam1, lam2)
	moment = 0.0
	for lam, log_lam in ((lam1, log_lam1), (lam2, log_lam2)):
		if lam > 0.0:
			moment += lam * (-log_lam) ** k
	return moment


def entanglement(c: float) -> float:
	"""E(C) = H((1 + sqrt(1 - C^2)) / 2)"""
	return min(1.0, max(0.0, entropy_moment(c, 1)))


def fluctuation(c: float) -> float:
	"""Delta E(C) = C log2[(1 + sqrt(1 - C^2)) / C], zero at both ends"""
	c = check_concurrence(c)
	if c == 0.0:
		return 0.0
	return max(0.0, c * math.log2((1.0 + sqrt_one_minus_c2(c)) / c))


def fluctuation_via_moments(c: float) -> float:
	"""sqrt(<S^2> - <S>^2) from the first two entropy moments"""
	first = entropy_moment(c, 1)
	second = entropy_moment(c, 2)
	return math.sqrt(max(0.0, second - first * first))


def relative_fluctuation(c: float) -> float | None:
	"""Delta E / E; None at C = 0 where both vanish"""
	e = entanglement(c)
	if e == 0.0:
		return None
	return fluctuation(c) / e


def relative_fluctuation_or_raise(c: float) -> float:
	rel = relative_fluctuation(c)
	if rel is None:
		raise UndefinedAtZeroException()
	return rel


def entanglement_stats(c: float) -> EntanglementStats:
	e = entanglement(c)
	return EntanglementStats(e=e, delta_e=fluctuation(c), rel=relative_fluctuation(c))


def concurrence_stats(c: float, max_moment: int = 2) -> ConcurrenceStats:
	c = check_concurrence(c)
	moments = [entropy_moment(c, k) for k in range(max_moment + 1)]
	return ConcurrenceStats(c=c, stats=entanglement_stats(c), moments=moments)
