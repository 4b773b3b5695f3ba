"""Leading behaviour of E, Delta E and Delta E / E near C = 0 and C = 1"""

import math

from app.enums.entanglement_enums import AsymptoticLimitEnum
from app.modules.measures.engine.measures import (
	LN2,
	check_open_concurrence,
	entanglement,
	fluctuation,
	relative_fluctuation,
)
from app.modules.measures.schemas.measures import AsymptoticsReport

SQRT2_OVER_LN2 = math.sqrt(2.0) / LN2


def asymptotic_entanglement(c: float, limit: AsymptoticLimitEnum) -> float:
	c = check_open_concurrence(c)
	if AsymptoticLimitEnum(limit) is AsymptoticLimitEnum.NEAR_ZERO:
		return -0.5 * c * c * math.log2(c / (2.0 * math.sqrt(math.e)))
	return 1.0 - (1.0 - c) / LN2


def asymptotic_fluctuation(c: float, limit: AsymptoticLimitEnum) -> float:
	c = check_open_concurrence(c)
	if AsymptoticLimitEnum(limit) is AsymptoticLimitEnum.NEAR_ZERO:
		return -c * math.log2(c / 2.0)
	return SQRT2_OVER_LN2 * math.sqrt(1.0 - c)


def asymptotic_relative(c: float, limit: AsymptoticLimitEnum) -> float:
	c = check_open_concurrence(c)
	if AsymptoticLimitEnum(limit) is AsymptoticLimitEnum.NEAR_ZERO:
		return (2.0 / c) / (1.0 - 1.0 / (2.0 * math.log(c / 2.0)))
	# E -> 1 at this end, so the relative and absolute fluctuations coincide
	return SQRT2_OVER_LN2 * math.sqrt(1.0 - c)


def asymptotics_report(c: float, limit: AsymptoticLimitEnum) -> AsymptoticsReport:
	limit = AsymptoticLimitEnum(limit)
	return AsymptoticsReport(
		c=c,
		limit=limit,
		entanglement=asymptotic_entanglement(c, limit),
		entanglement_exact=entanglement(c),
		fluctuation=asymptotic_fluctuation(c, limit),
		fluctuation_exact=fluctuation(c),
		relative=asymptotic_relative(c, limit),
		relative_exact=relative_fluctuation(c),
	)
