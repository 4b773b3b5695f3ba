"""Delta E as a function of E, through the parametric pair E(C), Delta E(C)"""

from app.modules.measures.engine.measures import check_unit_interval, entanglement, entanglement_stats, fluctuation
from app.modules.measures.schemas.measures import EntanglementInversion
from app.modules.solvers.engine.brent import find_root


def concurrence_from_entanglement(e: float) -> float:
	"""Invert E(C); E is strictly increasing on [0, 1]"""
	e = check_unit_interval(e, 'E')
	if e == 0.0 or e == 1.0:
		return e
	return find_root(lambda c: entanglement(c) - e, 0.0, 1.0).value


def fluctuation_from_entanglement(e: float) -> float:
	return fluctuation(concurrence_from_entanglement(e))


def invert_entanglement(e: float) -> EntanglementInversion:
	"""C, Delta E and Delta E / E for a measured E"""
	e = check_unit_interval(e, 'E')
	c = concurrence_from_entanglement(e)
	stats = entanglement_stats(c)
	return EntanglementInversion(e=e, c=c, delta_e=stats.delta_e, rel=stats.rel)
