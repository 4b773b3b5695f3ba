from fastapi import APIRouter, Depends, Query

from app.core.base_model import APIResponse
from app.enums.entanglement_enums import AsymptoticLimitEnum
from app.exceptions.handlers import handle_exceptions
from app.modules.measures.repository.measures_repo import MeasuresRepo

route = APIRouter(prefix='/measures', tags=['Measures'])


@route.get('/stats', response_model=APIResponse)
@handle_exceptions
async def concurrence_stats(
	c: float = Query(..., description='Concurrence in [0, 1]'),
	max_moment: int = Query(2, ge=0, le=8),
	repo: MeasuresRepo = Depends(),
):
	"""E, Delta E, Delta E / E and the entropy moments for a concurrence"""
	return repo.stats(c, max_moment)


@route.get('/asymptotics', response_model=APIResponse)
@handle_exceptions
async def asymptotics(
	c: float = Query(..., description='Concurrence strictly inside (0, 1)'),
	limit: AsymptoticLimitEnum = Query(AsymptoticLimitEnum.NEAR_ZERO),
	repo: MeasuresRepo = Depends(),
):
	return repo.asymptotics(c, limit)


@route.get('/from-entanglement', response_model=APIResponse)
@handle_exceptions
async def from_entanglement(
	e: float = Query(..., description='Measured entanglement E in [0, 1]'),
	repo: MeasuresRepo = Depends(),
):
	"""Concurrence and Delta E implied by a measured E"""
	return repo.from_entanglement(e)


@route.get('/constants', response_model=APIResponse)
@handle_exceptions
async def constants(repo: MeasuresRepo = Depends()):
	"""C_f, tau_e, tau_f and tau_f / tau_e"""
	return repo.constants()
