from fastapi import APIRouter, Depends

from app.core.base_model import APIResponse
from app.exceptions.handlers import handle_exceptions
from app.modules.mixed_state.repository.mixed_state_repo import MixedStateRepo
from app.modules.mixed_state.schemas.mixed_state import BellWeights, RhoConcurrenceRequest

route = APIRouter(prefix='/mixed-state', tags=['Mixed state'])


@route.post('/concurrence', response_model=APIResponse)
@handle_exceptions
async def rho_concurrence(
	request: RhoConcurrenceRequest,
	repo: MixedStateRepo = Depends(),
):
	"""Hill-Wootters concurrence and entanglement statistics of a density matrix"""
	return repo.concurrence(request)


@route.post('/bell', response_model=APIResponse)
@handle_exceptions
async def bell_mixture_concurrence(
	weights: BellWeights,
	repo: MixedStateRepo = Depends(),
):
	"""Bell mixture with weights for |Psi+>, |Psi->, |Phi+>, |Phi->"""
	return repo.bell(weights)
