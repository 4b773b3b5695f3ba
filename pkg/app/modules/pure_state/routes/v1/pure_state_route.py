from fastapi import APIRouter, Depends

from app.core.base_model import APIResponse
from app.exceptions.handlers import handle_exceptions
from app.modules.pure_state.repository.pure_state_repo import PureStateRepo
from app.modules.pure_state.schemas.pure_state import PureEvalRequest

route = APIRouter(prefix='/pure-state', tags=['Pure state'])


@route.post('/evaluate', response_model=APIResponse)
@handle_exceptions
async def evaluate_pure_state(
	request: PureEvalRequest,
	repo: PureStateRepo = Depends(),
):
	"""
	Evaluate a two-qubit pure state a|00> + b|01> + c|10> + d|11>

	Returns C = 2|ad - bc|, E, Delta E, Delta E / E and the reduced eigenvalues.
	"""
	return repo.evaluate(request)
