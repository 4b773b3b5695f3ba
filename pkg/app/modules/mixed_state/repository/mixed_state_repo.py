"""Mixed state repo"""

from pathlib import Path

from app.core.base_model import APIResponse
from app.core.base_repo import BaseRepo
from app.enums.base_enums import BaseErrorCode
from app.middleware.translation_manager import _
from app.modules.measures.engine.measures import entanglement_stats
from app.modules.mixed_state.engine.bell import bell_concurrence, bell_mixture
from app.modules.mixed_state.engine.density import load_density_matrix, parse_density_payload
from app.modules.mixed_state.engine.hill_wootters import concurrence_hw, mixed_state_stats
from app.modules.mixed_state.schemas.mixed_state import BellEvalResult, BellWeights, DensityMatrix, RhoConcurrenceRequest


class MixedStateRepo(BaseRepo):
	"""MixedStateRepo"""

	def _evaluate(self, rho: DensityMatrix) -> APIResponse:
		result = mixed_state_stats(rho)
		self.logger.info(f'Hill-Wootters concurrence C={result.c:.12g}')
		return APIResponse(error_code=BaseErrorCode.ERROR_CODE_SUCCESS, message=_('mixed_state_evaluated'), data=result)

	def concurrence(self, request: RhoConcurrenceRequest) -> APIResponse:
		rho = parse_density_payload(request.model_dump(), source='request body')
		return self._evaluate(rho)

	def concurrence_from_file(self, path: str | Path) -> APIResponse:
		self.logger.info(f'Loading density matrix from {path}')
		return self._evaluate(load_density_matrix(path))

	def bell(self, weights: BellWeights) -> APIResponse:
		"""Closed-form and Hill-Wootters concurrence of a Bell mixture"""
		hw = concurrence_hw(bell_mixture(weights))
		stats = entanglement_stats(hw.concurrence)
		result = BellEvalResult(
			p_max=weights.p_max,
			c_closed_form=bell_concurrence(weights),
			c_hill_wootters=hw.concurrence,
			sqrt_lambdas=list(hw.sqrt_eigenvalues),
			e=stats.e,
			delta_e=stats.delta_e,
			rel=stats.rel,
		)
		return APIResponse(error_code=BaseErrorCode.ERROR_CODE_SUCCESS, message=_('bell_mixture_evaluated'), data=result)
