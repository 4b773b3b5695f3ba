"""Pure state repo"""

from app.core.base_model import APIResponse
from app.core.base_repo import BaseRepo
from app.enums.base_enums import BaseErrorCode
from app.middleware.translation_manager import _
from app.modules.measures.engine.measures import entanglement_stats
from app.modules.pure_state.engine.pure_state import concurrence_pure, from_real_pairs, reduced_eigenvalues
from app.modules.pure_state.schemas.pure_state import PureEvalRequest, PureEvalResult


class PureStateRepo(BaseRepo):
	"""PureStateRepo"""

	def evaluate(self, request: PureEvalRequest) -> APIResponse:
		"""
		Concurrence, entanglement statistics and reduced spectrum of a pure state

		Args:
		    request: eight reals (re, im per amplitude) and the normalize flag

		Returns:
		    APIResponse with a PureEvalResult payload
		"""
		self.logger.info(f'Evaluating pure state, normalize={request.normalize}')
		psi = from_real_pairs(request.amplitudes, normalize=request.normalize)
		c = concurrence_pure(psi)
		stats = entanglement_stats(c)
		lam1, lam2 = reduced_eigenvalues(psi)
		result = PureEvalResult(
			amplitudes=psi.to_real_pairs(),
			c=c,
			e=stats.e,
			delta_e=stats.delta_e,
			rel=stats.rel,
			lambda1=lam1,
			lambda2=lam2,
		)
		return APIResponse(error_code=BaseErrorCode.ERROR_CODE_SUCCESS, message=_('pure_state_evaluated'), data=result)
