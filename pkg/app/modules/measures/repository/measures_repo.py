"""Measures repo"""

from app.core.base_model import APIResponse
from app.core.base_repo import BaseRepo
from app.enums.base_enums import BaseErrorCode
from app.enums.entanglement_enums import AsymptoticLimitEnum
from app.middleware.translation_manager import _
from app.modules.measures.engine.asymptotics import asymptotics_report
from app.modules.measures.engine.inverse import invert_entanglement
from app.modules.measures.engine.measures import concurrence_stats
from app.modules.solvers.engine.fluctuation_roots import fluctuation_constants


class MeasuresRepo(BaseRepo):
	"""MeasuresRepo"""

	def stats(self, c: float, max_moment: int = 2) -> APIResponse:
		result = concurrence_stats(c, max_moment=max_moment)
		return APIResponse(error_code=BaseErrorCode.ERROR_CODE_SUCCESS, message=_('measures_evaluated'), data=result)

	def asymptotics(self, c: float, limit: AsymptoticLimitEnum) -> APIResponse:
		result = asymptotics_report(c, limit)
		return APIResponse(error_code=BaseErrorCode.ERROR_CODE_SUCCESS, message=_('asymptotics_evaluated'), data=result)

	def from_entanglement(self, e: float) -> APIResponse:
		result = invert_entanglement(e)
		self.logger.info(f'Inverted E={e:.12g} to C={result.c:.12g}')
		return APIResponse(error_code=BaseErrorCode.ERROR_CODE_SUCCESS, message=_('entanglement_inverted'), data=result)

	def constants(self) -> APIResponse:
		"""C_f, tau_e, tau_f and tau_f / tau_e with their residuals"""
		result = fluctuation_constants()
		self.logger.info(f'Constants: c_f={result.c_f:.12g}, tau_f={result.tau_f:.12g}')
		return APIResponse(error_code=BaseErrorCode.ERROR_CODE_SUCCESS, message=_('constants_evaluated'), data=result)
