"""Thermal dimer repo"""

from app.core.base_model import APIResponse
from app.core.base_repo import BaseRepo
from app.enums.base_enums import BaseErrorCode
from app.middleware.translation_manager import _
from app.modules.thermal_dimer.engine.dimer import coupling_regime, entanglement_temperature, thermal_sweep
from app.modules.thermal_dimer.schemas.thermal_dimer import DimerSweepRequest, DimerSweepResult


class ThermalDimerRepo(BaseRepo):
	"""ThermalDimerRepo"""

	def sweep(self, request: DimerSweepRequest) -> APIResponse:
		self.logger.info(f'Dimer sweep: j={request.j}, points={len(request.taus)}')
		points = thermal_sweep(request.j, request.taus, workers=self.settings.SWEEP_WORKERS, cross_check=request.cross_check)
		mismatches = sum(point.hw_mismatch for point in points)
		if mismatches:
			self.logger.error(f'{mismatches} sweep points failed the Hill-Wootters cross-check')
		result = DimerSweepResult(
			j=request.j,
			regime=coupling_regime(request.j),
			tau_e=entanglement_temperature(request.j),
			points=points,
		)
		return APIResponse(error_code=BaseErrorCode.ERROR_CODE_SUCCESS, message=_('dimer_sweep_completed'), data=result)
