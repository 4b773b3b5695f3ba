from fastapi import APIRouter, Depends

from app.core.base_model import APIResponse
from app.exceptions.handlers import handle_exceptions
from app.modules.thermal_dimer.repository.thermal_dimer_repo import ThermalDimerRepo
from app.modules.thermal_dimer.schemas.thermal_dimer import DimerSweepRequest

route = APIRouter(prefix='/thermal-dimer', tags=['Thermal dimer'])


@route.post('/sweep', response_model=APIResponse)
@handle_exceptions
async def sweep(
	request: DimerSweepRequest,
	repo: ThermalDimerRepo = Depends(),
):
	"""
	Thermal concurrence, E, Delta E and Delta E / E for each temperature

	Set cross_check to compare every point with the Hill-Wootters concurrence
	of the thermal density matrix.
	"""
	return repo.sweep(request)
