from fastapi import APIRouter, Depends, Query
from fastapi.responses import PlainTextResponse

from app.enums.entanglement_enums import FigureEnum
from app.exceptions.handlers import handle_exceptions
from app.modules.figures.repository.figures_repo import FiguresRepo

route = APIRouter(prefix='/figures', tags=['Figures'])


@route.get('/{which}', response_class=PlainTextResponse)
@handle_exceptions
async def figure_csv(
	which: FigureEnum,
	start: float | None = Query(None),
	stop: float | None = Query(None),
	points: int | None = Query(None),
	repo: FiguresRepo = Depends(),
):
	"""Figure dataset as CSV, byte-identical to the `fig` command output"""
	return PlainTextResponse(repo.csv_text(which, start, stop, points), media_type='text/csv')
