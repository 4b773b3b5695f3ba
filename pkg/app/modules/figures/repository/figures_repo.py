"""Figures repo"""

from pathlib import Path

from app.core.base_model import APIResponse
from app.core.base_repo import BaseRepo
from app.enums.base_enums import BaseErrorCode
from app.enums.entanglement_enums import FigureEnum
from app.middleware.translation_manager import _
from app.modules.figures.engine.figures import default_spec, figure_table
from app.modules.figures.engine.table_io import render_csv, write_csv
from app.modules.figures.schemas.figures import FigureTable


class FiguresRepo(BaseRepo):
	"""FiguresRepo"""

	def build(self, which: FigureEnum, start: float | None = None, stop: float | None = None, points: int | None = None) -> FigureTable:
		spec = default_spec(which, start=start, stop=stop, points=points)
		return figure_table(which, spec)

	def csv_text(self, which: FigureEnum, start: float | None = None, stop: float | None = None, points: int | None = None) -> str:
		return render_csv(self.build(which, start, stop, points))

	def export(self, which: FigureEnum, out: str | Path, start: float | None = None, stop: float | None = None, points: int | None = None) -> APIResponse:
		table = self.build(which, start, stop, points)
		path = write_csv(table, out)
		return APIResponse(
			error_code=BaseErrorCode.ERROR_CODE_SUCCESS,
			message=_('figure_generated'),
			data={'figure': table.figure.value, 'path': str(path), 'rows': len(table.rows)},
		)
