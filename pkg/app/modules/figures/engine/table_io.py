"""CSV rendering: header row, comma delimiter, LF endings, %.12g numbers, empty cell for undefined"""

import csv
import io
import logging
from pathlib import Path
from typing import Sequence

from app.core.config import get_settings
from app.exceptions.exception import UnwritablePathException
from app.modules.figures.schemas.figures import FigureTable

logger = logging.getLogger(__name__)


def format_value(value: float | bool | None, digits: int | None = None) -> str:
	if value is None:
		return ''
	if isinstance(value, bool):
		return '1' if value else '0'
	digits = get_settings().CSV_SIGNIFICANT_DIGITS if digits is None else digits
	return f'{value:.{digits}g}'


def render_rows(columns: Sequence[str], rows: Sequence[Sequence[float | bool | None]]) -> str:
	buffer = io.StringIO()
	writer = csv.writer(buffer, lineterminator='\n')
	writer.writerow(columns)
	for row in rows:
		writer.writerow([format_value(value) for value in row])
	return buffer.getvalue()


def render_csv(table: FigureTable) -> str:
	return render_rows(table.columns, table.rows)


def parse_csv(text: str) -> tuple[list[str], list[list[float | None]]]:
	"""Inverse of render_rows up to the printed precision"""
	reader = csv.reader(io.StringIO(text))
	header = next(reader)
	rows = [[float(cell) if cell else None for cell in row] for row in reader]
	return header, rows


def write_text(text: str, path: str | Path) -> Path:
	path = Path(path)
	try:
		with open(path, 'w', encoding='utf-8', newline='') as f:
			f.write(text)
	except OSError as ex:
		raise UnwritablePathException(str(path), ex.strerror or str(ex))
	return path


def write_csv(table: FigureTable, path: str | Path) -> Path:
	path = write_text(render_csv(table), path)
	logger.info(f'Wrote figure {table.figure.value} ({len(table.rows)} rows) to {path}')
	return path
