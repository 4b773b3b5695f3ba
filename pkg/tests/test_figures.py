import math

import pytest

from app.enums.entanglement_enums import FigureEnum
from app.exceptions.exception import BadSpecException, UnwritablePathException
from app.modules.figures.engine.figures import FIGURE_COLUMNS, default_spec, figure_table, linear_grid
from app.modules.figures.engine.table_io import format_value, parse_csv, render_csv, render_rows, write_csv
from app.modules.figures.repository.figures_repo import FiguresRepo
from app.modules.figures.schemas.figures import SweepSpec

C_F = 0.82724
T_F_OVER_T_E = 0.31776


def sign_changes(table, left: str, right: str, lo: float, hi: float) -> list[tuple[float, float]]:
	"""Adjacent x values between which left - right changes sign, x restricted to (lo, hi)"""
	x_name = table.columns[0]
	rows = [(x, a - b) for x, a, b in zip(table.column(x_name), table.column(left), table.column(right)) if lo < x < hi]
	return [(x0, x1) for (x0, d0), (x1, d1) in zip(rows, rows[1:]) if d0 * d1 < 0]


class TestFormat:
	def test_values(self):
		assert format_value(None) == ''
		assert format_value(True) == '1'
		assert format_value(False) == '0'
		assert format_value(0.5) == '0.5'
		assert format_value(1 / 3) == '0.333333333333'
		assert format_value(2.0) == '2'

	def test_render_rows(self):
		text = render_rows(['C', 'relE'], [[0.0, None], [1.0, 0.0]])
		assert text == 'C,relE\n0,\n1,0\n'

	def test_round_trip_keeps_twelve_digits(self):
		table = figure_table(FigureEnum.RELATIVE_VS_C, default_spec(FigureEnum.RELATIVE_VS_C, points=37))
		header, rows = parse_csv(render_csv(table))
		assert header == table.columns
		for parsed, original in zip(rows, table.rows):
			for a, b in zip(parsed, original):
				assert a == pytest.approx(b, rel=1e-11)


class TestSweepSpec:
	def test_grid_includes_both_ends(self):
		grid = linear_grid(SweepSpec(start=0.0, stop=1.0, points=5))
		assert grid == [0.0, 0.25, 0.5, 0.75, 1.0]

	@pytest.mark.parametrize(
		'start, stop, points',
		[(1.0, 0.0, 10), (0.5, 0.5, 10), (0.0, 1.0, 1), (math.nan, 1.0, 10), (0.0, math.inf, 10)],
	)
	def test_rejected(self, start, stop, points):
		with pytest.raises(BadSpecException):
			SweepSpec(start=start, stop=stop, points=points)

	def test_default_points(self):
		assert default_spec(FigureEnum.ENTANGLEMENT_VS_C).points == 201


class TestFigureTables:
	@pytest.mark.parametrize('which', list(FigureEnum))
	def test_columns(self, which):
		table = figure_table(which, default_spec(which, points=11))
		assert table.columns == FIGURE_COLUMNS[which]
		assert len(table.rows) == 11
		assert all(len(row) == len(table.columns) for row in table.rows)

	def test_fig1_endpoints(self):
		table = figure_table(FigureEnum.ENTANGLEMENT_VS_C)
		assert table.rows[0] == [0.0, 0.0, 0.0]
		c, e, de = table.rows[-1]
		assert c == 1.0
		assert e == pytest.approx(1.0, abs=1e-12)
		assert de == 0.0

	def test_fig1_crossing_brackets_c_f(self):
		table = figure_table(FigureEnum.ENTANGLEMENT_VS_C)
		crossings = sign_changes(table, 'E', 'dE', 0.01, 1.0)
		assert len(crossings) == 1
		lo, hi = crossings[0]
		assert lo < C_F < hi

	def test_fig2_strictly_decreasing(self):
		rel = figure_table(FigureEnum.RELATIVE_VS_C).column('relE')
		assert None not in rel
		assert all(b < a for a, b in zip(rel, rel[1:]))

	def test_fig2_rejects_zero(self):
		with pytest.raises(BadSpecException):
			figure_table(FigureEnum.RELATIVE_VS_C, SweepSpec(start=0.0, stop=1.0, points=11))

	def test_fig1_rejects_out_of_range(self):
		with pytest.raises(BadSpecException):
			figure_table(FigureEnum.ENTANGLEMENT_VS_C, SweepSpec(start=-0.1, stop=1.0, points=11))

	def test_fig3_crossing_brackets_t_f(self):
		table = figure_table(FigureEnum.ENTANGLEMENT_VS_T)
		crossings = sign_changes(table, 'E', 'dE', 0.0, 1.0)
		assert len(crossings) == 1
		lo, hi = crossings[0]
		assert lo - 1e-4 < T_F_OVER_T_E < hi + 1e-4

	def test_fig3_vanishes_beyond_entanglement_temperature(self):
		table = figure_table(FigureEnum.ENTANGLEMENT_VS_T)
		beyond = [row for row in table.rows if row[0] >= 1.0]
		assert beyond
		assert all(row[1] == 0.0 and row[2] == 0.0 for row in beyond)

	def test_fig3_rejects_zero_temperature(self):
		with pytest.raises(BadSpecException):
			figure_table(FigureEnum.ENTANGLEMENT_VS_T, SweepSpec(start=0.0, stop=1.0, points=11))

	def test_fig4_is_one_at_the_crossing(self):
		table = figure_table(FigureEnum.RELATIVE_VS_T)
		t, rel = min(table.rows, key=lambda row: abs(row[0] - T_F_OVER_T_E))
		assert rel == pytest.approx(1.0, abs=0.05)

	def test_fig4_undefined_beyond_entanglement_temperature(self):
		table = figure_table(FigureEnum.RELATIVE_VS_T)
		assert all(rel is None for t, rel in table.rows if t >= 1.0)
		assert all(rel is not None for t, rel in table.rows if t < 0.99)


class TestExport:
	def test_write_csv(self, tmp_path):
		table = figure_table(FigureEnum.ENTANGLEMENT_VS_C, default_spec(FigureEnum.ENTANGLEMENT_VS_C, points=5))
		path = write_csv(table, tmp_path / 'fig1.csv')
		assert path.read_text().splitlines()[0] == 'C,E,dE'
		assert path.read_bytes().count(b'\r') == 0

	def test_unwritable_path(self, tmp_path):
		table = figure_table(FigureEnum.ENTANGLEMENT_VS_C, default_spec(FigureEnum.ENTANGLEMENT_VS_C, points=5))
		with pytest.raises(UnwritablePathException):
			write_csv(table, tmp_path / 'missing' / 'fig1.csv')

	def test_repo_export(self, tmp_path):
		response = FiguresRepo().export(FigureEnum.RELATIVE_VS_T, tmp_path / 'fig4.csv', points=21)
		assert response.data['rows'] == 21
		assert (tmp_path / 'fig4.csv').exists()


def test_figure_enum_values():
	assert FigureEnum.values() == ['1', '2', '3', '4']
	assert '3' in FigureEnum
	assert '5' not in FigureEnum
