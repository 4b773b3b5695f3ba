"""Datasets behind the four figures.

1: E and Delta E against C          (C, E, dE)
2: Delta E / E against C, C > 0     (C, relE)
3: E and Delta E of the dimer       (t_over_te, E, dE)
4: Delta E / E of the dimer         (t_over_te, relE)

Dimer figures use j = -1; t_over_te is tau / tau_e.
"""

import logging

import numpy as np

from app.core.config import get_settings
from app.enums.entanglement_enums import FigureEnum
from app.exceptions.exception import BadSpecException
from app.modules.figures.schemas.figures import FigureTable, SweepSpec
from app.modules.measures.engine.measures import entanglement_stats
from app.modules.thermal_dimer.engine.dimer import entanglement_temperature, thermal_sweep

logger = logging.getLogger(__name__)

DIMER_COUPLING = -1.0

FIGURE_COLUMNS = {
	FigureEnum.ENTANGLEMENT_VS_C: ['C', 'E', 'dE'],
	FigureEnum.RELATIVE_VS_C: ['C', 'relE'],
	FigureEnum.ENTANGLEMENT_VS_T: ['t_over_te', 'E', 'dE'],
	FigureEnum.RELATIVE_VS_T: ['t_over_te', 'relE'],
}

DEFAULT_RANGES = {
	FigureEnum.ENTANGLEMENT_VS_C: (0.0, 1.0),
	FigureEnum.RELATIVE_VS_C: (0.005, 1.0),
	FigureEnum.ENTANGLEMENT_VS_T: (0.01, 1.2),
	FigureEnum.RELATIVE_VS_T: (0.01, 1.2),
}


def linear_grid(spec: SweepSpec) -> list[float]:
	grid = np.linspace(spec.start, spec.stop, spec.points)
	return [float(x) for x in grid]


def default_spec(which: FigureEnum, start: float | None = None, stop: float | None = None, points: int | None = None) -> SweepSpec:
	which = FigureEnum(which)
	default_start, default_stop = DEFAULT_RANGES[which]
	return SweepSpec(
		start=default_start if start is None else start,
		stop=default_stop if stop is None else stop,
		points=get_settings().FIG_DEFAULT_POINTS if points is None else points,
	)


def _check_range(which: FigureEnum, spec: SweepSpec):
	if which is FigureEnum.ENTANGLEMENT_VS_C:
		if spec.start < 0.0 or spec.stop > 1.0:
			raise BadSpecException(f'C grid [{spec.start!r}, {spec.stop!r}] must lie in [0, 1]')
	elif which is FigureEnum.RELATIVE_VS_C:
		if spec.start <= 0.0 or spec.stop > 1.0:
			raise BadSpecException(f'C grid [{spec.start!r}, {spec.stop!r}] must lie in (0, 1]')
	elif spec.start <= 0.0:
		raise BadSpecException(f't_over_te grid must start above 0, got {spec.start!r}')


def _concurrence_rows(which: FigureEnum, grid: list[float]) -> list[list[float | None]]:
	rows = []
	for c in grid:
		stats = entanglement_stats(c)
		if which is FigureEnum.ENTANGLEMENT_VS_C:
			rows.append([c, stats.e, stats.delta_e])
		else:
			rows.append([c, stats.rel])
	return rows


def _dimer_rows(which: FigureEnum, grid: list[float]) -> list[list[float | None]]:
	tau_e = entanglement_temperature(DIMER_COUPLING)
	points = thermal_sweep(DIMER_COUPLING, [t * tau_e for t in grid])
	rows = []
	for t, point in zip(grid, points):
		if which is FigureEnum.ENTANGLEMENT_VS_T:
			rows.append([t, point.e, point.delta_e])
		else:
			rows.append([t, point.rel])
	return rows


def figure_table(which: FigureEnum, spec: SweepSpec | None = None) -> FigureTable:
	which = FigureEnum(which)
	spec = spec or default_spec(which)
	_check_range(which, spec)
	grid = linear_grid(spec)

	if which in (FigureEnum.ENTANGLEMENT_VS_C, FigureEnum.RELATIVE_VS_C):
		rows = _concurrence_rows(which, grid)
	else:
		rows = _dimer_rows(which, grid)
	logger.debug(f'Figure {which.value}: {len(rows)} rows over [{spec.start}, {spec.stop}]')
	return FigureTable(figure=which, columns=FIGURE_COLUMNS[which], rows=rows)
