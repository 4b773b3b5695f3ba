import math

from pydantic import BaseModel, Field, model_validator

from app.enums.entanglement_enums import FigureEnum, ScaleEnum
from app.exceptions.exception import BadSpecException


class SweepSpec(BaseModel):
	"""Evenly spaced grid start..stop (both included)"""

	start: float
	stop: float
	points: int
	scale: ScaleEnum = ScaleEnum.LINEAR

	@model_validator(mode='after')
	def _check_grid(self):
		if not (math.isfinite(self.start) and math.isfinite(self.stop)):
			raise BadSpecException(f'start={self.start!r} and stop={self.stop!r} must be finite')
		if not self.start < self.stop:
			raise BadSpecException(f'start={self.start!r} must be below stop={self.stop!r}')
		if self.points < 2:
			raise BadSpecException(f'points={self.points} must be at least 2')
		return self


class FigureTable(BaseModel):
	"""Rows of a figure dataset; None marks an undefined value"""

	figure: FigureEnum
	columns: list[str]
	rows: list[list[float | None]] = Field(default_factory=list)

	def column(self, name: str) -> list[float | None]:
		index = self.columns.index(name)
		return [row[index] for row in self.rows]
