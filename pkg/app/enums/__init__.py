"""Enum exports"""

# Base enums
from .base_enums import BaseEnum, BaseErrorCode, BaseMetadataEnum

# Entanglement enums
from .entanglement_enums import (
	AsymptoticLimitEnum,
	BellStateEnum,
	CouplingRegimeEnum,
	FigureEnum,
	ScaleEnum,
	SubsystemEnum,
)
