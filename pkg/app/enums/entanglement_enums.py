"""Entanglement domain enums"""

from app.enums.base_enums import BaseEnum


class SubsystemEnum(BaseEnum):
	"""Qubit kept after the partial trace"""

	A = 'A'
	B = 'B'


class AsymptoticLimitEnum(BaseEnum):
	"""Boundary of the concurrence interval an expansion is taken at"""

	NEAR_ZERO = 'near_zero'
	NEAR_ONE = 'near_one'


class BellStateEnum(BaseEnum):
	"""Bell states, in the weight order of a Bell mixture"""

	PSI_PLUS = 'psi_plus'
	PSI_MINUS = 'psi_minus'
	PHI_PLUS = 'phi_plus'
	PHI_MINUS = 'phi_minus'


class CouplingRegimeEnum(BaseEnum):
	"""Sign of the dimer exchange coupling"""

	ANTIFERROMAGNETIC = 'antiferromagnetic'
	FERROMAGNETIC = 'ferromagnetic'


class FigureEnum(BaseEnum):
	"""Figure datasets the CLI can emit"""

	ENTANGLEMENT_VS_C = '1'
	RELATIVE_VS_C = '2'
	ENTANGLEMENT_VS_T = '3'
	RELATIVE_VS_T = '4'


class ScaleEnum(BaseEnum):
	"""Grid spacing"""

	LINEAR = 'linear'
