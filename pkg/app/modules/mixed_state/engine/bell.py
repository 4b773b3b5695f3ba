"""Bell-diagonal states

Weights are ordered |Psi+>, |Psi->, |Phi+>, |Phi->. In the basis
|00>, |01>, |10>, |11> the mixture only occupies the diagonal, the centre
block (|01>, |10>) and the corners (|00>, |11>).
"""

import numpy as np

from app.modules.linalg.schemas.linalg import ComplexMatrix
from app.modules.mixed_state.engine.density import validate_density_matrix
from app.modules.mixed_state.schemas.mixed_state import BellWeights, DensityMatrix


def bell_mixture(p: BellWeights) -> DensityMatrix:
	p1, p2, p3, p4 = p.as_tuple()
	phi = (p3 + p4) / 2.0
	psi = (p1 + p2) / 2.0
	entries = np.diag([phi, psi, psi, phi]).astype(complex)
	entries[0, 3] = entries[3, 0] = (p3 - p4) / 2.0
	entries[1, 2] = entries[2, 1] = (p1 - p2) / 2.0
	return validate_density_matrix(ComplexMatrix(entries=entries))


def bell_concurrence(p: BellWeights) -> float:
	"""2 p_max - 1 when one weight exceeds 1/2, else 0"""
	p_max = p.p_max
	if p_max <= 0.5:
		return 0.0
	return min(1.0, 2.0 * p_max - 1.0)


def werner_weights(p_singlet: float) -> BellWeights:
	"""Weight p_singlet on |Psi->, the remainder split over the other three"""
	rest = (1.0 - p_singlet) / 3.0
	return BellWeights(p1=rest, p2=p_singlet, p3=rest, p4=rest)
