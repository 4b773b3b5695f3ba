"""Density matrix, reductions and concurrence of a two-qubit pure state"""

import math
from typing import Sequence

import numpy as np

from app.enums.entanglement_enums import BellStateEnum, SubsystemEnum
from app.exceptions.exception import DimMismatchException, ZeroVectorException
from app.modules.linalg.engine.matrix_ops import outer
from app.modules.linalg.schemas.linalg import ComplexMatrix
from app.modules.measures.engine.measures import reduced_spectrum
from app.modules.pure_state.schemas.pure_state import PureState

INV_SQRT2 = 1.0 / math.sqrt(2.0)

_BELL_AMPLITUDES = {
	BellStateEnum.PSI_PLUS: (0.0, INV_SQRT2, INV_SQRT2, 0.0),
	BellStateEnum.PSI_MINUS: (0.0, INV_SQRT2, -INV_SQRT2, 0.0),
	BellStateEnum.PHI_PLUS: (INV_SQRT2, 0.0, 0.0, INV_SQRT2),
	BellStateEnum.PHI_MINUS: (INV_SQRT2, 0.0, 0.0, -INV_SQRT2),
}


def make_pure_state(a: complex, b: complex, c: complex, d: complex, normalize: bool = False) -> PureState:
	amplitudes = np.array([a, b, c, d], dtype=complex)
	norm = float(np.linalg.norm(amplitudes))
	if norm == 0.0:
		raise ZeroVectorException()
	if normalize:
		amplitudes = amplitudes / norm
	return PureState(amplitudes=amplitudes)


def from_real_pairs(values: Sequence[float], normalize: bool = False) -> PureState:
	"""Eight reals, (re, im) per amplitude in basis order"""
	if len(values) != 8:
		raise DimMismatchException(len(values), 8)
	pairs = [complex(values[i], values[i + 1]) for i in range(0, 8, 2)]
	return make_pure_state(*pairs, normalize=normalize)


def bell_state(label: BellStateEnum) -> PureState:
	return PureState(amplitudes=_BELL_AMPLITUDES[BellStateEnum(label)])


def density_matrix(psi: PureState) -> ComplexMatrix:
	"""|psi><psi|"""
	return outer(psi.amplitudes)


def reduce(psi: PureState, which: SubsystemEnum) -> ComplexMatrix:
	"""Reduced density matrix of qubit A (trace over B) or of qubit B"""
	a, b, c, d = psi.a, psi.b, psi.c, psi.d
	if SubsystemEnum(which) is SubsystemEnum.A:
		off = a * c.conjugate() + b * d.conjugate()
		diag = (abs(a) ** 2 + abs(b) ** 2, abs(c) ** 2 + abs(d) ** 2)
	else:
		off = a * b.conjugate() + c * d.conjugate()
		diag = (abs(a) ** 2 + abs(c) ** 2, abs(b) ** 2 + abs(d) ** 2)
	return ComplexMatrix(entries=[[diag[0], off], [off.conjugate(), diag[1]]])


def concurrence_pure(psi: PureState) -> float:
	"""C = 2|ad - bc|, clamped to [0, 1]"""
	value = 2.0 * abs(psi.a * psi.d - psi.b * psi.c)
	return min(1.0, max(0.0, value))


def reduced_eigenvalues(psi: PureState) -> tuple[float, float]:
	"""(1 +- sqrt(1 - C^2)) / 2, largest first"""
	return reduced_spectrum(concurrence_pure(psi))
