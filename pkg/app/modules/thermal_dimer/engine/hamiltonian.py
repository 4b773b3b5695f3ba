"""Heisenberg dimer Hamiltonian and its Gibbs state by exact diagonalization"""

import numpy as np

from app.modules.linalg.engine.jacobi import hermitian_eigen
from app.modules.linalg.schemas.linalg import ComplexMatrix
from app.modules.mixed_state.engine.density import validate_density_matrix
from app.modules.mixed_state.schemas.mixed_state import DensityMatrix
from app.modules.thermal_dimer.schemas.thermal_dimer import DimerParams, check_coupling

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def heisenberg_hamiltonian(j: float) -> ComplexMatrix:
	"""H = -(j/2) (sx sx + sy sy + sz sz)"""
	j = check_coupling(j)
	exchange = sum(np.kron(sigma, sigma) for sigma in (PAULI_X, PAULI_Y, PAULI_Z))
	return ComplexMatrix(entries=-0.5 * j * exchange)


def thermal_state_exact(p: DimerParams) -> DensityMatrix:
	"""exp(-H / tau) / Z from the eigen-decomposition of H"""
	eigen = hermitian_eigen(heisenberg_hamiltonian(p.j))
	energies = eigen.values
	# shift by the ground energy so the largest weight is exactly 1
	weights = np.exp(-(energies - energies.min()) / p.tau)
	weights /= weights.sum()
	rho = (eigen.vectors * weights) @ eigen.vectors.conj().T
	return validate_density_matrix(ComplexMatrix(entries=rho))
