"""Fixed-size complex linear algebra"""

from .engine.jacobi import hermitian_eigen, jacobi_hermitian, psd_sqrt, singular_values
from .engine.matrix_ops import SIGMA_Y_SIGMA_Y, adjoint, conjugate, matmul, trace
from .schemas.linalg import ComplexMatrix, EigenSystem
