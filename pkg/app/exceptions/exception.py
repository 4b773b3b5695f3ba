from fastapi import HTTPException, status

from app.middleware.translation_manager import _


class CustomHTTPException(HTTPException):
	"""CustomHTTPException"""

	def __init__(self, status_code: int = 200, message: str | None = None, magnitude: float | None = None):
		message = message or _('error_occurred')
		super().__init__(status_code=status_code, detail=message)
		self.message = message
		self.magnitude = magnitude

	def __str__(self) -> str:
		return self.message


class ValidationException(CustomHTTPException):
	"""ValidationException"""

	def __init__(self, message: str | None = None, magnitude: float | None = None):
		super().__init__(status_code=status.HTTP_422_UNPROCESSABLE_ENTITY, message=message or _('validation_failed'), magnitude=magnitude)


class ComputationException(CustomHTTPException):
	"""Numerical procedure failed to deliver a result"""

	def __init__(self, message: str | None = None, magnitude: float | None = None):
		super().__init__(status_code=status.HTTP_500_INTERNAL_SERVER_ERROR, message=message or _('computation_failed'), magnitude=magnitude)


# Linear algebra


class DimMismatchException(ValidationException):
	"""Matrix dimensions are unsupported or do not match"""

	def __init__(self, left: object, right: object | None = None):
		if right is None:
			message = _('matrix_dim_unsupported').format(shape=left)
		else:
			message = _('matrix_dim_mismatch').format(left=left, right=right)
		super().__init__(message=message)


class NonFiniteException(ValidationException):
	"""NaN or infinite entry"""

	def __init__(self, what: str = 'matrix'):
		super().__init__(message=_('non_finite_entries').format(what=what))


class NotHermitianException(ValidationException):
	"""NotHermitianException"""

	def __init__(self, deviation: float, tol: float):
		super().__init__(message=_('matrix_not_hermitian').format(deviation=deviation, tol=tol), magnitude=deviation)


class NotPositiveSemiDefiniteException(ValidationException):
	"""NotPositiveSemiDefiniteException"""

	def __init__(self, min_eigenvalue: float, tol: float):
		super().__init__(message=_('matrix_not_psd').format(value=min_eigenvalue, tol=tol), magnitude=min_eigenvalue)


class BadTraceException(ValidationException):
	"""BadTraceException"""

	def __init__(self, trace: float, tol: float):
		super().__init__(message=_('density_bad_trace').format(trace=trace, tol=tol), magnitude=trace)


class NoConvergenceException(ComputationException):
	"""Eigen iteration hit its sweep cap"""

	def __init__(self, sweeps: int, off_norm: float):
		super().__init__(message=_('eigen_no_convergence').format(sweeps=sweeps, off_norm=off_norm), magnitude=off_norm)


# States


class ZeroVectorException(ValidationException):
	"""ZeroVectorException"""

	def __init__(self):
		super().__init__(message=_('state_zero_vector'), magnitude=0.0)


class NotNormalizedException(ValidationException):
	"""NotNormalizedException"""

	def __init__(self, norm: float, tol: float):
		super().__init__(message=_('state_not_normalized').format(norm=norm, tol=tol), magnitude=norm)


class BadBellWeightsException(ValidationException):
	"""BadBellWeightsException"""

	def __init__(self, reason: str, magnitude: float):
		super().__init__(message=_('bell_weights_invalid').format(reason=reason, value=magnitude), magnitude=magnitude)


class DensityFileException(ValidationException):
	"""Density-matrix file cannot be read or parsed"""

	def __init__(self, path: str, reason: str):
		super().__init__(message=_('density_file_invalid').format(path=path, reason=reason))


# Scalar measures


class OutOfDomainException(ValidationException):
	"""OutOfDomainException"""

	def __init__(self, name: str, value: float, lo: float, hi: float, closed: bool = True):
		key = 'value_out_of_domain' if closed else 'value_out_of_open_domain'
		super().__init__(message=_(key).format(name=name, value=value, lo=lo, hi=hi), magnitude=value)


class UndefinedAtZeroException(ValidationException):
	"""Relative fluctuation requested at C = 0"""

	def __init__(self):
		super().__init__(message=_('relative_undefined_at_zero'), magnitude=0.0)


# Thermal dimer


class ZeroCouplingException(ValidationException):
	"""ZeroCouplingException"""

	def __init__(self, j: float):
		super().__init__(message=_('dimer_zero_coupling').format(j=j), magnitude=j)


class BadTemperatureException(ValidationException):
	"""BadTemperatureException"""

	def __init__(self, tau: float):
		super().__init__(message=_('dimer_bad_temperature').format(tau=tau), magnitude=tau)


# Solvers


class NoSignChangeException(ValidationException):
	"""NoSignChangeException"""

	def __init__(self, lo: float, hi: float, f_lo: float, f_hi: float):
		super().__init__(message=_('root_no_sign_change').format(lo=lo, hi=hi, f_lo=f_lo, f_hi=f_hi), magnitude=f_lo * f_hi)


class MaxIterationsException(ComputationException):
	"""MaxIterationsException"""

	def __init__(self, iterations: int, residual: float):
		super().__init__(message=_('root_max_iterations').format(iterations=iterations, residual=residual), magnitude=residual)


# Output


class BadSpecException(ValidationException):
	"""Sweep grid rejected"""

	def __init__(self, reason: str):
		super().__init__(message=_('sweep_bad_spec').format(reason=reason))


class UnwritablePathException(CustomHTTPException):
	"""UnwritablePathException"""

	def __init__(self, path: str, reason: str):
		super().__init__(status_code=status.HTTP_400_BAD_REQUEST, message=_('path_unwritable').format(path=path, reason=reason))
