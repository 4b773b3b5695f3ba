"""
Brent's method for scalar roots on a sign-changing bracket.

Bisection safeguarded inverse quadratic interpolation / secant steps, in the
form used by scipy's brentq.
"""

import logging
import sys
from typing import Callable

from app.core.config import get_settings
from app.exceptions.exception import BadSpecException, MaxIterationsException, NoSignChangeException
from app.modules.solvers.schemas.solvers import RootResult

logger = logging.getLogger(__name__)

EPS = sys.float_info.epsilon


def _extrapolate(fcur: float, fpre: float, fblk: float, dpre: float, dblk: float) -> float:
	return -fcur * (fblk * dblk - fpre * dpre) / (dblk * dpre * (fblk - fpre))


def find_root(
	f: Callable[[float], float],
	lo: float,
	hi: float,
	xtol: float | None = None,
	ftol: float | None = None,
	max_iter: int | None = None,
) -> RootResult:
	"""Find x in (lo, hi) with f(x) ~ 0.

	Args:
	    f: real function of one real variable
	    lo, hi: bracket with f(lo) * f(hi) < 0
	    xtol: stop once the enclosing bracket is narrower than this
	    ftol: stop once |f(x)| <= ftol
	    max_iter: iteration cap

	Returns:
	    RootResult: root, residual and iteration count

	Raises:
	    NoSignChangeException: f(lo) and f(hi) do not have opposite signs
	    MaxIterationsException: no convergence within max_iter
	"""
	settings = get_settings()
	xtol = settings.ROOT_XTOL if xtol is None else xtol
	ftol = settings.ROOT_FTOL if ftol is None else ftol
	max_iter = settings.ROOT_MAX_ITER if max_iter is None else max_iter

	if not lo < hi:
		raise BadSpecException(f'bracket lo={lo!r} must be below hi={hi!r}')

	xpre, xcur = float(lo), float(hi)
	fpre, fcur = float(f(xpre)), float(f(xcur))
	if not fpre * fcur < 0.0:
		raise NoSignChangeException(lo, hi, fpre, fcur)

	xblk, fblk, spre, scur = 0.0, 0.0, 0.0, 0.0
	for iteration in range(1, max_iter + 1):
		if fpre * fcur < 0.0:
			xblk, fblk = xpre, fpre
			spre = scur = xcur - xpre
		if abs(fblk) < abs(fcur):
			xpre, xcur, xblk = xcur, xblk, xcur
			fpre, fcur, fblk = fcur, fblk, fcur

		delta = (xtol + 4.0 * EPS * abs(xcur)) / 2.0
		sbis = (xblk - xcur) / 2.0
		if abs(fcur) <= ftol or abs(sbis) < delta:
			converged_by = 'residual' if abs(fcur) <= ftol else 'bracket'
			logger.debug(f'Brent converged by {converged_by} after {iteration} iterations: x={xcur!r}, f={fcur:.3e}')
			return RootResult(value=xcur, residual=fcur, iterations=iteration, bracket=(lo, hi), converged_by=converged_by)

		if abs(spre) > delta and abs(fcur) < abs(fpre):
			if xpre == xblk:
				# interpolate
				stry = -fcur * (xcur - xpre) / (fcur - fpre)
			else:
				# extrapolate
				dpre = (fpre - fcur) / (xpre - xcur)
				dblk = (fblk - fcur) / (xblk - xcur)
				stry = _extrapolate(fcur, fpre, fblk, dpre, dblk)
			if 2.0 * abs(stry) < min(abs(spre), 3.0 * abs(sbis) - delta):
				spre, scur = scur, stry
			else:
				spre = scur = sbis
		else:
			spre = scur = sbis

		xpre, fpre = xcur, fcur
		if abs(scur) > delta:
			xcur += scur
		else:
			xcur += delta if sbis > 0 else -delta
		fcur = float(f(xcur))

	raise MaxIterationsException(max_iter, fcur)
