"""Density matrix validation and the JSON file format

File format: {"rho": [[[re, im], ...4 pairs], ...4 rows]}, row-major in the
basis |00>, |01>, |10>, |11>.
"""

import json
import logging
from pathlib import Path

from app.core.config import get_settings
from app.exceptions.exception import (
	BadTraceException,
	CustomHTTPException,
	DensityFileException,
	DimMismatchException,
	NotHermitianException,
	NotPositiveSemiDefiniteException,
)
from app.modules.linalg.engine.jacobi import hermitian_eigen
from app.modules.linalg.engine.matrix_ops import hermitian_part, hermiticity_deviation, trace
from app.modules.linalg.schemas.linalg import ComplexMatrix
from app.modules.mixed_state.schemas.mixed_state import DensityMatrix

logger = logging.getLogger(__name__)


def validate_density_matrix(m: ComplexMatrix) -> DensityMatrix:
	"""Check Hermiticity, unit trace and positivity; keeps the Hermitian part"""
	tol = get_settings().DENSITY_TOL
	if m.dim != 4:
		raise DimMismatchException(m.dim, 4)

	deviation = hermiticity_deviation(m)
	if deviation > tol:
		raise NotHermitianException(deviation, tol)
	h = hermitian_part(m)

	tr = float(trace(h).real)
	if abs(tr - 1.0) > tol:
		raise BadTraceException(tr, tol)

	smallest = float(hermitian_eigen(h, require_hermitian_tol=tol).values[-1])
	if smallest < -tol:
		raise NotPositiveSemiDefiniteException(smallest, tol)
	return DensityMatrix(matrix=h)


def parse_density_payload(payload: object, source: str = '<payload>') -> DensityMatrix:
	if not isinstance(payload, dict) or 'rho' not in payload:
		raise DensityFileException(source, "expected an object with key 'rho'")
	try:
		matrix = ComplexMatrix.from_pairs(payload['rho'])
	except (TypeError, ValueError) as ex:
		raise DensityFileException(source, f'rho is not an array of [re, im] pairs ({ex})')
	if matrix.dim != 4:
		raise DimMismatchException(matrix.dim, 4)
	return validate_density_matrix(matrix)


def load_density_matrix(path: str | Path) -> DensityMatrix:
	path = Path(path)
	try:
		with open(path, encoding='utf-8') as f:
			payload = json.load(f)
	except OSError as ex:
		raise DensityFileException(str(path), ex.strerror or str(ex))
	except json.JSONDecodeError as ex:
		raise DensityFileException(str(path), f'invalid JSON ({ex.msg} at line {ex.lineno})')
	try:
		return parse_density_payload(payload, str(path))
	except CustomHTTPException as ex:
		logger.info(f'Rejected density matrix from {path}: {ex.message}')
		raise


def dump_density_matrix(rho: DensityMatrix | ComplexMatrix) -> dict:
	matrix = rho.matrix if isinstance(rho, DensityMatrix) else rho
	return {'rho': [[list(pair) for pair in row] for row in matrix.to_pairs()]}
