import os
from functools import lru_cache

from dotenv import load_dotenv  # type: ignore
from pydantic import BaseModel

load_dotenv()

PROJECT_NAME = 'Entanglement Fluctuations'
API_V1_STR = '/api/v1'
DEFAULT_LANG = os.getenv('DEFAULT_LANG', 'en')
LOG_LEVEL = os.getenv('LOG_LEVEL', 'WARNING')

# Linear algebra
HERMITIAN_TOL = float(os.getenv('HERMITIAN_TOL', '1e-9'))
EIGEN_OFFDIAG_TOL = float(os.getenv('EIGEN_OFFDIAG_TOL', '1e-14'))
EIGEN_MAX_SWEEPS = int(os.getenv('EIGEN_MAX_SWEEPS', '100'))
PSD_CLAMP_TOL = float(os.getenv('PSD_CLAMP_TOL', '1e-12'))

# State validation
NORM_TOL = float(os.getenv('NORM_TOL', '1e-10'))
DENSITY_TOL = float(os.getenv('DENSITY_TOL', '1e-9'))
BELL_WEIGHT_TOL = float(os.getenv('BELL_WEIGHT_TOL', '1e-12'))
DOMAIN_SLACK = float(os.getenv('DOMAIN_SLACK', '1e-12'))

# Root finding
ROOT_XTOL = float(os.getenv('ROOT_XTOL', '1e-12'))
ROOT_FTOL = float(os.getenv('ROOT_FTOL', '1e-12'))
ROOT_MAX_ITER = int(os.getenv('ROOT_MAX_ITER', '200'))

# Sweeps and output
HW_CROSSCHECK_TOL = float(os.getenv('HW_CROSSCHECK_TOL', '1e-9'))
CSV_SIGNIFICANT_DIGITS = int(os.getenv('CSV_SIGNIFICANT_DIGITS', '12'))
FIG_DEFAULT_POINTS = int(os.getenv('FIG_DEFAULT_POINTS', '201'))
SWEEP_WORKERS = int(os.getenv('SWEEP_WORKERS', '1'))


class Settings(BaseModel):
	PROJECT_NAME: str = PROJECT_NAME
	API_V1_STR: str = API_V1_STR
	DEFAULT_LANG: str = DEFAULT_LANG
	LOG_LEVEL: str = LOG_LEVEL

	# Linear algebra
	HERMITIAN_TOL: float = HERMITIAN_TOL
	EIGEN_OFFDIAG_TOL: float = EIGEN_OFFDIAG_TOL
	EIGEN_MAX_SWEEPS: int = EIGEN_MAX_SWEEPS
	PSD_CLAMP_TOL: float = PSD_CLAMP_TOL

	# State validation
	NORM_TOL: float = NORM_TOL
	DENSITY_TOL: float = DENSITY_TOL
	BELL_WEIGHT_TOL: float = BELL_WEIGHT_TOL
	DOMAIN_SLACK: float = DOMAIN_SLACK

	# Root finding
	ROOT_XTOL: float = ROOT_XTOL
	ROOT_FTOL: float = ROOT_FTOL
	ROOT_MAX_ITER: int = ROOT_MAX_ITER

	# Sweeps and output
	HW_CROSSCHECK_TOL: float = HW_CROSSCHECK_TOL
	CSV_SIGNIFICANT_DIGITS: int = CSV_SIGNIFICANT_DIGITS
	FIG_DEFAULT_POINTS: int = FIG_DEFAULT_POINTS
	SWEEP_WORKERS: int = SWEEP_WORKERS


@lru_cache()
def get_settings():
	return Settings()
