"""Modules package
Routes of every module are collected from `<module>/routes/v*/` by build_router
"""

import importlib
import logging
import pkgutil
from pathlib import Path
from typing import Annotated

from fastapi import APIRouter, Depends, Header

from app.core.config import DEFAULT_LANG

logger = logging.getLogger(__name__)

PACKAGE = 'app.modules'
MODULES_DIR = Path(__file__).parent


def get_language(lang: Annotated[str, Header()] = DEFAULT_LANG):
	"""
	Set header language vi/en
	Default: DEFAULT_LANG
	"""
	return lang


def build_router() -> APIRouter:
	"""Include the `route` of every routes/v*/ file of every module"""
	route = APIRouter(dependencies=[Depends(get_language)])
	for _, module_name, ispkg in pkgutil.iter_modules([str(MODULES_DIR)]):
		routes_dir = MODULES_DIR / module_name / 'routes'
		if not ispkg or not routes_dir.is_dir():
			continue

		version_dirs = sorted(d for d in routes_dir.iterdir() if d.is_dir() and d.name.startswith('v'))
		for version_dir in version_dirs:
			for _, route_name, _ in pkgutil.iter_modules([str(version_dir)]):
				route_module_path = f'{PACKAGE}.{module_name}.routes.{version_dir.name}.{route_name}'
				module = importlib.import_module(route_module_path)
				if hasattr(module, 'route'):
					route.include_router(module.route, prefix=f'/{version_dir.name}')
					logger.debug(f'Loaded /{version_dir.name}{module.route.prefix} from {route_module_path}')
	return route
