"""Main init"""

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from app.core.config import PROJECT_NAME
from app.exceptions.handlers import setup_exception_handlers
from app.middleware.localization_middleware import LocalizationMiddleware
from app.middleware.translation_manager import _
from app.modules import build_router

__version__ = '1.0.0'


def create_app():
	"""Create main FastAPI app"""
	app = FastAPI(
		title=PROJECT_NAME,
		version=__version__,
		description=_('api_description'),
	)

	# Middlewares
	app.add_middleware(
		CORSMiddleware,
		allow_origins=['*'],
		allow_credentials=True,
		allow_methods=['*'],
		allow_headers=['*'],
	)
	app.add_middleware(LocalizationMiddleware)

	# Routes
	app.include_router(build_router(), prefix='/api')

	# Custom exception handlers
	setup_exception_handlers(app)

	@app.get('/', tags=['Root'])
	async def root():
		return {
			'message': _('api_welcome'),
			'version': app.version,
			'docs': '/docs',
		}

	return app
