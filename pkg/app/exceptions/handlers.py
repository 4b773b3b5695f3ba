"""Handlers exeption validation"""

import json
import logging
from functools import wraps

from fastapi import FastAPI, Request, status
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse

from app.core.base_model import APIResponse
from app.enums.base_enums import BaseErrorCode
from app.exceptions.exception import (
	ComputationException,
	CustomHTTPException,
	ValidationException,
)

logger = logging.getLogger(__name__)


def _error_response(exc: CustomHTTPException) -> APIResponse:
	return APIResponse(
		error_code=BaseErrorCode.ERROR_CODE_FAIL,
		message=exc.message,
		description=None if exc.magnitude is None else repr(exc.magnitude),
		data=None,
	)


async def custom_validation_exception_handler(request: Request, exc: ValidationException):
	"""Input violated a domain invariant"""
	logger.warning(f'Validation error on {request.url.path}: {exc.message}')
	return JSONResponse(
		status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
		content=_error_response(exc).model_dump(),
	)


async def custom_computation_exception_handler(request: Request, exc: ComputationException):
	"""Numerical procedure failed"""
	logger.error(f'Computation error on {request.url.path}: {exc.message}')
	return JSONResponse(
		status_code=status.HTTP_500_INTERNAL_SERVER_ERROR,
		content=_error_response(exc).model_dump(),
	)


async def custom_http_exception_handler(request: Request, exc: CustomHTTPException):
	"""custom_http_exception_handler"""
	logger.error(f'HTTP error on {request.url.path}: {repr(exc)}')
	return JSONResponse(status_code=exc.status_code, content=_error_response(exc).model_dump())


async def validation_exception_handler(request: Request, exc: RequestValidationError):
	"""Request body failed schema validation"""
	logger.warning(f'The client sent invalid data: {exc}')
	response_data = APIResponse(
		error_code=BaseErrorCode.ERROR_CODE_FAIL,
		message=str(exc),
		description=json.dumps(exc.errors(), default=str),
		data=None,
	)
	return JSONResponse(
		status_code=status.HTTP_422_UNPROCESSABLE_ENTITY,
		content=response_data.model_dump(),
	)


def handle_exceptions(func):
	"""Decorator to handle common exceptions in API routes"""

	@wraps(func)
	async def wrapper(*args, **kwargs):
		try:
			return await func(*args, **kwargs)
		except CustomHTTPException as ex:
			logger.warning(f'Route {func.__name__} failed: {ex.message}')
			return JSONResponse(
				status_code=ex.status_code,
				content=_error_response(ex).model_dump(),
			)

	return wrapper


def setup_exception_handlers(app: FastAPI):
	"""Register the exception handlers on the FastAPI app"""
	app.add_exception_handler(RequestValidationError, validation_exception_handler)
	app.add_exception_handler(CustomHTTPException, custom_http_exception_handler)
	app.add_exception_handler(ValidationException, custom_validation_exception_handler)
	app.add_exception_handler(ComputationException, custom_computation_exception_handler)
