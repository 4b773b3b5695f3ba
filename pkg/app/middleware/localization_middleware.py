from fastapi import Request
from starlette.middleware.base import BaseHTTPMiddleware

from app.middleware.translation_manager import set_language


class LocalizationMiddleware(BaseHTTPMiddleware):
	"""Pick the message catalogue per request and report it in Content-Language"""

	async def dispatch(self, request: Request, call_next):
		lang = await set_language(request)
		response = await call_next(request)
		response.headers['Content-Language'] = lang
		return response
