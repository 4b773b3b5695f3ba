"""Base model"""

from typing import TypeVar

from fastapi import Body
from pydantic import BaseModel, ConfigDict

T = TypeVar('T')


class RequestSchema(BaseModel):
	"""BaseRequest"""


class ResponseSchema(BaseModel):
	"""ResponseSchema"""

	model_config = ConfigDict(from_attributes=True)


class ArrayModel(BaseModel):
	"""Base for immutable models that carry numpy arrays"""

	model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)


class APIResponse(BaseModel):
	"""APIResponse"""

	error_code: int | None = Body(default=1, description='Error code, 0 on success', examples=[0])
	message: str | None = Body(default=None, description='Result message', examples=['Operation successful'])
	description: str | None = Body(default=None, description='Error details', examples=[''])
	data: T | None = Body(default=None, description='Payload')
