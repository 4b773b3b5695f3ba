"""Base enums and constants"""

from enum import Enum, EnumMeta


class BaseMetadataEnum(EnumMeta):
	"""Lets `'2' in FigureEnum` test raw values"""

	def __contains__(self, other):
		try:
			self(other)
		except ValueError:
			return False
		return True


class BaseEnum(str, Enum, metaclass=BaseMetadataEnum):
	"""String enum; members compare equal to their values"""

	@classmethod
	def values(cls) -> list[str]:
		return [member.value for member in cls]


class BaseErrorCode:
	"""error_code of APIResponse and the CLI --json envelope"""

	ERROR_CODE_SUCCESS = 0
	ERROR_CODE_FAIL = 1
