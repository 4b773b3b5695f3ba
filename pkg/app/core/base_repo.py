"""Base Repo"""

import logging

from app.core.config import get_settings


class BaseRepo:
	"""BaseRepo"""

	def __init__(self):
		self.settings = get_settings()
		self.logger = logging.getLogger(self.__class__.__module__)
