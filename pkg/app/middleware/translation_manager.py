import json
import logging
from contextvars import ContextVar
from pathlib import Path

from fastapi import Request

from app.core.config import DEFAULT_LANG

logger = logging.getLogger(__name__)

LOCALES_DIR = Path(__file__).parent.parent / 'locales'
SUPPORTED_LANGS = tuple(sorted(path.stem for path in LOCALES_DIR.glob('*.json')))

# Error messages are rendered when the exception is raised, so the language
# must be set in the caller's context before any engine code runs.
current_lang: ContextVar[str] = ContextVar('current_lang', default=DEFAULT_LANG)


class TranslationManager:
	"""
	Process-wide cache of message catalogues, one per language. The active
	language is not stored here: it is read from `current_lang`, so
	concurrent requests each see their own.
	"""

	_instance = None

	def __new__(cls):
		if cls._instance is None:
			cls._instance = super().__new__(cls)
			cls._instance.catalogues = {}
		return cls._instance

	def resolve(self, lang: str | None) -> str:
		"""Supported language for lang, falling back to DEFAULT_LANG"""
		lang = (lang or DEFAULT_LANG)[:2].lower()
		if lang not in SUPPORTED_LANGS:
			logger.warning(f'No message catalogue for {lang!r}, using {DEFAULT_LANG!r}')
			return DEFAULT_LANG
		return lang

	def catalogue(self, lang: str) -> dict[str, str]:
		if lang not in self.catalogues:
			file_path = LOCALES_DIR / f'{lang}.json'
			if file_path.exists():
				with open(file_path, encoding='utf-8') as f:
					self.catalogues[lang] = json.load(f)
			else:
				self.catalogues[lang] = {}
		return self.catalogues[lang]

	def translate(self, text: str, lang: str | None = None) -> str:
		"""Return the translated string for the given message key"""
		return self.catalogue(lang or current_lang.get()).get(text, text)


def use_language(lang: str | None) -> str:
	"""Set the language of the current context; returns the language actually in use"""
	lang = TranslationManager().resolve(lang)
	current_lang.set(lang)
	return lang


async def set_language(request: Request) -> str:
	"""Set language based on the `lang` header or query parameter"""
	lang = use_language(request.headers.get('lang') or request.query_params.get('lang'))
	request.state.lang = lang
	return lang


def _(text: str) -> str:
	"""Shortcut function to access translation for a given string."""
	return TranslationManager().translate(text)
