"""Registry of trace languages and the module-level monitor operations."""

import logging
from typing import Any, Dict, List, Optional

from ..exceptions import UnknownLanguageError
from ..lang.syntax import Value
from .base import Monitor, Trace, TraceLanguage


logger = logging.getLogger(__name__)


class LanguageRegistry:
    """Maps language identifiers such as ``L-file`` to :class:`TraceLanguage` instances."""

    def __init__(self):
        self._languages: Dict[str, TraceLanguage] = {}
        self._register_default_languages()

    def _register_default_languages(self):
        from .brac import BracketLanguage
        from .coll import CollectionLanguage
        from .file import FileLanguage
        from .stack import SimpleStackLanguage, StackLanguage
        from .strings import StringLanguage

        for language in (
            FileLanguage(), CollectionLanguage(), BracketLanguage(),
            StackLanguage(), SimpleStackLanguage(), StringLanguage(),
        ):
            self.register_language(language)

    def register_language(self, language: TraceLanguage):
        if not isinstance(language, TraceLanguage):
            raise ValueError("Language must inherit from TraceLanguage")
        self._languages[language.lang_id] = language
        logger.debug(f"Registered trace language: {language.lang_id}")

    def get_language(self, lang: str) -> TraceLanguage:
        if lang not in self._languages:
            raise UnknownLanguageError(lang, self.list_languages())
        return self._languages[lang]

    def list_languages(self) -> List[str]:
        return list(self._languages)


_registry: Optional[LanguageRegistry] = None


def get_registry() -> LanguageRegistry:
    global _registry
    if _registry is None:
        _registry = LanguageRegistry()
    return _registry


def get_language(lang: str) -> TraceLanguage:
    return get_registry().get_language(lang)


def member(lang: str, trace: Trace) -> bool:
    """Declarative membership of ``trace`` in the language ``lang``."""
    return get_language(lang).member(trace)


def in_alphabet(lang: str, event: Value) -> bool:
    return get_language(lang).in_alphabet(event)


def mon_init(lang: str) -> Any:
    return get_language(lang).initial_state()


def mon_step(lang: str, state: Any, event: Value) -> Any:
    return get_language(lang).step(state, event)


def mon_verdict(lang: str, state: Any) -> bool:
    return get_language(lang).verdict(state)


def fold_verdicts(lang: str, trace: Trace) -> List[bool]:
    """Monitor verdict after each event of ``trace``."""
    return get_language(lang).fold_verdicts(trace)


def create_monitor(lang: str, strict: bool = True) -> Monitor:
    return Monitor(get_language(lang), strict=strict)
