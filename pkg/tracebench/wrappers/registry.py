"""Registry for library implementations and their wrappers."""

import logging
from typing import Dict, List, Optional, Type

from ..exceptions import UnknownLibraryError
from .base import Library, LibraryBundle


logger = logging.getLogger(__name__)


class LibraryRegistry:
    """Maps bundle names to :class:`Library` classes."""

    def __init__(self):
        self._libraries: Dict[str, Type[Library]] = {}
        self._register_default_libraries()

    def _register_default_libraries(self):
        from .brac import BracketLibrary
        from .coll import CollectionLibrary
        from .file import FileLibrary
        from .stack import SimpleStackLibrary, StackLibrary
        from .strings import StringLibrary

        for library_class in (
            FileLibrary, CollectionLibrary, BracketLibrary,
            StackLibrary, SimpleStackLibrary, StringLibrary,
        ):
            self.register_library(library_class.name, library_class)

    def register_library(self, name: str, library_class: Type[Library]):
        """
        Register a library under a bundle name.

        Args:
            name: Bundle name accepted by ``--lib``
            library_class: Class implementing :class:`Library`
        """
        if not issubclass(library_class, Library):
            raise ValueError("Library class must inherit from Library")
        self._libraries[name] = library_class
        logger.debug(f"Registered library: {name}")

    def get_library(self, name: str) -> Library:
        if name not in self._libraries:
            raise UnknownLibraryError(name, self.list_libraries())
        return self._libraries[name]()

    def list_libraries(self) -> List[str]:
        return list(self._libraries)


_registry: Optional[LibraryRegistry] = None


def get_registry() -> LibraryRegistry:
    global _registry
    if _registry is None:
        _registry = LibraryRegistry()
    return _registry


def make_lib(name: str) -> LibraryBundle:
    """Reference implementation of the named library."""
    return get_registry().get_library(name).make_bundle()


def wrap(name: str, lib: LibraryBundle) -> LibraryBundle:
    """Instrument ``lib`` with the named library's wrapper.

    Raises:
        UnknownLibraryError: If ``name`` is not registered
        ArityMismatchError: If ``lib`` does not provide the wrapper's operations
    """
    bundle = get_registry().get_library(name).wrap_bundle(lib)
    logger.debug(f"Wrapped library {name} ({len(bundle.ops)} operations)")
    return bundle


def language_for(name: str) -> str:
    """Trace language targeted by the named library's wrapper."""
    return get_registry().get_library(name).lang
