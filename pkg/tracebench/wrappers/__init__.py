"""Reference libraries, their instrumenting wrappers and client linking."""

from .base import Library, LibraryBundle
from .linker import link
from .registry import LibraryRegistry, get_registry, language_for, make_lib, wrap

__all__ = [
    "Library",
    "LibraryBundle",
    "LibraryRegistry",
    "get_registry",
    "language_for",
    "link",
    "make_lib",
    "wrap",
]
