"""L-file: read and close only while the file is open."""

from dataclasses import dataclass

from ..exceptions import TraceIndexError
from ..lang.syntax import Value
from .base import Trace, TraceLanguage, is_sym

FILE_EVENTS = ("open", "close", "read")


def noclose(trace: Trace, n: int, m: int) -> bool:
    """No ``close`` strictly between 1-based positions ``n`` and ``m``."""
    return all(not is_sym(trace[k - 1], "close") for k in range(n + 1, m))


def isopen_check(trace: Trace, n: int) -> bool:
    """Some ``open`` before position ``n`` is not followed by a ``close`` before ``n``.

    Raises:
        TraceIndexError: If ``n`` is outside ``1..len(trace) + 1``
    """
    if not 1 <= n <= len(trace) + 1:
        raise TraceIndexError(n, len(trace))
    return any(
        is_sym(trace[m - 1], "open") and noclose(trace, m, n)
        for m in range(1, n)
    )


def file_trace(trace: Trace) -> bool:
    return all(
        isopen_check(trace, n)
        for n in range(1, len(trace) + 1)
        if is_sym(trace[n - 1], "read") or is_sym(trace[n - 1], "close")
    )


@dataclass(frozen=True)
class FileState:
    is_open: bool = False
    rejected: bool = False


class FileLanguage(TraceLanguage[FileState]):
    lang_id = "L-file"

    def in_alphabet(self, event: Value) -> bool:
        return any(is_sym(event, name) for name in FILE_EVENTS)

    def member(self, trace: Trace) -> bool:
        return all(self.in_alphabet(e) for e in trace) and file_trace(trace)

    def initial_state(self) -> FileState:
        return FileState()

    def step(self, state: FileState, event: Value) -> FileState:
        if state.rejected:
            return state
        if is_sym(event, "open"):
            return FileState(is_open=True)
        if is_sym(event, "close") and state.is_open:
            return FileState(is_open=False)
        if is_sym(event, "read") and state.is_open:
            return state
        return FileState(is_open=state.is_open, rejected=True)

    def verdict(self, state: FileState) -> bool:
        return not state.rejected
