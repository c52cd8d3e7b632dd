"""
L-str: every sunk string is safe, unless the library reuses handles.

``esafe(s, t)`` holds when some event of ``t`` declares ``s`` a constant,
sanitizes it, or builds it by concatenating two strings that were safe
just before that event. Safety is judged against the whole trace, so a
later ``sanitize`` can justify an earlier ``sink``: the language is not
prefix-closed.
"""

from dataclasses import dataclass
from typing import FrozenSet, Optional, Set, Tuple

from ..lang.syntax import Loc, Value, untup
from .base import Trace, TraceLanguage, tagged

UNARY_EVENTS = ("input", "constant", "sanitize", "sink")


def classify(event: Value) -> Optional[Tuple]:
    """``(kind, s)`` or ``("concat", s, s1, s2)``; None if foreign."""
    for kind in UNARY_EVENTS:
        payload = tagged(event, kind)
        if isinstance(payload, Loc):
            return kind, payload
    payload = tagged(event, "concat")
    if payload is not None:
        parts = untup(payload, 3)
        if parts is not None and all(isinstance(p, Loc) for p in parts):
            return ("concat",) + parts
    return None


def _safe_after(safe: FrozenSet[Loc], event: Value) -> FrozenSet[Loc]:
    kind = classify(event)
    if kind is None:
        return safe
    if kind[0] in ("constant", "sanitize"):
        return safe | {kind[1]}
    if kind[0] == "concat" and kind[2] in safe and kind[3] in safe:
        return safe | {kind[1]}
    return safe


def esafe(s: Loc, trace: Trace) -> bool:
    """``esafe(s, t·h) = esafe(s, t) or h makes s safe given t``; false on the empty trace.

    Unfolded left to right so long traces do not recurse.
    """
    safe: FrozenSet[Loc] = frozenset()
    for event in trace:
        safe = _safe_after(safe, event)
    return s in safe


def allocated_by(event: Value) -> Optional[Loc]:
    kind = classify(event)
    if kind is not None and kind[0] in ("constant", "input", "concat"):
        return kind[1]
    return None


def allocs(s: Loc, trace: Trace, n: int) -> bool:
    """Position ``n`` (1-based) produces the string ``s``."""
    return allocated_by(trace[n - 1]) == s


def notfresh(trace: Trace) -> bool:
    """Two distinct positions allocate the same string."""
    seen: Set[Loc] = set()
    for event in trace:
        s = allocated_by(event)
        if s is None:
            continue
        if s in seen:
            return True
        seen.add(s)
    return False


def str_trace(trace: Trace) -> bool:
    sinks_safe = all(
        esafe(kind[1], trace)
        for kind in map(classify, trace)
        if kind is not None and kind[0] == "sink"
    )
    return sinks_safe or notfresh(trace)


@dataclass(frozen=True)
class StrState:
    safe: FrozenSet[Loc] = frozenset()
    sunk: FrozenSet[Loc] = frozenset()
    allocated: FrozenSet[Loc] = frozenset()
    notfresh: bool = False
    foreign: bool = False


class StringLanguage(TraceLanguage[StrState]):
    """No reject latch: a later sanitize or a reused handle can restore acceptance."""

    lang_id = "L-str"
    prefix_closed = False

    def in_alphabet(self, event: Value) -> bool:
        return classify(event) is not None

    def member(self, trace: Trace) -> bool:
        # A reused handle excuses everything, including foreign events.
        if notfresh(trace):
            return True
        return all(self.in_alphabet(e) for e in trace) and str_trace(trace)

    def initial_state(self) -> StrState:
        return StrState()

    def step(self, state: StrState, event: Value) -> StrState:
        kind = classify(event)
        if kind is None:
            return StrState(state.safe, state.sunk, state.allocated, state.notfresh, foreign=True)
        sunk = state.sunk | {kind[1]} if kind[0] == "sink" else state.sunk
        allocated, reused = state.allocated, state.notfresh
        s = allocated_by(event)
        if s is not None:
            reused = reused or s in allocated
            allocated = allocated | {s}
        return StrState(_safe_after(state.safe, event), sunk, allocated, reused, state.foreign)

    def verdict(self, state: StrState) -> bool:
        return state.notfresh or (not state.foreign and state.sunk <= state.safe)
