"""L-coll: iterators are invalidated by modifications of the collection."""

from dataclasses import dataclass
from typing import FrozenSet

from ..lang.syntax import Loc, Value
from .base import Trace, TraceLanguage, is_sym, tagged

MODIFYING = ("add", "remove")


def _iterator_loc(event: Value, tag: str):
    payload = tagged(event, tag)
    return payload if isinstance(payload, Loc) else None


def _is_modification(event: Value) -> bool:
    return any(is_sym(event, name) for name in MODIFYING)


def coll_trace(trace: Trace) -> bool:
    """Every ``<next, l>`` has an earlier ``<iterator, l>`` with no add/remove in between."""
    for i, event in enumerate(trace):
        loc = _iterator_loc(event, "next")
        if loc is None:
            continue
        justified = any(
            _iterator_loc(trace[j], "iterator") == loc
            and not any(_is_modification(trace[k]) for k in range(j + 1, i))
            for j in range(i)
        )
        if not justified:
            return False
    return True


@dataclass(frozen=True)
class CollState:
    valid: FrozenSet[Loc] = frozenset()
    rejected: bool = False


class CollectionLanguage(TraceLanguage[CollState]):
    lang_id = "L-coll"

    def in_alphabet(self, event: Value) -> bool:
        return (
            any(is_sym(event, name) for name in ("size", "add", "remove"))
            or _iterator_loc(event, "iterator") is not None
            or _iterator_loc(event, "next") is not None
        )

    def member(self, trace: Trace) -> bool:
        return all(self.in_alphabet(e) for e in trace) and coll_trace(trace)

    def initial_state(self) -> CollState:
        return CollState()

    def step(self, state: CollState, event: Value) -> CollState:
        if state.rejected:
            return state
        if is_sym(event, "size"):
            return state
        if _is_modification(event):
            return CollState()
        created = _iterator_loc(event, "iterator")
        if created is not None:
            return CollState(valid=state.valid | {created})
        advanced = _iterator_loc(event, "next")
        if advanced is not None and advanced in state.valid:
            return state
        return CollState(valid=state.valid, rejected=True)

    def verdict(self, state: CollState) -> bool:
        return not state.rejected
