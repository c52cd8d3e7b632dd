"""Worlds and the erasure relation between physical states and resources."""

from dataclasses import dataclass
from typing import FrozenSet, Mapping, Sequence, Tuple, Union

from ..lang.syntax import Expr, Value
from ..monitors.registry import member
from .monoid import Heap, Resource, Trace, TraceFlag, as_heap, is_prefix

FEnvItems = Tuple[Tuple[int, Tuple[str, Expr]], ...]
Invariant = Union[FrozenSet[Trace], str]


def as_fenv(fenv: Union[FEnvItems, Mapping[int, Tuple[str, Expr]]]) -> FEnvItems:
    items = fenv.items() if isinstance(fenv, Mapping) else fenv
    return tuple(sorted(items, key=lambda item: item[0]))


@dataclass(frozen=True)
class World:
    """A function environment and the trace invariant of the run.

    The invariant is either an explicit finite trace set or the id of a
    registered trace language.
    """

    gamma: FEnvItems
    inv: Invariant

    def admits(self, trace: Sequence[Value]) -> bool:
        if isinstance(self.inv, str):
            return member(self.inv, tuple(trace))
        return tuple(trace) in self.inv


def world_leq(w1: World, w2: World) -> bool:
    """``w1 <= w2`` iff ``w2`` names more functions and the invariant is unchanged."""
    return set(w1.gamma) <= set(w2.gamma) and w1.inv == w2.inv


def erasure_sat(
    t: Sequence[Value],
    s: Tuple[Union[Heap, Mapping[int, Value]], Union[FEnvItems, Mapping]],
    w: World,
    m: Resource,
) -> bool:
    heap, fenv = s
    if as_heap(heap) != m.heap or as_fenv(fenv) != as_fenv(w.gamma):
        return False
    if not w.admits(t):
        return False
    if m.tr.flag == TraceFlag.FULL:
        return tuple(t) == m.tr.t
    return is_prefix(m.tr.t, t)
