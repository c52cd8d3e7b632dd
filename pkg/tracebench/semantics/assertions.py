"""
Trace assertions and their denotations as sets of resources of a universe.

Denotations are upward closed: a resource satisfying an assertion keeps
satisfying it when composed with any frame it is compatible with.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import FrozenSet, Optional, Tuple, Union

from ..lang.syntax import Value
from .monoid import Resource, Trace, TraceFlag, TraceRes, res_mul, trace_mul
from .universe import Universe
from .worlds import Invariant, World


@dataclass(frozen=True)
class Emp:
    def __str__(self) -> str:
        return "emp"


@dataclass(frozen=True)
class FullTrace:
    """``trace(t)``: exclusive ownership of the whole trace, currently ``t``."""

    t: Trace

    def __str__(self) -> str:
        return f"trace({list(self.t)!r})"


@dataclass(frozen=True)
class Hist:
    """``hist(t)``: knowledge that ``t`` is a prefix of the trace."""

    t: Trace

    def __str__(self) -> str:
        return f"hist({list(self.t)!r})"


@dataclass(frozen=True)
class Inv:
    inv: Invariant

    def __str__(self) -> str:
        if isinstance(self.inv, str):
            return f"inv({self.inv})"
        return f"inv({sorted((list(t) for t in self.inv), key=repr)!r})"


@dataclass(frozen=True)
class PointsTo:
    loc: int
    value: Value

    def __str__(self) -> str:
        return f"l{self.loc} |-> {self.value!r}"


@dataclass(frozen=True)
class Star:
    left: "Assertion"
    right: "Assertion"

    def __str__(self) -> str:
        return f"({self.left} * {self.right})"


@dataclass(frozen=True)
class Pure:
    holds: bool

    def __str__(self) -> str:
        return "true" if self.holds else "false"


Assertion = Union[Emp, FullTrace, Hist, Inv, PointsTo, Star, Pure]


def mentions_inv(a: Assertion) -> bool:
    if isinstance(a, Inv):
        return True
    if isinstance(a, Star):
        return mentions_inv(a.left) or mentions_inv(a.right)
    return False


def _above(base: TraceRes, universe: Universe) -> FrozenSet[TraceRes]:
    """Trace resources of the universe reachable from ``base`` by composition."""
    result = set()
    for r in universe.trace_resources:
        product = trace_mul(base, r)
        if product is not None:
            result.add(product)
    return frozenset(result)


@lru_cache(maxsize=4096)
def _denote(a: Assertion, inv: Optional[Invariant], universe: Universe) -> FrozenSet[Resource]:
    everything = universe.resource_set
    if isinstance(a, Emp):
        return everything
    if isinstance(a, Pure):
        return everything if a.holds else frozenset()
    if isinstance(a, FullTrace):
        allowed = _above(TraceRes(TraceFlag.FULL, a.t), universe)
        return frozenset(m for m in everything if m.tr in allowed)
    if isinstance(a, Hist):
        allowed = _above(TraceRes(TraceFlag.HIST, a.t), universe)
        return frozenset(m for m in everything if m.tr in allowed)
    if isinstance(a, Inv):
        return everything if inv == a.inv else frozenset()
    if isinstance(a, PointsTo):
        return frozenset(m for m in everything if m.heap_map.get(a.loc) == a.value)
    if isinstance(a, Star):
        left = _denote(a.left, inv, universe)
        right = _denote(a.right, inv, universe)
        result = set()
        for m1 in left:
            for m2 in right:
                product = res_mul(m1, m2)
                if product is not None:
                    result.add(product)
        return frozenset(result) & everything
    raise TypeError(f"Not an assertion: {a!r}")


def denote(a: Assertion, w: World, universe: Universe) -> FrozenSet[Resource]:
    """Resources of ``universe`` satisfying ``a`` in world ``w``.

    Only ``inv`` looks at the world, and only at its invariant.
    """
    return _denote(a, w.inv if mentions_inv(a) else None, universe)


def check_upward_closure(
    a: Assertion, w: World, universe: Universe
) -> Tuple[bool, Optional[Tuple[Resource, Resource]]]:
    """Returns ``(closed, counterexample)``; the counterexample is ``(m, frame)``."""
    satisfying = denote(a, w, universe)
    for m in sorted(satisfying, key=repr):
        for frame in universe.resources:
            product = res_mul(m, frame)
            if product is not None and product not in satisfying:
                return False, (m, frame)
    return True, None
