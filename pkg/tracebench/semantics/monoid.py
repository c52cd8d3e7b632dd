"""
The resource monoid ``Heap x Trace``.

Heaps compose by disjoint union. Trace resources carry a flag: ``HIST``
resources record a known prefix of the trace and are duplicable, ``FULL``
resources own the whole trace. Undefined products are ``None``.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Mapping, Optional, Sequence, Tuple, Union

from ..lang.syntax import Value

Trace = Tuple[Value, ...]
Heap = Tuple[Tuple[int, Value], ...]


class TraceFlag(str, Enum):
    HIST = "hist"
    FULL = "full"


@dataclass(frozen=True)
class TraceRes:
    flag: TraceFlag
    t: Trace = ()

    def __repr__(self) -> str:
        return f"({self.flag.value}, {list(self.t)!r})"


TRACE_UNIT = TraceRes(TraceFlag.HIST, ())


@dataclass(frozen=True)
class Resource:
    heap: Heap
    tr: TraceRes

    @property
    def heap_map(self) -> dict:
        return dict(self.heap)


EMPTY_HEAP: Heap = ()
RESOURCE_UNIT = Resource(EMPTY_HEAP, TRACE_UNIT)


def as_heap(heap: Union[Heap, Mapping[int, Value]]) -> Heap:
    """Canonical heap representation: items sorted by location."""
    items = heap.items() if isinstance(heap, Mapping) else heap
    return tuple(sorted(items, key=lambda item: item[0]))


def is_prefix(a: Sequence[Value], b: Sequence[Value]) -> bool:
    return len(a) <= len(b) and tuple(b[:len(a)]) == tuple(a)


def trace_leq(a: Sequence[Value], b: Sequence[Value]) -> bool:
    """Prefix order on traces."""
    return is_prefix(a, b)


def trace_mul(a: TraceRes, b: TraceRes) -> Optional[TraceRes]:
    if a.flag == TraceFlag.HIST and b.flag == TraceFlag.HIST:
        if is_prefix(a.t, b.t):
            return b
        if is_prefix(b.t, a.t):
            return a
        return None
    if a.flag == TraceFlag.FULL and b.flag == TraceFlag.FULL:
        return None
    full, hist = (a, b) if a.flag == TraceFlag.FULL else (b, a)
    return full if is_prefix(hist.t, full.t) else None


def heap_mul(a: Heap, b: Heap) -> Optional[Heap]:
    left, right = dict(a), dict(b)
    if left.keys() & right.keys():
        return None
    left.update(right)
    return as_heap(left)


def res_mul(m1: Resource, m2: Resource) -> Optional[Resource]:
    heap = heap_mul(m1.heap, m2.heap)
    if heap is None:
        return None
    tr = trace_mul(m1.tr, m2.tr)
    if tr is None:
        return None
    return Resource(heap, tr)


def res_leq(m1: Resource, m2: Resource, universe) -> bool:
    """``m1 <= m2`` iff some resource of ``universe`` completes ``m1`` to ``m2``."""
    return any(res_mul(m1, m) == m2 for m in universe.resources)
