"""Finite universes that make every quantifier of the resource model decidable."""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Dict, FrozenSet, Tuple

from ..exceptions import ConfigError
from ..lang.syntax import UNIT, Int, Lam, Sym, Value, Var
from .monoid import Heap, Resource, Trace, TraceFlag, TraceRes, as_heap


@dataclass(frozen=True)
class Universe:
    """Locations, stored values, event alphabet and a bound on trace length.

    Example:
        >>> universe = UNIVERSE_PRESETS["tiny"]
        >>> len(universe.resources)
        12
    """

    name: str
    locations: Tuple[int, ...]
    values: Tuple[Value, ...]
    alphabet: Tuple[Value, ...]
    max_len: int
    description: str = field(default="", compare=False)

    @cached_property
    def heaps(self) -> Tuple[Heap, ...]:
        # Each location is either unallocated (None) or holds one of the values.
        heaps = []
        for contents in product((None,) + self.values, repeat=len(self.locations)):
            heaps.append(as_heap(
                (loc, value) for loc, value in zip(self.locations, contents) if value is not None
            ))
        return tuple(heaps)

    @cached_property
    def traces(self) -> Tuple[Trace, ...]:
        traces = []
        for n in range(self.max_len + 1):
            traces.extend(product(self.alphabet, repeat=n))
        return tuple(traces)

    @cached_property
    def trace_resources(self) -> Tuple[TraceRes, ...]:
        return tuple(TraceRes(flag, t) for flag in TraceFlag for t in self.traces)

    @cached_property
    def resources(self) -> Tuple[Resource, ...]:
        return tuple(Resource(h, tr) for h in self.heaps for tr in self.trace_resources)

    @cached_property
    def resource_set(self) -> FrozenSet[Resource]:
        return frozenset(self.resources)

    @cached_property
    def invariants(self) -> Tuple[FrozenSet[Trace], ...]:
        """Candidate trace invariants: empty, ``{ε}``, one-symbol traces, everything."""
        candidates = [
            frozenset(),
            frozenset({()}),
            frozenset(t for t in self.traces if all(e == self.alphabet[0] for e in t)),
            frozenset(self.traces),
        ]
        unique = []
        for candidate in candidates:
            if candidate not in unique:
                unique.append(candidate)
        return tuple(unique)

    @cached_property
    def fenvs(self) -> Tuple[Tuple, ...]:
        """Function environments used to build worlds: empty and one named identity."""
        return ((), ((1, ("x", Var("x"))),))

    def describe(self) -> str:
        return (
            f"{self.name}: {len(self.locations)} locations, {len(self.values)} values, "
            f"{len(self.alphabet)} symbols, traces <= {self.max_len}, "
            f"{len(self.resources)} resources"
        )


UNIVERSE_PRESETS: Dict[str, Universe] = {
    "tiny": Universe(
        name="tiny",
        locations=(0,),
        values=(UNIT,),
        alphabet=(Sym("a"),),
        max_len=2,
        description="Smallest useful universe, for quick checks",
    ),
    "default": Universe(
        name="default",
        locations=(0, 1),
        values=(UNIT, Int(1)),
        alphabet=(Sym("a"), Sym("b")),
        max_len=3,
        description="Two locations, two symbols, traces up to length 3",
    ),
    "full": Universe(
        name="full",
        locations=(0, 1),
        values=(UNIT, Int(0), Int(1)),
        alphabet=(Sym("a"), Sym("b")),
        max_len=3,
        description="Largest preset allowed by the universe bounds",
    ),
}


def get_universe(name: str) -> Universe:
    try:
        return UNIVERSE_PRESETS[name]
    except KeyError:
        raise ConfigError(
            f"Unknown universe preset '{name}'. Available presets: {', '.join(UNIVERSE_PRESETS)}"
        ) from None
