"""Finite model of the resource algebra behind trace assertions."""

from .assertions import (
    Assertion, Emp, FullTrace, Hist, Inv, PointsTo, Pure, Star,
    check_upward_closure, denote,
)
from .axioms import AXIOMS, AxiomResult, check_axiom, check_emit_frame, run_all_axioms, worlds
from .monoid import (
    RESOURCE_UNIT, TRACE_UNIT, Resource, TraceFlag, TraceRes,
    as_heap, heap_mul, is_prefix, res_leq, res_mul, trace_leq, trace_mul,
)
from .universe import UNIVERSE_PRESETS, Universe, get_universe
from .worlds import World, erasure_sat, world_leq

__all__ = [
    "AXIOMS",
    "Assertion",
    "AxiomResult",
    "Emp",
    "FullTrace",
    "Hist",
    "Inv",
    "PointsTo",
    "Pure",
    "RESOURCE_UNIT",
    "Resource",
    "Star",
    "TRACE_UNIT",
    "TraceFlag",
    "TraceRes",
    "UNIVERSE_PRESETS",
    "Universe",
    "World",
    "as_heap",
    "check_axiom",
    "check_emit_frame",
    "check_upward_closure",
    "denote",
    "erasure_sat",
    "get_universe",
    "heap_mul",
    "is_prefix",
    "res_leq",
    "res_mul",
    "run_all_axioms",
    "trace_leq",
    "trace_mul",
    "world_leq",
    "worlds",
]
