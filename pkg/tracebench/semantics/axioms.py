"""
Exhaustive checks of the monoid laws and the trace axioms over a universe.

Laws on partial products use Kleene equality: both sides undefined counts as
equal, one side undefined is a failure.
"""

import logging
from dataclasses import dataclass
from itertools import product
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .assertions import (
    Assertion, Emp, FullTrace, Hist, Inv, PointsTo, Pure, Star,
    check_upward_closure, denote,
)
from .monoid import (
    RESOURCE_UNIT, TRACE_UNIT, Resource, TraceFlag, TraceRes,
    heap_mul, is_prefix, res_mul, trace_mul,
)
from .universe import Universe
from .worlds import World, erasure_sat

logger = logging.getLogger(__name__)


@dataclass
class AxiomResult:
    name: str
    passed: bool
    checked: int
    counterexample: Optional[str] = None

    def __bool__(self) -> bool:
        return self.passed


def worlds(universe: Universe) -> List[World]:
    return [World(gamma, inv) for gamma in universe.fenvs for inv in universe.invariants]


# A check yields (instance, holds) for every instance it examines; the
# instance is only rendered when it is a counterexample.
AxiomCheck = Callable[[Universe], Iterator[Tuple[Tuple, bool]]]


def _entailment(lhs: Assertion, rhs: Assertion, w: World, universe: Universe) -> Tuple[Tuple, bool]:
    missing = denote(lhs, w, universe) - denote(rhs, w, universe)
    if not missing:
        return (lhs, rhs), True
    witness = sorted(missing, key=repr)[0]
    return (f"{lhs} |- {rhs}", f"world inv {w.inv!r}", f"{witness!r} satisfies only the left side"), False


def _inv_dupl(universe: Universe):
    for w in worlds(universe):
        for inv in universe.invariants:
            yield _entailment(Inv(inv), Star(Inv(inv), Inv(inv)), w, universe)


def _hist_dupl(universe: Universe):
    for w in worlds(universe):
        for t in universe.traces:
            yield _entailment(Hist(t), Star(Hist(t), Hist(t)), w, universe)


def _alloc_hist(universe: Universe):
    for w in worlds(universe):
        for t in universe.traces:
            yield _entailment(FullTrace(t), Star(FullTrace(t), Hist(t)), w, universe)


def _use_hist(universe: Universe):
    for w in worlds(universe):
        for t1, t2 in product(universe.traces, repeat=2):
            yield _entailment(
                Star(FullTrace(t1), Hist(t2)),
                Star(FullTrace(t1), Pure(is_prefix(t2, t1))),
                w, universe,
            )


def _assoc(universe: Universe):
    # The product is componentwise, so each component is checked on its own.
    for a, b, c in product(universe.heaps, repeat=3):
        ab, bc = heap_mul(a, b), heap_mul(b, c)
        left = heap_mul(ab, c) if ab is not None else None
        right = heap_mul(a, bc) if bc is not None else None
        yield ("heaps", a, b, c), left == right
    for a, b, c in product(universe.trace_resources, repeat=3):
        ab, bc = trace_mul(a, b), trace_mul(b, c)
        left = trace_mul(ab, c) if ab is not None else None
        right = trace_mul(a, bc) if bc is not None else None
        yield ("traces", a, b, c), left == right


def _comm(universe: Universe):
    for m1, m2 in product(universe.resources, repeat=2):
        yield (m1, m2), res_mul(m1, m2) == res_mul(m2, m1)


def _unit(universe: Universe):
    for m in universe.resources:
        yield (m,), res_mul(m, RESOURCE_UNIT) == m and res_mul(RESOURCE_UNIT, m) == m
    for tr in universe.trace_resources:
        yield (tr,), trace_mul(tr, TRACE_UNIT) == tr and trace_mul(TRACE_UNIT, tr) == tr


def _emit_frame(universe: Universe):
    """Extending an owned full trace by an admitted event keeps every frame valid."""
    all_worlds = worlds(universe)
    owners = [
        m for m in universe.resources
        if m.tr.flag == TraceFlag.FULL and len(m.tr.t) < universe.max_len
    ]
    for m in owners:
        t = m.tr.t
        for frame in universe.resources:
            before = res_mul(m, frame)
            if before is None:
                continue
            for w in all_worlds:
                state = (before.heap, w.gamma)
                if not erasure_sat(t, state, w, before):
                    continue
                for v in universe.alphabet:
                    extended = t + (v,)
                    if not w.admits(extended):
                        continue
                    after = res_mul(Resource(m.heap, TraceRes(TraceFlag.FULL, extended)), frame)
                    holds = after is not None and erasure_sat(extended, state, w, after)
                    yield (m, frame, v, w.inv), holds


def closure_assertions(universe: Universe) -> List[Assertion]:
    """Assertions whose denotations the upward-closure check inspects."""
    assertions: List[Assertion] = [Emp()]
    assertions += [PointsTo(loc, v) for loc in universe.locations for v in universe.values]
    short = [t for t in universe.traces if len(t) <= 1]
    assertions += [FullTrace(t) for t in short] + [Hist(t) for t in short]
    assertions += [Inv(inv) for inv in universe.invariants]
    loc, value = universe.locations[0], universe.values[0]
    assertions += [Star(PointsTo(loc, value), Hist(t)) for t in short]
    return assertions


def _upward_closure(universe: Universe):
    w = worlds(universe)[-1]
    for a in closure_assertions(universe):
        closed, witness = check_upward_closure(a, w, universe)
        yield (str(a), witness), closed


AXIOMS: Dict[str, AxiomCheck] = {
    "PInvDupl": _inv_dupl,
    "PHistDupl": _hist_dupl,
    "PAllocHist": _alloc_hist,
    "PUseHist": _use_hist,
    "assoc": _assoc,
    "comm": _comm,
    "unit": _unit,
    "EmitFrame": _emit_frame,
    "UpwardClosure": _upward_closure,
}


def check_axiom(name: str, universe: Universe) -> AxiomResult:
    """Check one named law over ``universe``; stops at the first counterexample."""
    if name not in AXIOMS:
        raise KeyError(f"Unknown axiom '{name}'. Known axioms: {', '.join(AXIOMS)}")
    checked = 0
    for instance, holds in AXIOMS[name](universe):
        checked += 1
        if not holds:
            description = ", ".join(str(part) for part in instance)
            logger.warning(f"Axiom {name} fails over universe {universe.name}: {description}")
            return AxiomResult(name, False, checked, description)
    logger.info(f"Axiom {name} holds on {checked} instances over universe {universe.name}")
    return AxiomResult(name, True, checked)


def check_emit_frame(universe: Universe) -> AxiomResult:
    return check_axiom("EmitFrame", universe)


def run_all_axioms(universe: Universe) -> Dict[str, AxiomResult]:
    return {name: check_axiom(name, universe) for name in AXIOMS}
