"""Tests for the finite resource model and the trace axioms."""

import pytest

from tracebench.exceptions import ConfigError
from tracebench.lang.syntax import UNIT, Int, Sym, Var
from tracebench.semantics import (
    AXIOMS, RESOURCE_UNIT, TRACE_UNIT, Emp, FullTrace, Hist, Inv, PointsTo, Pure,
    Resource, Star, TraceFlag, TraceRes, UNIVERSE_PRESETS, World,
    as_heap, check_axiom, check_emit_frame, check_upward_closure, denote,
    erasure_sat, get_universe, heap_mul, is_prefix, res_leq, res_mul,
    run_all_axioms, trace_leq, trace_mul, world_leq, worlds,
)
from tests.events import OPEN, READ

A, B = Sym("a"), Sym("b")
HIST, FULL = TraceFlag.HIST, TraceFlag.FULL


def hist(*t):
    return TraceRes(HIST, tuple(t))


def full(*t):
    return TraceRes(FULL, tuple(t))


class TestTraceMonoid:
    """Test the product on trace resources."""

    @pytest.mark.parametrize("left,right,expected", [
        (hist(A), hist(A, B), hist(A, B)),
        (hist(A, B), hist(A), hist(A, B)),
        (hist(A), hist(B), None),
        (full(A), full(A), None),
        (full(A, B), hist(A), full(A, B)),
        (hist(A), full(A, B), full(A, B)),
        (hist(B), full(A, B), None),
        (TRACE_UNIT, full(A), full(A)),
    ])
    def test_trace_mul(self, left, right, expected):
        assert trace_mul(left, right) == expected

    def test_prefix_order(self):
        assert is_prefix((), (A,))
        assert is_prefix((A,), (A, B))
        assert not is_prefix((B,), (A, B))
        assert not is_prefix((A, B), (A,))
        assert trace_leq((A,), (A,))

    def test_repr(self):
        assert repr(full(A)) == "(full, [Sym(name='a')])"


class TestHeapMonoid:
    """Test disjoint heap union."""

    def test_disjoint_union(self):
        assert heap_mul(as_heap({0: UNIT}), as_heap({1: Int(1)})) == ((0, UNIT), (1, Int(1)))

    def test_overlap_undefined(self):
        assert heap_mul(as_heap({0: UNIT}), as_heap({0: UNIT})) is None

    def test_as_heap_is_canonical(self):
        assert as_heap({1: UNIT, 0: Int(1)}) == as_heap([(0, Int(1)), (1, UNIT)])

    def test_res_mul(self):
        m1 = Resource(as_heap({0: UNIT}), hist(A))
        m2 = Resource(as_heap({1: UNIT}), full(A, B))
        assert res_mul(m1, m2) == Resource(as_heap({0: UNIT, 1: UNIT}), full(A, B))
        assert res_mul(m1, m1) is None
        assert res_mul(m1, RESOURCE_UNIT) == m1

    def test_res_leq(self, tiny_universe):
        small = Resource((), hist(A))
        big = Resource(as_heap({0: UNIT}), full(A, A))
        assert res_leq(RESOURCE_UNIT, big, tiny_universe)
        assert res_leq(small, big, tiny_universe)
        assert not res_leq(big, small, tiny_universe)


class TestUniverse:
    """Test the finite universes."""

    @pytest.mark.parametrize("name,count", [("tiny", 12), ("default", 270), ("full", 480)])
    def test_resource_counts(self, name, count):
        assert len(get_universe(name).resources) == count

    def test_unknown_universe(self):
        with pytest.raises(ConfigError):
            get_universe("huge")

    def test_tiny_invariants_are_deduplicated(self, tiny_universe):
        assert len(tiny_universe.invariants) == 3
        assert frozenset() in tiny_universe.invariants

    def test_describe(self, tiny_universe):
        assert tiny_universe.describe().startswith("tiny: 1 locations")
        assert "12 resources" in tiny_universe.describe()

    def test_presets_hashable(self):
        assert len({u for u in UNIVERSE_PRESETS.values()}) == 3


class TestWorlds:
    """Test worlds and the erasure relation."""

    def setup_method(self):
        self.w = World((), frozenset({(), (A,)}))

    def test_admits(self):
        assert self.w.admits((A,))
        assert not self.w.admits((A, A))

    def test_language_invariant(self):
        w = World((), "L-file")
        assert w.admits((OPEN, READ))
        assert not w.admits((READ,))

    def test_world_leq(self):
        bigger = World(((1, ("x", Var("x"))),), self.w.inv)
        assert world_leq(self.w, bigger)
        assert not world_leq(bigger, self.w)
        assert not world_leq(self.w, World((), frozenset()))

    def test_full_trace_must_match(self):
        m = Resource((), full(A))
        assert erasure_sat((A,), ({}, {}), self.w, m)
        assert not erasure_sat((), ({}, {}), self.w, m)

    def test_hist_is_a_prefix(self):
        assert erasure_sat((A,), ({}, {}), self.w, Resource((), TRACE_UNIT))
        assert erasure_sat((A,), ({}, {}), self.w, Resource((), hist(A)))
        assert not erasure_sat((), ({}, {}), self.w, Resource((), hist(A)))

    def test_trace_must_be_admitted(self):
        w = World((), frozenset({(A, A)}))
        assert erasure_sat((A, A), ({}, {}), w, Resource((), full(A, A)))
        assert not erasure_sat((A, A), ({}, {}), self.w, Resource((), full(A, A)))

    def test_heap_and_environment_must_match(self):
        m = Resource(as_heap({0: UNIT}), full(A))
        assert erasure_sat((A,), ({0: UNIT}, ()), self.w, m)
        assert not erasure_sat((A,), ({}, ()), self.w, m)
        assert not erasure_sat((A,), ({0: UNIT}, {1: ("x", Var("x"))}), self.w, m)


class TestAssertions:
    """Test assertion denotations over the tiny universe."""

    def setup_method(self):
        self.universe = get_universe("tiny")
        self.w = worlds(self.universe)[0]

    def test_emp_is_everything(self):
        assert denote(Emp(), self.w, self.universe) == self.universe.resource_set

    def test_pure(self):
        assert denote(Pure(False), self.w, self.universe) == frozenset()
        assert denote(Pure(True), self.w, self.universe) == self.universe.resource_set

    def test_full_trace(self):
        satisfying = denote(FullTrace(()), self.w, self.universe)
        assert len(satisfying) == 2
        assert all(m.tr == full() for m in satisfying)

    def test_hist(self):
        satisfying = denote(Hist((A,)), self.w, self.universe)
        assert {m.tr for m in satisfying} == {hist(A), hist(A, A), full(A), full(A, A)}
        assert len(satisfying) == 8

    def test_points_to(self):
        satisfying = denote(PointsTo(0, UNIT), self.w, self.universe)
        assert len(satisfying) == 6
        assert denote(Star(PointsTo(0, UNIT), PointsTo(0, UNIT)), self.w, self.universe) == frozenset()

    def test_inv_reads_the_world(self):
        inv = self.universe.invariants[1]
        assert denote(Inv(inv), World((), inv), self.universe) == self.universe.resource_set
        assert denote(Inv(inv), World((), self.universe.invariants[0]), self.universe) == frozenset()

    def test_upward_closure(self):
        for a in (Hist((A,)), FullTrace((A,)), PointsTo(0, UNIT), Star(PointsTo(0, UNIT), Hist(()))):
            closed, witness = check_upward_closure(a, self.w, self.universe)
            assert closed, witness

    def test_str(self):
        assert str(Star(Emp(), Pure(True))) == "(emp * true)"


class TestAxioms:
    """The monoid laws and trace axioms hold on the small universes."""

    @pytest.mark.parametrize("name", list(AXIOMS))
    def test_axiom_tiny(self, name, tiny_universe):
        result = check_axiom(name, tiny_universe)
        assert result.passed, result.counterexample
        assert result
        assert result.checked > 0

    def test_emit_frame(self, tiny_universe):
        assert check_emit_frame(tiny_universe).passed

    def test_unknown_axiom(self, tiny_universe):
        with pytest.raises(KeyError):
            check_axiom("frobnicate", tiny_universe)

    @pytest.mark.slow
    def test_all_axioms_default(self):
        results = run_all_axioms(get_universe("default"))
        failing = {name: r.counterexample for name, r in results.items() if not r.passed}
        assert not failing
