"""Tests for the program generator and the erasure differential check."""

from dataclasses import replace

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tracebench.harness.fuzz import check_erasure, compare_erased, erasure_fuzz
from tracebench.harness.generator import GenConfig, gen_program, gen_programs
from tracebench.lang.erasure import erase
from tracebench.lang.interpreter import run_program
from tracebench.lang.parser import parse, print_expr
from tracebench.lang.syntax import contains_emit, is_closed

LOOP = "(let r (ref ()) (seq (op := r (lam x (app (get r) x))) (app (get r) 1)))"


class TestGenerator:
    """Test seeded program generation."""

    def test_deterministic(self):
        assert gen_program(GenConfig(seed=3)) == gen_program(GenConfig(seed=3))

    def test_seeds_differ(self):
        programs = {gen_program(GenConfig(seed=s)) for s in range(20)}
        assert len(programs) > 1

    def test_gen_programs_count_and_indices(self):
        indices = [index for index, _ in gen_programs(GenConfig(seed=1), 7)]
        assert indices == list(range(7))

    def test_gen_programs_reproducible(self):
        first = [expr for _, expr in gen_programs(GenConfig(seed=9), 5)]
        second = [expr for _, expr in gen_programs(GenConfig(seed=9), 5)]
        assert first == second

    def test_depth_zero_is_a_leaf(self):
        program = gen_program(GenConfig(seed=0, max_depth=0))
        assert is_closed(program)
        assert run_program(program, 10).terminated

    def test_default_emit_rate(self):
        programs = [expr for _, expr in gen_programs(GenConfig(seed=0, max_depth=5), 1000)]
        with_emit = sum(1 for expr in programs if contains_emit(expr))
        assert with_emit >= 300, with_emit

    def test_erase_is_idempotent(self):
        for index, expr in gen_programs(GenConfig(seed=11), 100):
            once = erase(expr)
            assert erase(once) == once, index
            assert not contains_emit(once), index

    def test_programs_print_and_parse_back(self):
        for index, expr in gen_programs(GenConfig(seed=5), 100):
            assert parse(print_expr(expr)) == expr, index

    @pytest.mark.property
    @settings(max_examples=50, deadline=None)
    @given(st.integers(min_value=0, max_value=2**32))
    def test_programs_are_closed(self, seed):
        assert is_closed(gen_program(GenConfig(seed=seed, max_depth=4)))


class TestCheckErasure:
    """Test the single-program erasure check."""

    def test_program_with_emits(self):
        assert check_erasure(parse("(seq (emit 'a) (let x (ref 1) (op + (get x) 2)))"), 1_000) is None

    def test_stuck_programs_agree(self):
        assert check_erasure(parse("(seq (emit 'a) (app 1 2))"), 1_000) is None

    def test_non_terminating_program(self):
        with pytest.raises(ValueError):
            check_erasure(parse(LOOP), 1_000)

    def test_compare_reports_emitted_events(self):
        run = run_program(parse("(seq (emit 'a) 1)"), 100)
        assert "emitted 1 events" in compare_erased(run, run)

    def test_compare_reports_different_values(self):
        original = run_program(parse("(op + 1 2)"), 100)
        other = run_program(parse("(op + 1 3)"), 100)
        assert "final expressions differ" in compare_erased(original, other)

    def test_compare_reports_different_status(self):
        original = run_program(parse("(op + 1 2)"), 100)
        other = run_program(parse("(app 1 2)"), 100)
        assert "ended stuck" in compare_erased(original, other)


class TestErasureFuzz:
    """Test the fuzz loop."""

    def test_small_run_passes(self):
        report = erasure_fuzz(seed=42, count=40, fuel=5_000)
        assert report.passed, report.failures
        assert report.checked + report.skipped_fuel == 40
        assert report.seed == 42

    def test_emits_are_generated(self):
        report = erasure_fuzz(seed=1, count=40, fuel=2_000, gen_config=GenConfig(emit_probability=0.9))
        assert report.with_emit > 20

    def test_loops_are_skipped(self):
        cfg = GenConfig(loop_weight=50.0, leaf_probability=0.0, max_depth=2)
        report = erasure_fuzz(seed=5, count=20, fuel=500, gen_config=cfg)
        assert report.skipped_fuel > 0
        assert report.passed

    def test_same_seed_same_report(self):
        assert erasure_fuzz(seed=8, count=15, fuel=2_000) == erasure_fuzz(seed=8, count=15, fuel=2_000)

    @pytest.mark.slow
    def test_default_run(self):
        report = erasure_fuzz(seed=42, count=500, fuel=10_000, gen_config=replace(GenConfig(), max_depth=5))
        assert report.passed, report.failures
