"""Differential test of erasure: a run and the run of its erasure agree."""

import logging
from dataclasses import replace
from typing import Optional

from ..lang.erasure import erase, erase_env
from ..lang.interpreter import RunResult, run_program
from ..lang.parser import print_expr
from ..lang.syntax import Expr, contains_emit
from .generator import GenConfig, gen_programs
from .reports import FuzzFailure, FuzzReport

logger = logging.getLogger(__name__)


def compare_erased(original: RunResult, erased: RunResult) -> Optional[str]:
    """Why the erased run does not match the original one, or None."""
    if erased.trace:
        return f"erased run emitted {len(erased.trace)} events"
    if erased.status != original.status:
        return f"erased run ended {erased.status.value}, original ended {original.status.value}"
    if erased.final.expr != erase(original.final.expr):
        return (
            f"final expressions differ: {print_expr(erased.final.expr)} "
            f"vs erase({print_expr(original.final.expr)})"
        )
    if erased.final.heap != original.final.heap:
        return f"heaps differ: {erased.final.heap!r} vs {original.final.heap!r}"
    if erased.final.fenv != erase_env(original.final.fenv):
        return "function environments differ after erasure"
    return None


def check_erasure(expr: Expr, fuel: int) -> Optional[str]:
    """Run ``expr`` and its erasure; returns None when they agree.

    Raises:
        ValueError: If the original run does not terminate within ``fuel``
    """
    original = run_program(expr, fuel)
    if not original.terminated:
        raise ValueError("program did not terminate within the fuel budget")
    return compare_erased(original, run_program(erase(expr), fuel))


def erasure_fuzz(
    seed: int = 42,
    count: int = 500,
    fuel: int = 10_000,
    gen_config: Optional[GenConfig] = None,
) -> FuzzReport:
    """
    Check erasure on ``count`` generated programs.

    Programs that neither reach a value nor get stuck within ``fuel`` steps
    are counted as skipped, never as failures.
    """
    cfg = replace(gen_config or GenConfig(), seed=seed)
    report = FuzzReport(seed=seed, count=count, fuel=fuel)

    for index, expr in gen_programs(cfg, count):
        if contains_emit(expr):
            report.with_emit += 1
        original = run_program(expr, fuel)
        if not original.terminated:
            report.skipped_fuel += 1
            logger.debug(f"Sample {index} skipped: fuel exhausted after {original.steps} steps")
            continue
        report.checked += 1
        reason = compare_erased(original, run_program(erase(expr), fuel))
        if reason is not None:
            logger.error(f"Erasure failure on sample {index}: {reason}")
            report.failures.append(FuzzFailure(index=index, program=print_expr(expr), reason=reason))

    if report.skipped_fuel:
        logger.warning(f"Skipped {report.skipped_fuel} of {count} samples that exhausted {fuel} steps of fuel")
    logger.info(
        f"Erasure fuzz seed={seed}: checked={report.checked} skipped={report.skipped_fuel} "
        f"failures={len(report.failures)}"
    )
    return report
