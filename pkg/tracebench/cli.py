#!/usr/bin/env python3
"""
Command-line interface for tracebench.

Exit codes:
    0  success
    1  parse, trace-format, configuration or I/O error
    2  the program got stuck or ran out of fuel
    3  the monitor rejected the trace
    4  a scenario, fuzz, axiom or lemma check failed
"""

import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

import click
from dotenv import load_dotenv

from . import __version__
from .core.config import LOG_LEVELS, Config, load_config
from .core.executor import ProgramExecutor
from .exceptions import TraceBenchError
from .lang.interpreter import RunStatus
from .lang.parser import print_value
from .monitors.codec import read_trace
from .monitors.registry import create_monitor, get_registry as get_language_registry

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_STUCK = 2
EXIT_REJECTED = 3
EXIT_FAILED = 4

LOG_FORMAT = '%(asctime)s [%(levelname)s] %(name)s: %(message)s'


def _fail(message: str, code: int = EXIT_ERROR):
    click.echo(f"Error: {message}", err=True)
    sys.exit(code)


def _write_json(path: Optional[str], report) -> None:
    if path:
        Path(path).parent.mkdir(parents=True, exist_ok=True)
        Path(path).write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")


@click.group()
@click.option("--config", "config_path", type=click.Path(dir_okay=False), help="JSON or YAML configuration file.")
@click.option("--log-level", type=click.Choice(LOG_LEVELS, case_sensitive=False), help="Logging level.")
@click.option("-v", "--verbose", count=True, help="Increase logging verbosity (-v info, -vv debug).")
@click.version_option(__version__, prog_name="tracebench")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[str], log_level: Optional[str], verbose: int):
    """Run instrumented programs, check traces and exercise the resource model."""
    load_dotenv()
    try:
        config = load_config(config_path)
    except (TraceBenchError, OSError, ImportError) as e:
        _fail(str(e))

    if log_level is None and verbose:
        log_level = "DEBUG" if verbose > 1 else "INFO"
    config = config.merged(log_level=log_level.upper() if log_level else None)
    logging.basicConfig(level=getattr(logging, config.log_level), format=LOG_FORMAT)
    ctx.obj = config


@cli.command()
@click.argument("program", type=click.Path(dir_okay=False))
@click.option("--lib", help="Library bundle bound by the program's with-lib form.")
@click.option("--wrapped/--raw", default=True, show_default=True, help="Link against the instrumented bundle.")
@click.option("--monitor", "monitor_lang", help="Trace language to monitor the run with, e.g. L-file.")
@click.option("--enforce", is_flag=True, help="Halt at the first event the monitor rejects.")
@click.option("--fuel", type=int, help="Maximum number of reduction steps.")
@click.option("--trace-out", type=click.Path(dir_okay=False), help="Stream emitted events to this JSONL file.")
@click.pass_obj
def run(config: Config, program, lib, wrapped, monitor_lang, enforce, fuel, trace_out):
    """Execute PROGRAM, an .sx client program."""
    if enforce and monitor_lang is None:
        raise click.UsageError("--enforce requires --monitor")
    try:
        result = ProgramExecutor(config).execute_file(
            program, lib=lib, wrapped=wrapped, monitor=monitor_lang,
            enforce=enforce, trace_out=trace_out, fuel=fuel,
        )
    except (TraceBenchError, OSError) as e:
        _fail(str(e))

    for index, event in enumerate(result.trace, start=1):
        line = f"{index:>4}  {print_value(event)}"
        if result.verdicts:
            line += "  " + ("ok" if result.verdicts[index - 1] else "REJECTED")
        click.echo(line)

    click.echo(f"status: {result.status.value} after {result.run.steps} steps")
    if result.value is not None:
        click.echo(f"value: {print_value(result.value)}")
    if result.monitor is not None:
        verdict = "accepted" if result.final_verdict else f"rejected at event {result.rejected_at}"
        click.echo(f"{result.monitor}: {verdict}")

    if result.enforced_halt:
        click.echo(f"halted by enforcement at event {len(result.trace)}", err=True)
        sys.exit(EXIT_REJECTED)
    if result.status == RunStatus.STUCK:
        _fail(f"stuck: {result.run.stuck_reason}", EXIT_STUCK)
    if result.status == RunStatus.FUEL_EXHAUSTED:
        _fail(f"fuel exhausted after {result.run.steps} steps", EXIT_STUCK)


@cli.command()
@click.argument("trace_path", type=click.Path(dir_okay=False))
@click.option("--lang", required=True, help="Trace language, e.g. L-file.")
@click.option("--prefixes", is_flag=True, help="Print the verdict after every event.")
@click.pass_obj
def check(config: Config, trace_path, lang, prefixes):
    """Replay a JSONL trace file through a monitor."""
    try:
        trace = read_trace(trace_path)
        monitor = create_monitor(lang, strict=config.strict_alphabet)
    except (TraceBenchError, OSError) as e:
        _fail(str(e))

    for index, event in enumerate(trace, start=1):
        verdict = monitor.feed(event)
        if prefixes:
            click.echo(f"{index:>4}  {print_value(event)}  {'ok' if verdict else 'REJECTED'}")

    if monitor.verdict:
        click.echo(f"{lang}: accepted ({len(trace)} events)")
        return
    rejected = monitor.first_rejection()
    where = f"first rejected at event {rejected}" if rejected else "empty trace rejected"
    click.echo(f"{lang}: rejected ({where})")
    sys.exit(EXIT_REJECTED)


@cli.command()
@click.option("--id", "pattern", help="Only run scenarios whose id matches this shell pattern.")
@click.option("--json-out", type=click.Path(dir_okay=False), help="Write the machine-readable report here.")
@click.option("--trace-dir", type=click.Path(file_okay=False), help="Write each run scenario's trace here.")
@click.pass_obj
def scenarios(config: Config, pattern, json_out, trace_dir):
    """Run the scenario catalogue."""
    from .harness.scenarios import list_scenarios, run_catalogue

    if not list_scenarios(pattern):
        _fail(f"no scenario matches '{pattern}'")
    report = run_catalogue(pattern, config, trace_dir)
    for scenario_report in report.scenarios:
        click.echo(scenario_report.summary_line())
    click.echo(f"{report.totals['passed']}/{report.totals['scenarios']} scenarios passed")
    _write_json(json_out, report)
    if not report.passed:
        sys.exit(EXIT_FAILED)


@cli.command("fuzz-erasure")
@click.option("--seed", type=int, help="Seed of the program stream.")
@click.option("--count", type=int, help="Number of generated programs.")
@click.option("--fuel", type=int, help="Fuel for each run.")
@click.option("--max-depth", type=int, help="Maximum generation depth.")
@click.option("--json-out", type=click.Path(dir_okay=False), help="Write the machine-readable report here.")
@click.pass_obj
def fuzz_erasure(config: Config, seed, count, fuel, max_depth, json_out):
    """Check that erasing emits does not change a program's behaviour."""
    from .harness.fuzz import erasure_fuzz
    from .harness.generator import GenConfig

    try:
        config = config.merged(fuzz_seed=seed, fuzz_count=count, fuzz_fuel=fuel, gen_max_depth=max_depth)
    except TraceBenchError as e:
        _fail(str(e))
    gen_config = GenConfig(max_depth=config.gen_max_depth, emit_probability=config.emit_probability)
    report = erasure_fuzz(config.fuzz_seed, config.fuzz_count, config.fuzz_fuel, gen_config)

    click.echo(
        f"seed {report.seed}: {report.checked} checked, {report.skipped_fuel} skipped (fuel), "
        f"{report.with_emit} with emits, {len(report.failures)} failures"
    )
    for failure in report.failures:
        click.echo(f"  sample {failure.index}: {failure.reason}")
        click.echo(f"    {failure.program}")
    _write_json(json_out, report)
    if not report.passed:
        sys.exit(EXIT_FAILED)


@cli.command()
@click.option("--universe", "universe_name", help="Universe preset: tiny, default or full.")
@click.option("--json-out", type=click.Path(dir_okay=False), help="Write the machine-readable report here.")
@click.pass_obj
def axioms(config: Config, universe_name, json_out):
    """Check the monoid laws and trace axioms over a finite universe."""
    from .harness.reports import AxiomEntry, AxiomReport
    from .semantics.axioms import run_all_axioms
    from .semantics.universe import get_universe

    try:
        universe = get_universe(universe_name or config.universe)
    except TraceBenchError as e:
        _fail(str(e))

    click.echo(universe.describe())
    report = AxiomReport(universe=universe.name, resources=len(universe.resources))
    for name, result in run_all_axioms(universe).items():
        report.results.append(AxiomEntry(
            name=name, passed=result.passed, checked=result.checked, counterexample=result.counterexample,
        ))
        click.echo(f"  {name:<14} {'PASS' if result.passed else 'FAIL':<5} {result.checked:>9} instances")
        if result.counterexample:
            click.echo(f"    counterexample: {result.counterexample}")
    _write_json(json_out, report)
    if not report.passed:
        sys.exit(EXIT_FAILED)


@cli.command()
@click.option("--max-len", type=int, default=5, show_default=True, help="Longest trace enumerated.")
@click.option("--json-out", type=click.Path(dir_okay=False), help="Write the machine-readable report here.")
@click.pass_obj
def lemmas(config: Config, max_len, json_out):
    """Check the language facts that justify each wrapper's emits."""
    from .harness.reports import LemmaEntry, LemmaReport
    from .monitors.lemmas import check_all_lemmas

    report = LemmaReport(max_len=max_len)
    for name, result in check_all_lemmas(max_len).items():
        counterexample = None
        if result.counterexample is not None:
            counterexample = ", ".join(repr(part) for part in result.counterexample)
        report.results.append(LemmaEntry(
            name=name, holds=result.holds, checked=result.checked, counterexample=counterexample,
        ))
        click.echo(f"  {name:<20} {'HOLDS' if result.holds else 'FAILS':<6} {result.checked:>7} instances")
        if counterexample:
            click.echo(f"    counterexample: {counterexample}")
    _write_json(json_out, report)
    if not report.passed:
        sys.exit(EXIT_FAILED)


@cli.command("languages")
def languages():
    """List the registered trace languages."""
    for lang in get_language_registry().list_languages():
        click.echo(lang)


def dispatch(argv: Sequence[str]) -> int:
    """Run the command line on ``argv`` and return its exit code."""
    try:
        cli.main(args=list(argv), prog_name="tracebench", standalone_mode=True)
    except SystemExit as e:
        if e.code is None or isinstance(e.code, int):
            return e.code or EXIT_OK
        click.echo(e.code, err=True)
        return EXIT_ERROR
    return EXIT_OK


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
