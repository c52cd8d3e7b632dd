"""
Scenario catalogue: good and bad clients for every library.

``run`` scenarios link a client against the wrapped library, execute it and
monitor the emitted trace. ``replay`` scenarios feed a hand-written trace
file through the monitor, for traces no reference library can produce.
Bad clients run to completion; they are bad because the monitor rejects
their trace.
"""

import fnmatch
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Union

from ..core.config import Config
from ..core.executor import ProgramExecutor
from ..exceptions import ParseError, ScenarioError, TraceFormatError, UnknownScenarioError
from ..lang.interpreter import RunStatus
from ..lang.parser import ClientProgram, ProgramParser, parse_client, print_value
from ..monitors.codec import read_trace
from ..monitors.registry import create_monitor
from .reports import CatalogueReport, ScenarioReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Scenario:
    """
    A catalogue entry.

    A run scenario names its client either as ``client_file``, an ``.sx``
    file under the configured clients directory, or inline as ``source``.
    ``expected_rejection`` is the 1-based index of the first rejected event,
    or None when no prefix is rejected.
    """

    id: str
    lang: str
    expected_final: bool
    client_file: Optional[str] = None
    source: Optional[str] = None
    lib: Optional[str] = None
    kind: str = "run"
    expected_rejection: Optional[int] = None
    golden: Optional[str] = None
    description: str = ""

    def __post_init__(self):
        if self.kind not in ("run", "replay"):
            raise ScenarioError(f"Scenario {self.id}: unknown kind '{self.kind}'")
        if self.kind == "run" and ((self.client_file is None) == (self.source is None) or self.lib is None):
            raise ScenarioError(f"Scenario {self.id}: run scenarios need one client and a library")
        if self.kind == "replay" and self.golden is None:
            raise ScenarioError(f"Scenario {self.id}: replay scenarios need a trace file")

    def load_client(self, clients_dir: Union[str, Path]) -> ClientProgram:
        """Parse the client, reading ``client_file`` from ``clients_dir``.

        Raises:
            ParseError: If the client text is malformed
            OSError: If the client file cannot be read
        """
        if self.source is not None:
            return parse_client(self.source)
        return ProgramParser().parse_file(Path(clients_dir) / self.client_file)


_CATALOGUE = [
    Scenario(
        id="file-good", lib="file", lang="L-file", expected_final=True,
        client_file="file-good.sx", golden="file-good.jsonl",
        description="open, read, close",
    ),
    Scenario(
        id="file-bad", lib="file", lang="L-file", expected_final=False, expected_rejection=3,
        client_file="file-bad.sx", golden="file-bad.jsonl",
        description="read after close",
    ),
    Scenario(
        id="coll-good", lib="coll", lang="L-coll", expected_final=True,
        client_file="coll-good.sx",
        description="iterate without intervening modification, then modify",
    ),
    Scenario(
        id="coll-bad", lib="coll", lang="L-coll", expected_final=False, expected_rejection=4,
        client_file="coll-bad.sx",
        description="next on an iterator invalidated by add",
    ),
    Scenario(
        id="brac-good", lib="brac", lang="L-brac", expected_final=True,
        client_file="brac-good.sx",
        description="operations inside the callback, two episodes",
    ),
    Scenario(
        id="brac-bad-outside", lib="brac", lang="L-brac", expected_final=False, expected_rejection=7,
        client_file="brac-bad-outside.sx",
        description="op called after the resource was released",
    ),
    Scenario(
        id="brac-bad-nested", lib="brac", lang="L-brac", expected_final=False, expected_rejection=3,
        client_file="brac-bad-nested.sx",
        description="callback acquires the resource again",
    ),
    Scenario(
        id="stack-good", lib="stack", lang="L-stack", expected_final=True,
        client_file="stack-good.sx",
        description="pops return pushed values, then unit on empty",
    ),
    Scenario(
        id="stack-foreach", lib="stack", lang="L-stack", expected_final=True,
        client_file="stack-foreach.sx", golden="stack-foreach.jsonl",
        description="foreach visits the stack top first",
    ),
    Scenario(
        id="stack-bad-reentrant", lib="stack", lang="L-stack", expected_final=False, expected_rejection=5,
        client_file="stack-bad-reentrant.sx",
        description="callback pushes while foreach is running",
    ),
    Scenario(
        id="stack-simple-good", lib="stack-simple", lang="L-stack-simple", expected_final=True,
        client_file="stack-simple-good.sx",
        description="every popped value was pushed",
    ),
    Scenario(
        id="stack-simple-bad", lib="stack-simple", lang="L-stack-simple", expected_final=False,
        expected_rejection=2,
        client_file="stack-simple-bad.sx",
        description="client forges a pop of a value never pushed",
    ),
    Scenario(
        id="str-good", lib="str", lang="L-str", expected_final=True,
        client_file="str-good.sx",
        description="sink a concatenation of sanitized input and a constant",
    ),
    Scenario(
        id="str-bad", lib="str", lang="L-str", expected_final=False, expected_rejection=2,
        client_file="str-bad.sx",
        description="sink an unsanitized input",
    ),
    Scenario(
        id="str-notfresh", kind="replay", lang="L-str", expected_final=True, expected_rejection=2,
        golden="str-notfresh.jsonl",
        description="a reused handle makes the trace acceptable again",
    ),
]

SCENARIOS: Dict[str, Scenario] = {scenario.id: scenario for scenario in _CATALOGUE}


def get_scenario(scenario_id: str) -> Scenario:
    if scenario_id not in SCENARIOS:
        raise UnknownScenarioError(scenario_id)
    return SCENARIOS[scenario_id]


def list_scenarios(pattern: Optional[str] = None) -> List[Scenario]:
    """Scenarios whose id matches the shell-style ``pattern``, in catalogue order."""
    if pattern is None:
        return list(_CATALOGUE)
    return [s for s in _CATALOGUE if fnmatch.fnmatchcase(s.id, pattern)]


def _first_rejection(verdicts: List[bool]) -> Optional[int]:
    for index, verdict in enumerate(verdicts, start=1):
        if not verdict:
            return index
    return None


def _unreadable(scenario: Scenario, message: str) -> ScenarioReport:
    return ScenarioReport(
        id=scenario.id, kind=scenario.kind, lang=scenario.lang, final=False,
        expected_final=scenario.expected_final, expected_rejection=scenario.expected_rejection,
        passed=False, message=message,
    )


def run_scenario(
    scenario: Union[str, Scenario],
    config: Optional[Config] = None,
    trace_dir: Optional[Union[str, Path]] = None,
) -> ScenarioReport:
    """
    Execute a scenario and compare the outcome with its expectations.

    Args:
        scenario: Scenario or scenario id
        config: Workbench configuration (fuel, data directories)
        trace_dir: Directory receiving ``<id>.jsonl`` for run scenarios

    Returns:
        ScenarioReport; ``passed`` is False on any unmet expectation
    """
    if isinstance(scenario, str):
        scenario = get_scenario(scenario)
    config = config or Config()
    golden_path = config.golden_path / scenario.golden if scenario.golden else None
    problems: List[str] = []
    status = value = None
    trace_path = None

    if scenario.kind == "replay":
        try:
            trace = read_trace(golden_path)
        except (OSError, TraceFormatError) as e:
            logger.error(f"Scenario {scenario.id}: cannot read {golden_path}: {e}")
            return _unreadable(scenario, f"cannot read trace file: {e}")
        monitor = create_monitor(scenario.lang, strict=config.strict_alphabet)
        verdicts = [monitor.feed(event) for event in trace]
        final = monitor.verdict
        trace_path = str(golden_path)
    else:
        try:
            client = scenario.load_client(config.clients_path)
        except (OSError, ParseError) as e:
            logger.error(f"Scenario {scenario.id}: cannot load client {scenario.client_file}: {e}")
            return _unreadable(scenario, f"cannot load client: {e}")
        out = Path(trace_dir) / f"{scenario.id}.jsonl" if trace_dir is not None else None
        result = ProgramExecutor(config).execute(
            client, lib=scenario.lib, wrapped=True, monitor=scenario.lang, trace_out=out,
        )
        trace, verdicts = list(result.trace), result.verdicts
        final = bool(result.final_verdict)
        status = result.status.value
        value = print_value(result.value) if result.value is not None else None
        trace_path = str(out) if out is not None else None
        if result.status != RunStatus.VALUE:
            problems.append(f"run ended {status}" + (f": {result.run.stuck_reason}" if result.run.stuck_reason else ""))

    rejected_at = _first_rejection(verdicts)
    if final != scenario.expected_final:
        problems.append(f"final verdict {final}, expected {scenario.expected_final}")
    if rejected_at != scenario.expected_rejection:
        problems.append(f"first rejection at {rejected_at}, expected {scenario.expected_rejection}")

    golden_match = None
    if golden_path is not None and scenario.kind == "run":
        try:
            golden_match = read_trace(golden_path) == trace
        except OSError:
            logger.warning(f"Scenario {scenario.id}: golden trace {golden_path} not found, skipping comparison")
        if golden_match is False:
            problems.append("trace differs from the golden trace")

    report = ScenarioReport(
        id=scenario.id,
        kind=scenario.kind,
        lang=scenario.lang,
        trace=[print_value(event) for event in trace],
        verdicts=verdicts,
        final=final,
        expected_final=scenario.expected_final,
        rejected_at=rejected_at,
        expected_rejection=scenario.expected_rejection,
        status=status,
        value=value,
        trace_path=trace_path,
        golden_match=golden_match,
        passed=not problems,
        message="; ".join(problems) or None,
    )
    logger.info(f"Scenario {scenario.id}: {'passed' if report.passed else 'FAILED'}")
    return report


def run_catalogue(
    pattern: Optional[str] = None,
    config: Optional[Config] = None,
    trace_dir: Optional[Union[str, Path]] = None,
) -> CatalogueReport:
    reports = [run_scenario(s, config, trace_dir) for s in list_scenarios(pattern)]
    passed = sum(report.passed for report in reports)
    return CatalogueReport(
        scenarios=reports,
        totals={"scenarios": len(reports), "passed": passed, "failed": len(reports) - passed},
    )
