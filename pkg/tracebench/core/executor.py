#!/usr/bin/env python3
"""
Program executor for the workbench.

Links a client program against a (raw or wrapped) library bundle, runs it,
streams every emitted event to an optional JSONL trace file and feeds it to
an optional online monitor. Under enforcement the run halts at the first
event whose verdict is false.
"""

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from ..exceptions import LibraryError
from ..lang.interpreter import RunResult, RunStatus, initial_config, run
from ..lang.parser import ClientProgram, parse_client, read_source
from ..lang.syntax import Expr, Value
from ..monitors.codec import TraceWriter
from ..monitors.registry import create_monitor
from ..wrappers.linker import link
from ..wrappers.registry import make_lib, wrap
from .config import Config

logger = logging.getLogger(__name__)


@dataclass
class ExecutionResult:
    """Result of executing one program."""

    run: RunResult
    verdicts: List[bool] = field(default_factory=list)
    monitor: Optional[str] = None
    trace_path: Optional[Path] = None
    warnings: List[str] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def trace(self):
        return self.run.trace

    @property
    def status(self) -> RunStatus:
        return self.run.status

    @property
    def value(self) -> Optional[Value]:
        return self.run.value

    @property
    def final_verdict(self) -> Optional[bool]:
        """Verdict on the whole trace; None when no monitor was attached."""
        if self.monitor is None:
            return None
        if not self.verdicts:
            # Verdict on the empty trace.
            return self.metadata.get("empty_verdict", True)
        return self.verdicts[-1]

    @property
    def rejected_at(self) -> Optional[int]:
        """1-based index of the first rejected event."""
        for index, verdict in enumerate(self.verdicts, start=1):
            if not verdict:
                return index
        return None

    @property
    def enforced_halt(self) -> bool:
        return self.run.status == RunStatus.HALTED

    @property
    def success(self) -> bool:
        return self.run.status == RunStatus.VALUE and self.final_verdict is not False


class ProgramExecutor:
    """
    Runs client programs against library bundles.

    Example:
        >>> executor = ProgramExecutor(Config(fuel=10_000))
        >>> result = executor.execute_file("clients/file-good.sx", lib="file", monitor="L-file")
        >>> result.final_verdict
        True
    """

    def __init__(self, config: Optional[Config] = None):
        self.config = config or Config()

    def link_program(self, client: ClientProgram, lib: Optional[str], wrapped: bool = True) -> Expr:
        """Closed program for ``client`` linked against the named bundle."""
        if lib is None:
            if client.op_names:
                raise LibraryError(
                    f"Program binds operations ({', '.join(client.op_names)}) but no library was given"
                )
            return client.body
        bundle = make_lib(lib)
        if wrapped:
            bundle = wrap(lib, bundle)
        return link(bundle, client)

    def execute(
        self,
        client: Union[ClientProgram, str],
        lib: Optional[str] = None,
        wrapped: bool = True,
        monitor: Optional[str] = None,
        enforce: bool = False,
        trace_out: Optional[Union[str, Path]] = None,
        fuel: Optional[int] = None,
    ) -> ExecutionResult:
        """
        Execute a client program.

        Args:
            client: Parsed client or program text
            lib: Library bundle name, or None for a program without operations
            wrapped: Link against the instrumented bundle
            monitor: Trace language to monitor the run with
            enforce: Halt at the first rejected event (needs ``monitor``)
            trace_out: JSONL file receiving each event as it is emitted
            fuel: Step budget; defaults to ``config.fuel``

        Returns:
            ExecutionResult with the run outcome and per-event verdicts
        """
        if isinstance(client, str):
            client = parse_client(client)
        if enforce and monitor is None:
            raise ValueError("enforcement needs a monitor")
        fuel = self.config.fuel if fuel is None else fuel

        expr = self.link_program(client, lib, wrapped)
        online = create_monitor(monitor, strict=self.config.strict_alphabet) if monitor else None
        writer = TraceWriter(trace_out) if trace_out is not None else None

        def on_event(event: Value, trace) -> bool:
            if writer is not None:
                writer.write(event)
            if online is None:
                return True
            verdict = online.feed(event)
            if enforce and not verdict:
                logger.warning(f"Enforcement halted the run at event {len(trace)}: {event!r}")
                return False
            return True

        try:
            result = run(initial_config(expr), fuel, on_event)
        finally:
            if writer is not None:
                writer.close()

        execution = ExecutionResult(
            run=result,
            verdicts=list(online.verdicts) if online else [],
            monitor=monitor,
            trace_path=Path(trace_out) if trace_out is not None else None,
            metadata={"lib": lib, "wrapped": wrapped, "steps": result.steps},
        )
        if online is not None:
            execution.metadata["empty_verdict"] = online.language.verdict(online.language.initial_state())
        if result.status == RunStatus.STUCK:
            execution.warnings.append(f"stuck: {result.stuck_reason}")
        elif result.status == RunStatus.FUEL_EXHAUSTED:
            execution.warnings.append(f"fuel exhausted after {result.steps} steps")
        return execution

    def execute_file(self, path: Union[str, Path], **kwargs) -> ExecutionResult:
        return self.execute(parse_client(read_source(path)), **kwargs)
