"""
Tracebench: an executable workbench for trace properties of instrumented libraries.

Client programs written in a small lambda calculus with references and
``emit`` are linked against library bundles, instrumented by wrappers that
emit protocol events, and monitored online against trace languages.

## Simple Usage:
```python
import tracebench as tb

result = tb.run_client(
    "(with-lib (open close read) (seq (app open ()) (app read ()) (app close ())))",
    lib="file",
    monitor="L-file",
)
print(result.trace, result.final_verdict)
```

## Checking a recorded trace:
```python
import tracebench as tb

trace = tb.read_trace("golden/file-bad.jsonl")
print(tb.check_trace(trace, "L-file"))   # [True, True, False]
```

## Advanced Usage:
```python
import tracebench as tb

config = tb.ConfigBuilder().fuel(10_000).universe("tiny").build()
executor = tb.ProgramExecutor(config)
result = executor.execute_file("clients/stack-foreach.sx", lib="stack", monitor="L-stack")
```
"""

from typing import List, Optional, Sequence

from .core.config import Config, ConfigBuilder, ConfigPreset
from .core.executor import ExecutionResult, ProgramExecutor
from .exceptions import TraceBenchError
from .lang.syntax import Value
from .monitors.codec import read_trace, write_trace

__version__ = "0.1.0"
__author__ = "Tracebench Contributors"

__all__ = [
    # Simple functions
    "run_client",
    "check_trace",

    # Configuration and execution
    "Config",
    "ConfigBuilder",
    "ConfigPreset",
    "ExecutionResult",
    "ProgramExecutor",
    "TraceBenchError",

    # Trace files
    "read_trace",
    "write_trace",

    # Utilities
    "list_libraries",
    "list_languages",
]


def run_client(
    source: str,
    lib: Optional[str] = None,
    monitor: Optional[str] = None,
    wrapped: bool = True,
    enforce: bool = False,
    fuel: Optional[int] = None,
    **kwargs,
) -> ExecutionResult:
    """
    Parse and run a client program.

    Args:
        source: Program text, usually ``(with-lib (ops...) body)``
        lib: Library bundle to link against
        monitor: Trace language to monitor the run with
        wrapped: Use the instrumented bundle
        enforce: Halt at the first rejected event
        fuel: Step budget
        **kwargs: Additional configuration options

    Returns:
        ExecutionResult of the run
    """
    config = Config(**kwargs)
    return ProgramExecutor(config).execute(
        source, lib=lib, wrapped=wrapped, monitor=monitor, enforce=enforce, fuel=fuel,
    )


def check_trace(trace: Sequence[Value], lang: str) -> List[bool]:
    """Monitor verdict after each event of ``trace``."""
    from .monitors.registry import fold_verdicts
    return fold_verdicts(lang, list(trace))


def list_libraries() -> List[str]:
    from .wrappers.registry import get_registry
    return get_registry().list_libraries()


def list_languages() -> List[str]:
    from .monitors.registry import get_registry
    return get_registry().list_languages()
