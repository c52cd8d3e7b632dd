"""
Canonical JSONL encoding of values and traces.

One event per line, in emission order, with compact separators so that
identical traces produce byte-identical files::

    {"t":"unit"}  {"t":"int","v":3}  {"t":"loc","v":0}  {"t":"fun","v":7}
    {"t":"sym","v":"open"}  {"t":"pair","v":[<enc>,<enc>]}
"""

import json
from pathlib import Path
from typing import Any, Dict, Iterable, List, Union

from ..exceptions import TraceFormatError
from ..lang.syntax import UNIT, FunId, Int, Loc, Pair, Sym, Unit, Value


def encode_value(value: Value) -> Dict[str, Any]:
    if isinstance(value, Unit):
        return {"t": "unit"}
    if isinstance(value, Int):
        return {"t": "int", "v": value.n}
    if isinstance(value, Loc):
        return {"t": "loc", "v": value.id}
    if isinstance(value, FunId):
        return {"t": "fun", "v": value.id}
    if isinstance(value, Sym):
        return {"t": "sym", "v": value.name}
    if isinstance(value, Pair):
        return {"t": "pair", "v": [encode_value(value.left), encode_value(value.right)]}
    raise TypeError(f"Not a value: {value!r}")


def decode_value(data: Any) -> Value:
    """Inverse of :func:`encode_value`; raises ValueError on malformed input."""
    if not isinstance(data, dict) or "t" not in data:
        raise ValueError(f"expected an object with a 't' field, got {data!r}")
    tag = data["t"]
    if tag == "unit":
        return UNIT
    payload = data.get("v")
    if tag in ("int", "loc", "fun"):
        if not isinstance(payload, int) or isinstance(payload, bool):
            raise ValueError(f"'{tag}' expects an integer payload")
        if tag == "int":
            return Int(payload)
        if payload < 0:
            raise ValueError(f"'{tag}' expects a natural number")
        return Loc(payload) if tag == "loc" else FunId(payload)
    if tag == "sym":
        if not isinstance(payload, str):
            raise ValueError("'sym' expects a string payload")
        return Sym(payload)
    if tag == "pair":
        if not isinstance(payload, list) or len(payload) != 2:
            raise ValueError("'pair' expects a two-element list")
        return Pair(decode_value(payload[0]), decode_value(payload[1]))
    raise ValueError(f"unknown value tag {tag!r}")


def dumps_event(value: Value) -> str:
    return json.dumps(encode_value(value), separators=(",", ":"), ensure_ascii=True)


def write_trace(path: Union[str, Path], trace: Iterable[Value]) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for event in trace:
            handle.write(dumps_event(event) + "\n")


def read_trace(path: Union[str, Path]) -> List[Value]:
    """Read a JSONL trace file; blank lines are ignored.

    Raises:
        TraceFormatError: If a line is not a valid encoded value
    """
    path = Path(path)
    trace = []
    with path.open("rb") as handle:
        for line_no, raw in enumerate(handle, start=1):
            try:
                line = raw.decode("utf-8")
            except UnicodeDecodeError as e:
                raise TraceFormatError(str(path), line_no, f"invalid UTF-8 ({e.reason})") from e
            if not line.strip():
                continue
            try:
                trace.append(decode_value(json.loads(line)))
            except (ValueError, TypeError) as e:
                raise TraceFormatError(str(path), line_no, str(e)) from e
    return trace


class TraceWriter:
    """Streams events to a JSONL file as they are emitted."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._handle = self.path.open("w", encoding="utf-8", newline="\n")
        self.count = 0

    def write(self, event: Value) -> None:
        self._handle.write(dumps_event(event) + "\n")
        self._handle.flush()
        self.count += 1

    def close(self) -> None:
        self._handle.close()

    def __enter__(self) -> "TraceWriter":
        return self

    def __exit__(self, *exc) -> None:
        self.close()
