"""Base class for trace languages and a stateful monitor wrapper."""

import logging
from abc import ABC, abstractmethod
from typing import Any, Generic, List, Optional, Sequence, TypeVar

from ..lang.syntax import Pair, Sym, Value


logger = logging.getLogger(__name__)

Trace = Sequence[Value]
S = TypeVar("S")


def is_sym(value: Value, name: str) -> bool:
    return isinstance(value, Sym) and value.name == name


def tagged(event: Value, name: str) -> Optional[Value]:
    """Payload of ``<name, payload>``, or None for any other event."""
    if isinstance(event, Pair) and is_sym(event.left, name):
        return event.right
    return None


class TraceLanguage(ABC, Generic[S]):
    """A trace language with a declarative membership test and an online monitor.

    Monitor states are immutable; :meth:`step` returns a new state. For every
    trace, folding :meth:`step` over it and taking :meth:`verdict` agrees with
    :meth:`member`.
    """

    lang_id: str = ""
    prefix_closed: bool = True

    @abstractmethod
    def in_alphabet(self, event: Value) -> bool:
        pass

    @abstractmethod
    def member(self, trace: Trace) -> bool:
        pass

    @abstractmethod
    def initial_state(self) -> S:
        pass

    @abstractmethod
    def step(self, state: S, event: Value) -> S:
        pass

    @abstractmethod
    def verdict(self, state: S) -> bool:
        pass

    def fold(self, trace: Trace) -> S:
        state = self.initial_state()
        for event in trace:
            state = self.step(state, event)
        return state

    def fold_verdicts(self, trace: Trace) -> List[bool]:
        """Verdict after each event, in order (the empty prefix is not included)."""
        verdicts = []
        state = self.initial_state()
        for event in trace:
            state = self.step(state, event)
            verdicts.append(self.verdict(state))
        return verdicts


class Monitor:
    """Incremental monitor over one trace.

    Feed events in emission order with :meth:`feed`; each call returns the
    verdict for the trace seen so far. With ``strict=False`` events outside
    the language's alphabet are skipped instead of rejected.
    """

    def __init__(self, language: TraceLanguage, strict: bool = True):
        self.language = language
        self.strict = strict
        self.state: Any = language.initial_state()
        self.events: List[Value] = []
        self.verdicts: List[bool] = []

    @property
    def verdict(self) -> bool:
        return self.language.verdict(self.state)

    def feed(self, event: Value) -> bool:
        self.events.append(event)
        if self.strict or self.language.in_alphabet(event):
            self.state = self.language.step(self.state, event)
        else:
            logger.warning(f"{self.language.lang_id}: skipping event outside the alphabet: {event!r}")
        verdict = self.verdict
        self.verdicts.append(verdict)
        if not verdict:
            logger.debug(f"{self.language.lang_id}: rejected at event {len(self.events)}")
        return verdict

    def first_rejection(self) -> Optional[int]:
        """1-based index of the first rejecting prefix, if any."""
        for index, verdict in enumerate(self.verdicts, start=1):
            if not verdict:
                return index
        return None
