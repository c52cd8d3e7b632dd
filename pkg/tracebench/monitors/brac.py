"""
L-brac: well-bracketed ``withRes`` episodes.

A complete episode for callback ``f`` is::

    <call,withRes,f> <call,f> (<call,op> <ret,op>)* <ret,f> <ret,withRes,f>

and the language is the prefix closure of sequences of episodes. Calling
``withRes`` inside a callback body is not part of the grammar.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from ..lang.syntax import FunId, Pair, Sym, Value, tup
from .base import Trace, TraceLanguage, is_sym, tagged


def call_with_res(f: Value) -> Value:
    return tup(Sym("call"), Sym("withRes"), f)


def ret_with_res(f: Value) -> Value:
    return tup(Sym("ret"), Sym("withRes"), f)


CALL_OP = tup(Sym("call"), Sym("op"))
RET_OP = tup(Sym("ret"), Sym("op"))


def classify(event: Value) -> Optional[Tuple[str, Optional[FunId]]]:
    """Kind of a bracketing event and its callback id, or None if foreign."""
    for direction in ("call", "ret"):
        payload = tagged(event, direction)
        if payload is None:
            continue
        if isinstance(payload, FunId):
            return f"{direction}-f", payload
        if is_sym(payload, "op"):
            return f"{direction}-op", None
        if isinstance(payload, Pair) and is_sym(payload.left, "withRes") and isinstance(payload.right, FunId):
            return f"{direction}-withRes", payload.right
    return None


def episode(f: FunId, n_ops: int) -> List[Value]:
    events = [call_with_res(f), tup(Sym("call"), f)]
    events += [CALL_OP, RET_OP] * n_ops
    events += [tup(Sym("ret"), f), ret_with_res(f)]
    return events


def _episode_head(trace: Trace) -> Optional[FunId]:
    kind = classify(trace[0]) if trace else None
    return kind[1] if kind and kind[0] == "call-withRes" else None


def is_word(trace: Trace) -> bool:
    """``trace`` is a concatenation of complete episodes."""
    if not trace:
        return True
    f = _episode_head(trace)
    if f is None:
        return False
    for n_ops in range((len(trace) - 4) // 2 + 1):
        candidate = episode(f, n_ops)
        if list(trace[:len(candidate)]) == candidate and is_word(trace[len(candidate):]):
            return True
    return False


def is_episode_prefix(trace: Trace) -> bool:
    if not trace:
        return True
    f = _episode_head(trace)
    if f is None:
        return False
    return any(episode(f, n_ops)[:len(trace)] == list(trace) for n_ops in range(len(trace) // 2 + 1))


class BracPhase(str, Enum):
    BALANCED = "balanced"
    AFTER_CALL_WITH_RES = "after-call-withRes"
    IN_BODY = "in-body"
    IN_OP = "in-op"
    AFTER_RET_F = "after-ret-f"


@dataclass(frozen=True)
class BracState:
    """One-register automaton state; ``callback`` is the register."""

    phase: BracPhase = BracPhase.BALANCED
    callback: Optional[FunId] = None
    rejected: bool = False


# (phase, event kind) -> (next phase, whether the event must carry the register)
_TRANSITIONS = {
    (BracPhase.AFTER_CALL_WITH_RES, "call-f"): (BracPhase.IN_BODY, True),
    (BracPhase.IN_BODY, "call-op"): (BracPhase.IN_OP, False),
    (BracPhase.IN_OP, "ret-op"): (BracPhase.IN_BODY, False),
    (BracPhase.IN_BODY, "ret-f"): (BracPhase.AFTER_RET_F, True),
    (BracPhase.AFTER_RET_F, "ret-withRes"): (BracPhase.BALANCED, True),
}


class BracketLanguage(TraceLanguage[BracState]):
    lang_id = "L-brac"

    def in_alphabet(self, event: Value) -> bool:
        return classify(event) is not None

    def member(self, trace: Trace) -> bool:
        if not all(self.in_alphabet(e) for e in trace):
            return False
        return any(is_word(trace[:k]) and is_episode_prefix(trace[k:]) for k in range(len(trace) + 1))

    def initial_state(self) -> BracState:
        return BracState()

    def step(self, state: BracState, event: Value) -> BracState:
        if state.rejected:
            return state
        kind = classify(event)
        if kind is not None:
            name, fn = kind
            if state.phase == BracPhase.BALANCED and name == "call-withRes":
                return BracState(BracPhase.AFTER_CALL_WITH_RES, fn)
            transition = _TRANSITIONS.get((state.phase, name))
            if transition is not None:
                phase, checks_register = transition
                if not checks_register or fn == state.callback:
                    callback = None if phase == BracPhase.BALANCED else state.callback
                    return BracState(phase, callback)
        return BracState(state.phase, state.callback, rejected=True)

    def verdict(self, state: BracState) -> bool:
        return not state.rejected
