"""
Stack trace languages.

L-stack is the prefix closure of the traces ``t`` with ``stk_tr(t, [])``,
where ``stk_tr(t, alpha)`` says that the complete push/pop/foreach episodes
of ``t`` leave the abstract stack ``alpha`` (top first). L-stack-simple only
requires every non-unit popped value to have been pushed before.
"""

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import FrozenSet, Optional, Sequence, Tuple

from ..lang.syntax import UNIT, FunId, Pair, Sym, Value, tup
from .base import Trace, TraceLanguage, is_sym, tagged

Stack = Tuple[Value, ...]


# Event constructors

def call_push(a: Value) -> Value:
    return tup(Sym("call"), Sym("push"), a)


RET_PUSH = tup(Sym("ret"), Sym("push"))
CALL_POP = tup(Sym("call"), Sym("pop"))
RET_FOREACH = tup(Sym("ret"), Sym("foreach"))


def ret_pop(x: Value) -> Value:
    return tup(Sym("ret"), Sym("pop"), x)


def call_foreach(f: FunId) -> Value:
    return tup(Sym("call"), Sym("foreach"), f)


def call_callback(f: FunId, a: Value) -> Value:
    return tup(Sym("call"), f, a)


def ret_callback(f: FunId) -> Value:
    return tup(Sym("ret"), f)


def classify(event: Value) -> Optional[Tuple]:
    """Decode a stack event into ``(kind, *arguments)``; None if foreign.

    Callback ids must be function ids, which is what tells ``<call, f, a>``
    apart from ``<call, push, a>``.
    """
    call = tagged(event, "call")
    if call is not None:
        if is_sym(call, "pop"):
            return ("call-pop",)
        if isinstance(call, Pair):
            if is_sym(call.left, "push"):
                return ("call-push", call.right)
            if is_sym(call.left, "foreach") and isinstance(call.right, FunId):
                return ("call-foreach", call.right)
            if isinstance(call.left, FunId):
                return ("call-f", call.left, call.right)
        return None
    ret = tagged(event, "ret")
    if ret is not None:
        if is_sym(ret, "push"):
            return ("ret-push",)
        if is_sym(ret, "foreach"):
            return ("ret-foreach",)
        if isinstance(ret, FunId):
            return ("ret-f", ret)
        if isinstance(ret, Pair) and is_sym(ret.left, "pop"):
            return ("ret-pop", ret.right)
    return None


# Declarative definitions

def trav(trace: Trace, alpha: Sequence[Value], f: FunId) -> bool:
    """``trace`` calls ``f`` on every element of ``alpha`` top-first, one call/return pair each."""
    if not trace and not alpha:
        return True
    if len(trace) < 2 or not alpha:
        return False
    return (
        trace[0] == call_callback(f, alpha[0])
        and trace[1] == ret_callback(f)
        and trav(trace[2:], alpha[1:], f)
    )


@lru_cache(maxsize=65536)
def stk_states(trace: Tuple[Value, ...]) -> FrozenSet[Stack]:
    """All ``alpha`` with ``stk_tr(trace, alpha)``, one clause at a time."""
    if not trace:
        return frozenset({()})
    states = set()
    if len(trace) >= 2:
        before = trace[:-2]
        first, last = classify(trace[-2]), classify(trace[-1])
        if first and last and first[0] == "call-push" and last[0] == "ret-push":
            states |= {(first[1],) + alpha for alpha in stk_states(before)}
        if first and last and first[0] == "call-pop" and last[0] == "ret-pop":
            popped = last[1]
            previous = stk_states(before)
            if popped == UNIT and () in previous:
                states.add(())
            states |= {alpha[1:] for alpha in previous if alpha and alpha[0] == popped}
    last = classify(trace[-1])
    if last and last[0] == "ret-foreach":
        for j in range(len(trace) - 1):
            opening = classify(trace[j])
            if not opening or opening[0] != "call-foreach":
                continue
            f, body = opening[1], trace[j + 1:-1]
            states |= {alpha for alpha in stk_states(trace[:j]) if trav(body, alpha, f)}
    return frozenset(states)


def stk_tr_check(trace: Trace, alpha: Sequence[Value]) -> bool:
    return tuple(alpha) in stk_states(tuple(trace))


def _partial_episode(rest: Trace, alpha: Stack) -> bool:
    """``rest`` is a proper prefix of an episode that can start in stack ``alpha``."""
    if not rest:
        return True
    head = classify(rest[0])
    if head is None:
        return False
    if head[0] in ("call-push", "call-pop"):
        return len(rest) == 1
    if head[0] == "call-foreach":
        f = head[1]
        expected = []
        for a in alpha:
            expected += [call_callback(f, a), ret_callback(f)]
        return list(rest[1:]) == expected[:len(rest) - 1]
    return False


def stack_member(trace: Trace) -> bool:
    """Prefix closure of ``stk_tr(t, [])``.

    Any reachable stack can be emptied by popping, so ``t`` is a prefix of
    a complete trace iff it splits into complete episodes followed by a
    proper prefix of one more episode.
    """
    trace = tuple(trace)
    return any(
        _partial_episode(trace[k:], alpha)
        for k in range(len(trace) + 1)
        for alpha in stk_states(trace[:k])
    )


class StackMode(str, Enum):
    IDLE = "idle"
    IN_PUSH = "in-push"
    IN_POP = "in-pop"
    IN_FOREACH = "in-foreach"


@dataclass(frozen=True)
class StackState:
    """``pending`` holds the elements a running foreach still has to visit.

    ``current`` is set while a callback call is open.
    """

    mode: StackMode = StackMode.IDLE
    stack: Stack = ()
    argument: Optional[Value] = None
    callback: Optional[FunId] = None
    pending: Stack = ()
    current: Optional[Value] = None
    in_call: bool = False
    rejected: bool = False


class StackLanguage(TraceLanguage[StackState]):
    lang_id = "L-stack"

    def in_alphabet(self, event: Value) -> bool:
        return classify(event) is not None

    def member(self, trace: Trace) -> bool:
        return all(self.in_alphabet(e) for e in trace) and stack_member(trace)

    def initial_state(self) -> StackState:
        return StackState()

    def step(self, state: StackState, event: Value) -> StackState:
        if state.rejected:
            return state
        following = self._advance(state, classify(event))
        if following is None:
            return StackState(mode=state.mode, stack=state.stack, rejected=True)
        return following

    @staticmethod
    def _advance(state: StackState, kind: Optional[Tuple]) -> Optional[StackState]:
        if kind is None:
            return None
        name = kind[0]
        if state.mode == StackMode.IDLE:
            if name == "call-push":
                return StackState(StackMode.IN_PUSH, state.stack, argument=kind[1])
            if name == "call-pop":
                return StackState(StackMode.IN_POP, state.stack)
            if name == "call-foreach":
                return StackState(StackMode.IN_FOREACH, state.stack, callback=kind[1], pending=state.stack)
            return None
        if state.mode == StackMode.IN_PUSH:
            if name == "ret-push":
                return StackState(stack=(state.argument,) + state.stack)
            return None
        if state.mode == StackMode.IN_POP:
            if name != "ret-pop":
                return None
            popped = kind[1]
            if state.stack and state.stack[0] == popped:
                return StackState(stack=state.stack[1:])
            if not state.stack and popped == UNIT:
                return StackState()
            return None
        # In foreach: alternate <call,f,a> / <ret,f> over pending, then <ret,foreach>.
        if not state.in_call:
            if name == "call-f" and kind[1] == state.callback and state.pending and kind[2] == state.pending[0]:
                return StackState(StackMode.IN_FOREACH, state.stack, callback=state.callback,
                                  pending=state.pending, current=kind[2], in_call=True)
            if name == "ret-foreach" and not state.pending:
                return StackState(stack=state.stack)
            return None
        if name == "ret-f" and kind[1] == state.callback:
            return StackState(StackMode.IN_FOREACH, state.stack, callback=state.callback,
                              pending=state.pending[1:])
        return None

    def verdict(self, state: StackState) -> bool:
        return not state.rejected


# L-stack-simple

def simple_stack_trace(trace: Trace) -> bool:
    for i, event in enumerate(trace):
        popped = tagged(event, "pop")
        if popped is None or popped == UNIT:
            continue
        if not any(tagged(trace[j], "push") == popped for j in range(i)):
            return False
    return True


@dataclass(frozen=True)
class SimpleStackState:
    pushed: FrozenSet[Value] = frozenset()
    rejected: bool = False


class SimpleStackLanguage(TraceLanguage[SimpleStackState]):
    lang_id = "L-stack-simple"

    def in_alphabet(self, event: Value) -> bool:
        return tagged(event, "push") is not None or tagged(event, "pop") is not None

    def member(self, trace: Trace) -> bool:
        return all(self.in_alphabet(e) for e in trace) and simple_stack_trace(trace)

    def initial_state(self) -> SimpleStackState:
        return SimpleStackState()

    def step(self, state: SimpleStackState, event: Value) -> SimpleStackState:
        if state.rejected:
            return state
        pushed = tagged(event, "push")
        if pushed is not None:
            return SimpleStackState(state.pushed | {pushed})
        popped = tagged(event, "pop")
        if popped is not None and (popped == UNIT or popped in state.pushed):
            return state
        return SimpleStackState(state.pushed, rejected=True)

    def verdict(self, state: SimpleStackState) -> bool:
        return not state.rejected
