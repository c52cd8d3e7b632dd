"""Small per-language alphabets and bounded trace enumeration."""

from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple

from ..lang.syntax import UNIT, FunId, Int, Loc, Sym, Value, tup
from . import brac, stack

F1, F2 = FunId(1), FunId(2)
L1, L2 = Loc(1), Loc(2)


SMALL_ALPHABETS: Dict[str, Tuple[Value, ...]] = {
    "L-file": (Sym("open"), Sym("close"), Sym("read")),
    "L-coll": (
        Sym("size"), Sym("add"), Sym("remove"),
        tup(Sym("iterator"), L1), tup(Sym("iterator"), L2),
        tup(Sym("next"), L1), tup(Sym("next"), L2),
    ),
    "L-brac": (
        brac.call_with_res(F1), brac.call_with_res(F2),
        tup(Sym("call"), F1), tup(Sym("call"), F2),
        tup(Sym("ret"), F1), tup(Sym("ret"), F2),
        brac.ret_with_res(F1), brac.ret_with_res(F2),
        brac.CALL_OP, brac.RET_OP,
    ),
    "L-stack": (
        stack.call_push(Int(1)), stack.RET_PUSH,
        stack.CALL_POP, stack.ret_pop(Int(1)), stack.ret_pop(UNIT),
        stack.call_foreach(F1), stack.RET_FOREACH,
        stack.call_callback(F1, Int(1)), stack.ret_callback(F1),
    ),
    "L-stack-simple": tuple(
        tup(Sym(kind), value)
        for kind in ("push", "pop")
        for value in (UNIT, Int(1), Int(2))
    ),
    # Ten events over two handles; concatenations cover both argument orders.
    "L-str": (
        tup(Sym("input"), L1), tup(Sym("input"), L2),
        tup(Sym("constant"), L1), tup(Sym("constant"), L2),
        tup(Sym("sanitize"), L1), tup(Sym("sanitize"), L2),
        tup(Sym("sink"), L1), tup(Sym("sink"), L2),
        tup(Sym("concat"), L1, L2, L2), tup(Sym("concat"), L2, L1, L1),
    ),
}

# Longest trace enumerated per language by default.
DEFAULT_MAX_LEN: Dict[str, int] = {
    "L-file": 6,
    "L-coll": 6,
    "L-brac": 6,
    "L-stack": 8,
    "L-stack-simple": 6,
    "L-str": 6,
}


def small_alphabet(lang: str) -> Tuple[Value, ...]:
    return SMALL_ALPHABETS[lang]


def enumerate_traces(
    alphabet: Sequence[Value],
    max_len: int,
    extend: Optional[Callable[[Tuple[Value, ...]], bool]] = None,
) -> Iterator[Tuple[Value, ...]]:
    """Depth-first enumeration of all traces up to ``max_len``, shortest prefix first.

    When ``extend`` returns False for a trace its extensions are skipped.
    """
    pending: list = [()]
    while pending:
        trace = pending.pop()
        yield trace
        if len(trace) >= max_len or (extend is not None and not extend(trace)):
            continue
        for event in reversed(alphabet):
            pending.append(trace + (event,))
