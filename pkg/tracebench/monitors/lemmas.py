"""
Bounded checks of the language facts each wrapper relies on to justify its
``emit``s. Every statement is checked on all traces of the language's small
alphabet up to a maximum length.
"""

import logging
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, Optional, Tuple

from ..lang.syntax import Sym, Value, tup
from . import brac
from .alphabets import L1, L2, enumerate_traces, small_alphabet
from .coll import MODIFYING
from .file import isopen_check
from .registry import get_language
from .strings import esafe, notfresh

Trace = Tuple[Value, ...]

logger = logging.getLogger(__name__)

OPEN, CLOSE, READ = Sym("open"), Sym("close"), Sym("read")
MODIFICATIONS = frozenset(Sym(name) for name in MODIFYING)


@dataclass
class LemmaResult:
    name: str
    checked: int
    counterexample: Optional[Tuple] = None

    @property
    def holds(self) -> bool:
        return self.counterexample is None


def members(lang: str, max_len: int) -> Iterator[Trace]:
    """Traces of ``lang`` over its small alphabet, pruning rejected prefixes."""
    language = get_language(lang)
    for trace in enumerate_traces(small_alphabet(lang), max_len,
                                  extend=language.member if language.prefix_closed else None):
        if language.member(trace):
            yield trace


# Each check yields (instance, holds) pairs.
LemmaCheck = Callable[[int], Iterator[Tuple[Tuple, bool]]]


def _file_open(max_len: int):
    lang = get_language("L-file")
    for t in members("L-file", max_len):
        extended = t + (OPEN,)
        yield (t,), lang.member(extended) and isopen_check(extended, len(extended) + 1)


def _file_use(max_len: int):
    lang = get_language("L-file")
    for t in members("L-file", max_len):
        if isopen_check(t, len(t) + 1):
            yield (t,), lang.member(t + (CLOSE,)) and lang.member(t + (READ,))


def _coll_next(max_len: int):
    lang = get_language("L-coll")
    for t in members("L-coll", max_len):
        for n in range(len(t) + 1):
            suffix = t[n:]
            if any(e in MODIFICATIONS for e in suffix):
                continue
            for loc in (L1, L2):
                if tup(Sym("iterator"), loc) in suffix:
                    yield (t, n, loc), lang.member(t + (tup(Sym("next"), loc),))


def _coll_modify(max_len: int):
    lang = get_language("L-coll")
    for t in members("L-coll", max_len):
        yield (t,), all(lang.member(t + (Sym(name),)) for name in ("add", "remove", "size"))


def _stack_simple_push(max_len: int):
    lang = get_language("L-stack-simple")
    values = {e.right for e in small_alphabet("L-stack-simple")}
    for t in members("L-stack-simple", max_len):
        for v in sorted(values, key=repr):
            pushed = t + (tup(Sym("push"), v),)
            yield (t, v), lang.member(pushed) and lang.member(pushed + (tup(Sym("pop"), v),))


def _str_esafe_monotone(max_len: int):
    for t2 in enumerate_traces(small_alphabet("L-str"), max_len):
        for k in range(len(t2) + 1):
            t1 = t2[:k]
            for s in (L1, L2):
                if esafe(s, t1):
                    yield (s, t1, t2), esafe(s, t2) or notfresh(t2)


def _brac_op_inside(max_len: int):
    lang = get_language("L-brac")
    for t in members("L-brac", max_len):
        inside = lang.fold(t).phase == brac.BracPhase.IN_BODY
        if inside:
            yield (t, "inside"), lang.member(t + (brac.CALL_OP, brac.RET_OP))
        else:
            yield (t, "outside"), not lang.member(t + (brac.CALL_OP,))


LEMMAS: Dict[str, LemmaCheck] = {
    "file-open": _file_open,
    "file-use": _file_use,
    "coll-next": _coll_next,
    "coll-modify": _coll_modify,
    "stack-simple-push": _stack_simple_push,
    "str-esafe-monotone": _str_esafe_monotone,
    "brac-op-inside": _brac_op_inside,
}


def check_lemma(name: str, max_len: int = 5) -> LemmaResult:
    """Check one named lemma; the first failing instance is the counterexample."""
    if name not in LEMMAS:
        raise KeyError(f"Unknown lemma '{name}'. Known lemmas: {', '.join(LEMMAS)}")
    checked = 0
    for instance, holds in LEMMAS[name](max_len):
        checked += 1
        if not holds:
            logger.warning(f"Lemma {name} fails on {instance!r}")
            return LemmaResult(name, checked, instance)
    return LemmaResult(name, checked)


def check_all_lemmas(max_len: int = 5) -> Dict[str, LemmaResult]:
    return {name: check_lemma(name, max_len) for name in LEMMAS}
