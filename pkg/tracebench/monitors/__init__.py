"""Trace languages: declarative membership, online monitors and the trace codec."""

from .base import Monitor, TraceLanguage
from .codec import TraceWriter, decode_value, encode_value, read_trace, write_trace
from .file import isopen_check, noclose
from .lemmas import LemmaResult, check_all_lemmas, check_lemma
from .registry import (
    LanguageRegistry, create_monitor, fold_verdicts, get_language, in_alphabet,
    member, mon_init, mon_step, mon_verdict,
)
from .stack import stk_tr_check, trav
from .strings import allocs, esafe, notfresh

LANGUAGES = ("L-file", "L-coll", "L-brac", "L-stack", "L-stack-simple", "L-str")

__all__ = [
    "LANGUAGES",
    "LanguageRegistry",
    "LemmaResult",
    "Monitor",
    "TraceLanguage",
    "TraceWriter",
    "allocs",
    "check_all_lemmas",
    "check_lemma",
    "create_monitor",
    "decode_value",
    "encode_value",
    "esafe",
    "fold_verdicts",
    "get_language",
    "in_alphabet",
    "isopen_check",
    "member",
    "mon_init",
    "mon_step",
    "mon_verdict",
    "noclose",
    "notfresh",
    "read_trace",
    "stk_tr_check",
    "trav",
    "write_trace",
]
