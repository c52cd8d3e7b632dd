"""Tests for the reference libraries, their wrappers and linking."""

import pytest

from tracebench.exceptions import ArityMismatchError, UnknownLibraryError
from tracebench.lang.erasure import erase
from tracebench.lang.interpreter import RunStatus, run_program
from tracebench.lang.parser import parse_client
from tracebench.lang.syntax import UNIT, Int, Loc, Sym, contains_emit, is_closed
from tracebench.monitors.registry import member
from tracebench.wrappers import (
    Library, LibraryBundle, get_registry, language_for, link, make_lib, wrap,
)
from tracebench.wrappers.registry import LibraryRegistry
from tests.events import ev

LIBRARIES = ("file", "coll", "brac", "stack", "stack-simple", "str")


def run_linked(source, lib, wrapped=True, fuel=100_000):
    bundle = make_lib(lib)
    if wrapped:
        bundle = wrap(lib, bundle)
    return run_program(link(bundle, parse_client(source)), fuel)


class TestRegistry:
    """Test the library registry."""

    def test_default_libraries(self):
        assert set(LIBRARIES) == set(get_registry().list_libraries())

    def test_unknown_library(self):
        with pytest.raises(UnknownLibraryError) as exc_info:
            make_lib("socket")
        assert "file" in exc_info.value.supported

    def test_register_requires_library_subclass(self):
        with pytest.raises(ValueError):
            LibraryRegistry().register_library("bogus", dict)

    @pytest.mark.parametrize("lib,lang", [
        ("file", "L-file"), ("coll", "L-coll"), ("brac", "L-brac"),
        ("stack", "L-stack"), ("stack-simple", "L-stack-simple"), ("str", "L-str"),
    ])
    def test_language_for(self, lib, lang):
        assert language_for(lib) == lang


class TestBundles:
    """Test bundle construction."""

    @pytest.mark.parametrize("lib", LIBRARIES)
    def test_bundles_are_closed(self, lib):
        raw = make_lib(lib)
        wrapped = wrap(lib, raw)
        assert isinstance(raw, LibraryBundle)
        assert is_closed(raw.init) and is_closed(wrapped.init)
        assert not raw.wrapped and wrapped.wrapped
        assert raw.op_names == wrapped.op_names

    @pytest.mark.parametrize("lib", LIBRARIES)
    def test_raw_bundles_do_not_emit(self, lib):
        assert not contains_emit(make_lib(lib).init)
        assert contains_emit(wrap(lib, make_lib(lib)).init)

    def test_wrap_rejects_wrong_bundle(self):
        with pytest.raises(ArityMismatchError) as exc_info:
            wrap("file", make_lib("stack"))
        assert exc_info.value.expected == ["open", "close", "read"]

    def test_erased_wrapper_runs_like_raw_library(self):
        source = "(with-lib (push pop foreach) (seq (app push 1) (app push 2) (app pop ())))"
        raw = run_linked(source, "stack", wrapped=False)
        erased = run_program(erase(link(wrap("stack", make_lib("stack")), parse_client(source))), 100_000)
        assert raw.value == erased.value == Int(2)
        assert erased.trace == ()


class TestLinker:
    """Test linking clients against bundles."""

    def test_arity_mismatch(self):
        with pytest.raises(ArityMismatchError):
            link(make_lib("file"), parse_client("(with-lib (open close) (app open ()))"))

    def test_client_without_operations(self):
        client = parse_client("(op + 1 2)")
        assert link(make_lib("file"), client) == client.body

    def test_names_bind_positionally(self):
        result = run_linked("(with-lib (a b c) (seq (app a ()) (app c ()) (app b ())))", "file")
        assert result.trace == (Sym("open"), Sym("read"), Sym("close"))


class TestLibraryBehaviour:
    """The reference libraries compute the expected values."""

    def test_stack_is_lifo(self):
        source = "(with-lib (push pop foreach) (seq (app push 1) (app push 2) (pair (app pop ()) (app pop ()))))"
        result = run_linked(source, "stack", wrapped=False)
        assert result.value == ev(2, 1)

    def test_pop_on_empty_stack_returns_unit(self):
        assert run_linked("(with-lib (push pop foreach) (app pop ()))", "stack", wrapped=False).value == UNIT

    def test_collection_size(self):
        source = "(with-lib (size add remove iterator next) (seq (app add 1) (app add 2) (app add 3) (app remove 2) (app size ())))"
        assert run_linked(source, "coll", wrapped=False).value == Int(2)

    def test_iterator_walks_elements(self):
        source = (
            "(with-lib (size add remove iterator next) (seq (app add 1) (app add 2)"
            " (let it (app iterator ()) (pair (app next it) (pair (app next it) (app next it))))))"
        )
        assert run_linked(source, "coll", wrapped=False).value == ev(2, 1, UNIT)

    def test_string_handles_are_fresh(self):
        source = "(with-lib (input constant sanitize concat sink) (pair (app input ()) (app constant ())))"
        result = run_linked(source, "str", wrapped=False)
        assert result.value == ev(Loc(1), Loc(2))

    def test_brac_runs_callback(self):
        result = run_linked("(with-lib (withRes use) (app withRes (lam x 7)))", "brac", wrapped=False)
        assert result.value == Int(7)


class TestWrappedTraces:
    """Wrapped libraries emit traces in their language for correct clients."""

    @pytest.mark.parametrize("source,lib,expected", [
        ("(with-lib (open close read) (seq (app open ()) (app read ()) (app close ())))", "file",
         (Sym("open"), Sym("read"), Sym("close"))),
        ("(with-lib (push pop) (seq (app push 1) (app pop ()) (app pop ())))", "stack-simple",
         (ev("push", 1), ev("pop", 1), ev("pop", UNIT))),
        ("(with-lib (input constant sanitize concat sink) (let i (app input ()) (app sink i)))", "str",
         (ev("input", Loc(1)), ev("sink", Loc(1)))),
    ])
    def test_trace(self, source, lib, expected):
        result = run_linked(source, lib)
        assert result.status == RunStatus.VALUE
        assert result.trace == expected

    def test_coll_events(self):
        source = (
            "(with-lib (size add remove iterator next) (seq (app add 1)"
            " (let it (app iterator ()) (app next it)) (app size ())))"
        )
        result = run_linked(source, "coll")
        # The state cell is #l0 and the iterator cursor #l1.
        assert result.trace == (Sym("add"), ev("iterator", Loc(1)), ev("next", Loc(1)), Sym("size"))
        assert member("L-coll", result.trace)

    def test_brac_events(self):
        result = run_linked("(with-lib (withRes use) (app withRes (lam x (app use ()))))", "brac")
        assert len(result.trace) == 6
        assert member("L-brac", result.trace)

    def test_stack_foreach_events(self):
        source = "(with-lib (push pop foreach) (seq (app push 1) (app foreach (lam x ())) (app pop ())))"
        result = run_linked(source, "stack")
        assert result.status == RunStatus.VALUE
        assert len(result.trace) == 2 + 4 + 2
        assert member("L-stack", result.trace)


class TestCustomLibrary:
    """Libraries registered at runtime are usable by name."""

    def test_register_and_run(self):
        from tracebench.lang.syntax import BinOp, Deref, Emit, Lam, Var, call, lit, seq
        from tracebench.wrappers.base import STATE

        class CounterLibrary(Library):
            name = "counter"
            lang = "L-file"

            def initial_state(self):
                return lit(0)

            def operations(self):
                st = Var(STATE)
                return [("tick", Lam("_", seq(BinOp(":=", st, BinOp("+", Deref(st), lit(1))), Deref(st))))]

            def wrappers(self):
                return [("tick", lambda raw: Lam("_", seq(Emit(lit("read")), call(raw))))]

        registry = LibraryRegistry()
        registry.register_library("counter", CounterLibrary)
        library = registry.get_library("counter")
        bundle = library.wrap_bundle(library.make_bundle())
        result = run_program(link(bundle, parse_client("(with-lib (tick) (seq (app tick ()) (app tick ())))")), 10_000)
        assert result.value == Int(2)
        assert result.trace == (Sym("read"), Sym("read"))
