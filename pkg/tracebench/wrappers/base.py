"""Base classes for library bundles and their instrumentation."""

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, List, Tuple

from ..exceptions import ArityMismatchError
from ..lang.syntax import App, Expr, Lam, MkPair, Proj, Ref, Var


# Reserved binder names; client code never sees them because library
# initialisers are closed before a client is linked.
STATE = "st"
RAW = "raw"
OPS = "ops"


@dataclass(frozen=True)
class LibraryBundle:
    """Object-language implementation of a library.

    ``ops`` lists each operation as a closed function for inspection;
    ``init`` allocates the library state and evaluates to the tuple of
    operation function ids, in the order of ``ops``.
    """

    name: str
    ops: Tuple[Tuple[str, Expr], ...]
    init: Expr
    wrapped: bool = False

    @property
    def op_names(self) -> Tuple[str, ...]:
        return tuple(op for op, _ in self.ops)

    @property
    def arity(self) -> int:
        return len(self.ops)


WrapperBuilder = Callable[[Expr], Expr]


def tuple_expr(exprs: List[Expr]) -> Expr:
    """Right-nested pair expression of one or more components."""
    result = exprs[-1]
    for expr in reversed(exprs[:-1]):
        result = MkPair(expr, result)
    return result


def component(tuple_: Expr, index: int, size: int) -> Expr:
    """Project the 0-based ``index``-th component of a right-nested tuple."""
    expr = tuple_
    for _ in range(index):
        expr = Proj(2, expr)
    return expr if index == size - 1 else Proj(1, expr)


class Library(ABC):
    """A reference library implementation together with its wrapper.

    Subclasses describe each operation as a lambda whose body may mention
    the state cell ``st`` and give, per operation, a function that turns
    an expression denoting the raw operation into the instrumented lambda.
    """

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @property
    @abstractmethod
    def lang(self) -> str:
        """Identifier of the trace language the wrapper targets."""
        pass

    @abstractmethod
    def initial_state(self) -> Expr:
        pass

    @abstractmethod
    def operations(self) -> List[Tuple[str, Lam]]:
        pass

    @abstractmethod
    def wrappers(self) -> List[Tuple[str, WrapperBuilder]]:
        pass

    @property
    def op_names(self) -> Tuple[str, ...]:
        return tuple(op for op, _ in self.operations())

    def make_bundle(self) -> LibraryBundle:
        operations = self.operations()
        ops = tuple((op, Lam(STATE, fn)) for op, fn in operations)
        init = App(Lam(STATE, tuple_expr([fn for _, fn in operations])), Ref(self.initial_state()))
        return LibraryBundle(name=self.name, ops=ops, init=init)

    def wrap_bundle(self, lib: LibraryBundle) -> LibraryBundle:
        builders = self.wrappers()
        expected = [op for op, _ in builders]
        if list(lib.op_names) != expected:
            raise ArityMismatchError(self.name, expected, list(lib.op_names))
        size = len(builders)
        ops = tuple((op, Lam(RAW, build(Var(RAW)))) for op, build in builders)
        wrapped_ops = [build(component(Var(OPS), i, size)) for i, (_, build) in enumerate(builders)]
        init = App(Lam(OPS, tuple_expr(wrapped_ops)), lib.init)
        return LibraryBundle(name=self.name, ops=ops, init=init, wrapped=True)
