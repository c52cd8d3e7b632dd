"""
Seeded random generation of closed object-language programs.

Programs only mention variables bound by an enclosing ``let``/``lam`` and
only dereference or assign cells they allocated themselves. They may still
get stuck (``if`` on a pair, arithmetic on symbols) or loop forever through
a cell holding a function that calls itself.

``emit`` arguments are value forms (literals, bound variables and pairs of
them) so that erasing an ``emit`` never removes an allocation or a named
function.
"""

import random
from dataclasses import dataclass, field, replace
from typing import Callable, Iterator, List, Tuple

from ..lang.syntax import (
    UNIT, App, BinOp, Deref, Emit, Expr, If, Int, Lam, MkPair, Proj, Ref, Sym,
    Val, Value, Var, let, seq,
)

DEFAULT_POOL: Tuple[Value, ...] = (UNIT, Int(0), Int(1), Int(2), Int(-1), Sym("a"), Sym("b"))
ARITHMETIC = ("+", "-", "*", "<", "=")


@dataclass(frozen=True)
class GenConfig:
    seed: int = 0
    max_depth: int = 5
    emit_probability: float = 0.2
    pool: Tuple[Value, ...] = field(default=DEFAULT_POOL)
    # Chance that an inner node becomes a leaf early.
    leaf_probability: float = 0.15
    # Relative weight of the self-calling loop production.
    loop_weight: float = 0.2


@dataclass(frozen=True)
class _Scope:
    values: Tuple[str, ...] = ()
    cells: Tuple[str, ...] = ()
    functions: Tuple[str, ...] = ()

    @property
    def names(self) -> Tuple[str, ...]:
        return self.values + self.cells + self.functions


class ProgramGenerator:
    """Generates one program per call to :meth:`generate` from its own RNG."""

    def __init__(self, config: GenConfig):
        self.config = config
        self.rng = random.Random(config.seed)
        self._fresh = 0

    def generate(self) -> Expr:
        self._fresh = 0
        return self.expr(self.config.max_depth, _Scope())

    def _name(self, prefix: str) -> str:
        self._fresh += 1
        return f"{prefix}{self._fresh}"

    # Leaves

    def literal(self) -> Val:
        return Val(self.rng.choice(self.config.pool))

    def leaf(self, scope: _Scope) -> Expr:
        if scope.names and self.rng.random() < 0.4:
            return Var(self.rng.choice(scope.names))
        return self.literal()

    def value_form(self, scope: _Scope, depth: int = 1) -> Expr:
        """Literal, bound variable or a pair of value forms."""
        if depth > 0 and self.rng.random() < 0.3:
            return MkPair(self.value_form(scope, depth - 1), self.value_form(scope, depth - 1))
        return self.leaf(scope)

    # Inner nodes

    def expr(self, depth: int, scope: _Scope) -> Expr:
        if depth <= 0 or self.rng.random() < self.config.leaf_probability:
            return self.leaf(scope)
        productions = self._productions(scope)
        weights = [weight for weight, _ in productions]
        _, build = self.rng.choices(productions, weights=weights)[0]
        result = build(depth - 1, scope)
        if self.rng.random() < self.config.emit_probability:
            result = seq(Emit(self.value_form(scope)), result)
        return result

    def _productions(self, scope: _Scope) -> List[Tuple[float, Callable[[int, _Scope], Expr]]]:
        productions = [
            (3.0, self.gen_let),
            (2.0, self.gen_cell),
            (2.0, self.gen_if),
            (2.0, self.gen_arith),
            (1.0, self.gen_pair),
            (1.0, self.gen_proj),
            (2.0, self.gen_function),
            (1.0, self.gen_inline_app),
            (self.config.loop_weight, self.gen_loop),
        ]
        if scope.cells:
            productions += [(1.0, self.gen_deref), (1.0, self.gen_assign)]
        if scope.functions:
            productions.append((2.0, self.gen_call))
        return productions

    def gen_let(self, depth: int, scope: _Scope) -> Expr:
        name = self._name("x")
        bound = self.expr(depth, scope)
        return let(name, bound, self.expr(depth, replace(scope, values=scope.values + (name,))))

    def gen_cell(self, depth: int, scope: _Scope) -> Expr:
        name = self._name("r")
        initial = self.expr(depth, scope)
        return let(name, Ref(initial), self.expr(depth, replace(scope, cells=scope.cells + (name,))))

    def gen_deref(self, depth: int, scope: _Scope) -> Expr:
        return Deref(Var(self.rng.choice(scope.cells)))

    def gen_assign(self, depth: int, scope: _Scope) -> Expr:
        return BinOp(":=", Var(self.rng.choice(scope.cells)), self.expr(depth, scope))

    def gen_if(self, depth: int, scope: _Scope) -> Expr:
        return If(self.expr(depth, scope), self.expr(depth, scope), self.expr(depth, scope))

    def gen_arith(self, depth: int, scope: _Scope) -> Expr:
        return BinOp(self.rng.choice(ARITHMETIC), self.expr(depth, scope), self.expr(depth, scope))

    def gen_pair(self, depth: int, scope: _Scope) -> Expr:
        return MkPair(self.expr(depth, scope), self.expr(depth, scope))

    def gen_proj(self, depth: int, scope: _Scope) -> Expr:
        return Proj(self.rng.choice((1, 2)), self.expr(depth, scope))

    def gen_function(self, depth: int, scope: _Scope) -> Expr:
        """``let f = λx. body in e`` where ``e`` may call ``f``."""
        name, param = self._name("f"), self._name("p")
        body = self.expr(depth, replace(scope, values=scope.values + (param,)))
        rest = self.expr(depth, replace(scope, functions=scope.functions + (name,)))
        return let(name, Lam(param, body), rest)

    def gen_call(self, depth: int, scope: _Scope) -> Expr:
        return App(Var(self.rng.choice(scope.functions)), self.expr(depth, scope))

    def gen_inline_app(self, depth: int, scope: _Scope) -> Expr:
        param = self._name("p")
        body = self.expr(depth, replace(scope, values=scope.values + (param,)))
        return App(Lam(param, body), self.expr(depth, scope))

    def gen_loop(self, depth: int, scope: _Scope) -> Expr:
        """A cell holding a function that calls itself through the cell."""
        cell, param = self._name("r"), self._name("p")
        forever = Lam(param, App(Deref(Var(cell)), Var(param)))
        return let(cell, Ref(Val(UNIT)), seq(
            BinOp(":=", Var(cell), forever),
            App(Deref(Var(cell)), self.literal()),
        ))


def gen_program(cfg: GenConfig) -> Expr:
    """The program for ``cfg``; equal configurations give equal programs."""
    return ProgramGenerator(cfg).generate()


def gen_programs(cfg: GenConfig, count: int) -> Iterator[Tuple[int, Expr]]:
    """``count`` programs whose seeds are drawn from a stream seeded by ``cfg.seed``."""
    seeds = random.Random(cfg.seed)
    for index in range(count):
        yield index, gen_program(replace(cfg, seed=seeds.getrandbits(64)))
