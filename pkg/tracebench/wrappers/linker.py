"""Linking client programs against library bundles."""

import logging

from ..exceptions import ArityMismatchError
from ..lang.parser import ClientProgram
from ..lang.syntax import Expr, Var, let
from .base import OPS, LibraryBundle, component


logger = logging.getLogger(__name__)


def link(bundle: LibraryBundle, client: ClientProgram) -> Expr:
    """Bind the client's operation names to the bundle's operations.

    The result is ``let ops = init in let n1 = π1 ops in ... body``.
    A client that names no operations is returned unchanged.
    """
    if not client.op_names:
        return client.body
    if len(client.op_names) != bundle.arity:
        raise ArityMismatchError(bundle.name, list(bundle.op_names), list(client.op_names))

    body = client.body
    size = bundle.arity
    for index in reversed(range(size)):
        body = let(client.op_names[index], component(Var(OPS), index, size), body)
    logger.debug(f"Linked client ({', '.join(client.op_names)}) against {bundle.name}")
    return let(OPS, bundle.init, body)
