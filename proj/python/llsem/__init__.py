"""Linear logic proofs: parsing, cut elimination and exact semantics."""

from fractions import Fraction

from ._llsem import (
    KernelError,
    ParseError,
    Proof,
    RewriteError,
    SemanticError,
    add,
    alpha_eq,
    axiom,
    church,
    church2,
    church_body,
    comp,
    cut,
    exchange_normalize,
    exp,
    exp2,
    hypexp,
    mult,
    normalize,
    parse_proof,
    probe_equal,
    prom,
)
from . import _llsem


def _coords(xs):
    return [str(Fraction(x)) for x in xs]


def nl(proof, point, assign):
    """Nonlinear denotation at `point` (flattened coordinates), as Fractions."""
    return [Fraction(x) for x in _llsem.nl(proof, _coords(point), assign)]


def tangent(proof, base, vector, assign):
    """Pushforward of the tangent vector `vector` at `base`, as Fractions."""
    return [Fraction(x) for x in _llsem.tangent(proof, _coords(base), _coords(vector), assign)]


__all__ = [
    "KernelError", "ParseError", "Proof", "RewriteError", "SemanticError",
    "add", "alpha_eq", "axiom", "church", "church2", "church_body", "comp", "cut",
    "exchange_normalize", "exp", "exp2", "hypexp", "mult", "nl", "normalize",
    "parse_proof", "probe_equal", "prom", "tangent",
]
