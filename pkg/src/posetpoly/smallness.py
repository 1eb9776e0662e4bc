"""Domination of polynomials by poset variables.

A polynomial is dominated by a variable x when every appearing monomial
contains some variable lying below-or-equal x. A polynomial dominated by
at least one variable is small; one dominated by none is big. The zero
polynomial is vacuously dominated by everything, so it is small on any
nonempty poset. Constants other than zero are always big: the monomial 1
contains no variable at all.
"""

from __future__ import annotations

from .errors import PreconditionError, UnknownVariableError
from .polyring import Polynomial
from .poset import Poset, VarId


def _check_variables(P: Poset, f: Polynomial) -> None:
    for var in f.variables():
        if var not in P.nodes:
            raise UnknownVariableError(f"polynomial variable {var!r} is not a poset node")


def dominated_by(P: Poset, f: Polynomial, x: VarId) -> bool:
    """True iff every appearing monomial of f contains a variable y with y below-or-equal x."""
    down = frozenset(P.down_set(x))
    _check_variables(P, f)
    return all(
        any(v in down for v in monomial.variables()) for monomial in f.support()
    )


def dominating_witness(P: Poset, f: Polynomial) -> VarId | None:
    """The least-named variable dominating f, or None when f is big."""
    _check_variables(P, f)
    supports = [frozenset(m.variables()) for m in f.support()]
    for x in P.sorted_nodes():
        down = frozenset(P.down_set(x))
        if all(support & down for support in supports):
            return x
    return None


def is_small(P: Poset, f: Polynomial) -> bool:
    """True iff some variable dominates f."""
    return dominating_witness(P, f) is not None


def is_big(P: Poset, f: Polynomial) -> bool:
    """True iff no variable dominates f."""
    return dominating_witness(P, f) is None


def split_at(P: Poset, f: Polynomial, x: VarId) -> tuple[Polynomial, Polynomial]:
    """Split f into (f1, f2): monomials dominated by x, and the rest.

    f1 + f2 recombines to f; no monomial of f2 contains a variable
    below-or-equal x.
    """
    down = frozenset(P.down_set(x))
    _check_variables(P, f)
    inside: dict = {}
    outside: dict = {}
    for monomial, coeff in f.sorted_terms():
        if any(v in down for v in monomial.variables()):
            inside[monomial] = coeff
        else:
            outside[monomial] = coeff
    return Polynomial(inside), Polynomial(outside)


def degree_shift(x: VarId, d: int, f: Polynomial, g: Polynomial) -> Polynomial:
    """Return h = x^d * f + g, requiring d > deg g.

    The degree gap keeps the monomial sets of x^d * f and g disjoint, so
    every monomial of either summand survives into h with its coefficient
    intact.
    """
    if not isinstance(d, int) or d < 1:
        raise PreconditionError(f"shift exponent must be a positive integer, got {d!r}")
    if not d > g.degree():
        raise PreconditionError(f"need shift exponent > deg g = {g.degree()}, got {d}")
    return Polynomial.variable(x, d) * f + g
