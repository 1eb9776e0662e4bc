"""Ideals generated by variables, their smallness, and maximality certificates.

Only variable-generated ideals are represented: membership, smallness and
maximality of such an ideal are all decidable from the generator set, and
every maximal small ideal turns out to be of this form. Maximality cannot
be checked by enumerating the (infinite) ideal lattice, so it is certified
by probes: for any polynomial outside the ideal, a concrete big member of
the enlarged ideal is produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import EmptyPosetError, InternalError, PreconditionError, UnknownNodeError
from .polyring import Monomial, Polynomial
from .poset import Poset, VarId
from .smallness import _check_variables, is_big


class VarIdeal:
    """The ideal generated by a set of variables, held by its sorted generator names."""

    __slots__ = ("_generators",)

    def __init__(self, generators: Iterable[VarId]):
        self._generators = tuple(sorted(set(generators)))

    @property
    def generators(self) -> tuple[VarId, ...]:
        return self._generators

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, VarIdeal):
            return NotImplemented
        return self._generators == other._generators

    def __hash__(self) -> int:
        return hash(self._generators)

    def __str__(self) -> str:
        return "(" + ",".join(self._generators) + ")"

    def __repr__(self) -> str:
        return f"VarIdeal({list(self._generators)!r})"


def _check_generators(P: Poset, Y: VarIdeal) -> None:
    for name in Y.generators:
        if name not in P.nodes:
            raise UnknownNodeError(f"generator {name!r} is not a poset node")


def var_ideal_member(P: Poset, Y: VarIdeal, f: Polynomial) -> bool:
    """True iff every appearing monomial of f contains a generator of Y.

    For ideals generated by variables this monomial criterion is exact;
    the zero polynomial belongs to every ideal.
    """
    _check_generators(P, Y)
    _check_variables(P, f)
    gens = set(Y.generators)
    return all(
        any(v in gens for v in monomial.variables()) for monomial in f.support()
    )


def var_ideal_decomposition(P: Poset, Y: VarIdeal, f: Polynomial) -> dict[VarId, Polynomial]:
    """Cofactors g_y with f equal to the sum of y * g_y over the generators.

    Constructive counterpart of membership: each monomial is divided by its
    least contained generator. Raises PreconditionError when f is not a
    member.
    """
    if not var_ideal_member(P, Y, f):
        raise PreconditionError("polynomial is not a member of the ideal")
    cofactors: dict[VarId, Polynomial] = {}
    for monomial, coeff in f.sorted_terms():
        carrier = min(v for v in monomial.variables() if v in set(Y.generators))
        exps = dict(monomial.pairs)
        if exps[carrier] == 1:
            del exps[carrier]
        else:
            exps[carrier] -= 1
        quotient = Polynomial({Monomial(exps): coeff})
        cofactors[carrier] = cofactors.get(carrier, Polynomial.zero()) + quotient
    return {v: g for v, g in cofactors.items() if not g.is_zero()}


def is_small_var_ideal(P: Poset, Y: VarIdeal) -> bool:
    """True iff every member of (Y) is small.

    Decidable through the generator set: a compatible generator set has an
    upper bound dominating every member, while an incompatible one makes
    the sum of the distinct generators a big member.
    """
    _check_generators(P, Y)
    return P.is_compatible(Y.generators)


def maximal_small_ideals(P: Poset) -> list[VarIdeal]:
    """All maximal small ideals, one per maximal compatible subset, in sorted order."""
    if not P.nodes:
        raise EmptyPosetError("maximal small ideals need a nonempty poset")
    return [VarIdeal(members) for members in P.maximal_compatible_subsets()]


def _require_maximal_compatible(P: Poset, Y: VarIdeal) -> None:
    if Y.generators not in P.maximal_compatible_subsets():
        raise PreconditionError(
            f"generators {Y} are not a maximal compatible subset of the poset"
        )


def big_witness(P: Poset, Y: VarIdeal, f: Polynomial) -> Polynomial:
    """A big polynomial in the ideal generated by Y and f.

    Requires Y maximal compatible and f outside (Y). Pick the least
    appearing monomial m of f containing no generator. When m is 1, f has
    a constant term and is already big. Otherwise return
    f + c * (sum of the generators) with c one larger than the largest
    absolute coefficient of f; the scaling stops any generator monomial of
    f from cancelling the added terms, so every generator and m itself
    appear in the result. An upper bound witnessing smallness would then
    bound all of Y together with a variable of m, contradicting the
    maximality of Y. Bigness is re-verified before returning.
    """
    _check_generators(P, Y)
    _check_variables(P, f)
    _require_maximal_compatible(P, Y)
    if var_ideal_member(P, Y, f):
        raise PreconditionError("polynomial already lies in the ideal")
    gens = set(Y.generators)
    outside = [
        m for m in f.support() if not any(v in gens for v in m.variables())
    ]
    least = min(outside, key=Monomial.sort_key)
    if least.is_one():
        witness = f
    else:
        scale = 1 + f.max_abs_coefficient()
        generator_sum = Polynomial(
            {Monomial({y: 1}): 1 for y in Y.generators}
        )
        witness = f + generator_sum * scale
    if not is_big(P, witness):
        raise InternalError("constructed witness classified small; this is a bug")
    return witness


@dataclass(frozen=True)
class ProbeResult:
    """Outcome for one probe polynomial."""

    probe: Polynomial
    in_ideal: bool
    witness: Polynomial | None
    witness_is_big: bool


@dataclass(frozen=True)
class CertificateReport:
    """Probe-based evidence that a variable-generated ideal is maximal small."""

    generators: tuple[VarId, ...]
    results: tuple[ProbeResult, ...]

    @property
    def witness_count(self) -> int:
        return sum(1 for r in self.results if r.witness is not None)

    @property
    def passed(self) -> bool:
        return all(
            r.in_ideal or (r.witness is not None and r.witness_is_big)
            for r in self.results
        )


def certify_maximality(P: Poset, Y: VarIdeal, probes: Iterable[Polynomial]) -> CertificateReport:
    """Handle each probe: record membership, or produce a verified big witness."""
    _check_generators(P, Y)
    _require_maximal_compatible(P, Y)
    results = []
    for probe in probes:
        if var_ideal_member(P, Y, probe):
            results.append(ProbeResult(probe, True, None, False))
        else:
            witness = big_witness(P, Y, probe)
            results.append(ProbeResult(probe, False, witness, is_big(P, witness)))
    return CertificateReport(Y.generators, tuple(results))
