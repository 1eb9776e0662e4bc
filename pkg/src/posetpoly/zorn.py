"""Maximal-element extraction through ring machinery, plus two derived posets.

The pipeline turns a nonempty finite poset into a maximal element by the
ideal-theoretic route: pick the first maximal small ideal, read off its
generator set (a maximal compatible subset), take that set's upper bound,
and verify the bound is a maximal element. Every intermediate step is
recorded and re-checked in the returned trace.

The two derived posets replay the classical constructions at finite scale:
partial choice functions of a finite family ordered by extension, and the
chains of a poset ordered by inclusion. Their nodes are canonical string
encodings, so the derived structures are ordinary posets and reuse the
whole stack.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Mapping

from .errors import (
    EmptyPosetError,
    InternalError,
    ParseError,
    SizeLimitError,
)
from .ideals import is_small_var_ideal, maximal_small_ideals, var_ideal_member
from .polyring import Polynomial
from .poset import Poset, VarId

# Indices and element tokens of a choice family. Alphanumeric so the
# "index=value" node encodings below stay unambiguous.
TOKEN_RE = re.compile(r"[A-Za-z0-9_]+\Z")

EMPTY_ENCODING = "{}"

CHOICE_NODE_LIMIT = 4096
CHAIN_NODE_LIMIT = 12


class ChoiceFamily:
    """A finite family of finite nonempty sets, keyed by distinct indices."""

    __slots__ = ("_sets",)

    def __init__(self, sets: Mapping[str, Iterable[str]]):
        cleaned: dict[str, tuple[str, ...]] = {}
        for index, elements in sets.items():
            if not isinstance(index, str) or not TOKEN_RE.match(index):
                raise ValueError(f"family index {index!r} is not an alphanumeric token")
            options = tuple(sorted(set(elements)))
            if not options:
                raise ValueError(f"family set {index!r} is empty")
            for token in options:
                if not isinstance(token, str) or not TOKEN_RE.match(token):
                    raise ValueError(f"element {token!r} is not an alphanumeric token")
            cleaned[index] = options
        self._sets = {index: cleaned[index] for index in sorted(cleaned)}

    @property
    def indices(self) -> tuple[str, ...]:
        return tuple(self._sets)

    def options(self, index: str) -> tuple[str, ...]:
        return self._sets[index]

    def as_dict(self) -> dict[str, tuple[str, ...]]:
        return dict(self._sets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChoiceFamily):
            return NotImplemented
        return self._sets == other._sets

    def __repr__(self) -> str:
        return f"ChoiceFamily({self._sets!r})"


class PartialChoice:
    """An assignment of elements to a subset of a family's indices."""

    __slots__ = ("_assignments",)

    def __init__(self, assignments: Mapping[str, str]):
        self._assignments = tuple(sorted(assignments.items()))

    def as_dict(self) -> dict[str, str]:
        return dict(self._assignments)

    def domain(self) -> tuple[str, ...]:
        return tuple(index for index, _ in self._assignments)

    def encode(self) -> str:
        return encode_partial_choice(self.as_dict())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PartialChoice):
            return NotImplemented
        return self._assignments == other._assignments

    def __hash__(self) -> int:
        return hash(self._assignments)

    def __repr__(self) -> str:
        return f"PartialChoice({dict(self._assignments)!r})"


def encode_partial_choice(assignments: Mapping[str, str]) -> str:
    """Canonical node name: sorted index=value pairs joined by commas; empty is {}."""
    items = sorted(assignments.items())
    if not items:
        return EMPTY_ENCODING
    return ",".join(f"{index}={value}" for index, value in items)


def decode_partial_choice(text: str) -> dict[str, str]:
    if text == EMPTY_ENCODING:
        return {}
    assignments = {}
    for part in text.split(","):
        index, _, value = part.partition("=")
        assignments[index] = value
    return assignments


def encode_chain(members: Iterable[VarId]) -> str:
    """Canonical node name: sorted members joined by commas; the empty chain is {}."""
    names = sorted(members)
    if not names:
        return EMPTY_ENCODING
    return ",".join(names)


def decode_chain(text: str) -> frozenset[VarId]:
    if text == EMPTY_ENCODING:
        return frozenset()
    return frozenset(text.split(","))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool


@dataclass(frozen=True)
class PipelineTrace:
    """Record of one maximal-element extraction, with per-step verification."""

    maximal_compatible_set: tuple[VarId, ...]
    upper_bound: VarId
    maximal_element: VarId
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def as_dict(self) -> dict:
        return {
            "maximal_compatible_set": list(self.maximal_compatible_set),
            "upper_bound": self.upper_bound,
            "maximal_element": self.maximal_element,
            "checks": [{"name": c.name, "passed": c.passed} for c in self.checks],
            "passed": self.passed,
        }


def wzl_pipeline(P: Poset) -> PipelineTrace:
    """Extract a maximal element via the first maximal small ideal.

    On a finite poset a compatible set has an upper bound by definition, so
    the hypothesis that every compatible subset is bounded holds
    automatically; the trace records the instance actually used. Ties break
    everywhere toward the lexicographically least name, making the trace
    reproducible.
    """
    if not P.nodes:
        raise EmptyPosetError("the pipeline needs a nonempty poset")
    ideal = maximal_small_ideals(P)[0]
    generators = ideal.generators
    checks = [
        Check("ideal_is_small", is_small_var_ideal(P, ideal)),
        Check(
            "ideal_variables_match_generators",
            all(
                var_ideal_member(P, ideal, Polynomial.variable(x)) == (x in set(generators))
                for x in P.sorted_nodes()
            ),
        ),
        Check("generators_compatible", P.is_compatible(generators)),
        Check(
            "generators_maximal_compatible",
            generators in P.maximal_compatible_subsets(),
        ),
    ]
    bounds = P.upper_bounds(generators)
    checks.append(Check("compatible_set_has_upper_bound", bool(bounds)))
    if not bounds:
        raise InternalError("maximal compatible set has no upper bound on a finite poset")
    bound = bounds[0]
    checks.append(
        Check("upper_bound_above_generators", all(P.leq(y, bound) for y in generators))
    )
    checks.append(
        Check("upper_bound_is_maximal_element", bound in set(P.maximal_elements()))
    )
    return PipelineTrace(generators, bound, bound, tuple(checks))


def choice_poset(F: ChoiceFamily) -> Poset:
    """The poset of all partial choice functions of F, ordered by extension.

    One function extends another when its assignment set contains the
    other's. Node count is the product of (set size + 1) over the indices;
    guarded at 4096.
    """
    size = 1
    for index in F.indices:
        size *= len(F.options(index)) + 1
        if size > CHOICE_NODE_LIMIT:
            raise SizeLimitError(
                f"choice poset would exceed {CHOICE_NODE_LIMIT} nodes"
            )
    pools = [(None,) + F.options(index) for index in F.indices]
    functions = []
    for combo in product(*pools):
        functions.append(
            {index: value for index, value in zip(F.indices, combo) if value is not None}
        )
    nodes = [encode_partial_choice(func) for func in functions]
    relation = set()
    for func in functions:
        items = sorted(func.items())
        upper = encode_partial_choice(func)
        for r in range(len(items) + 1):
            for chosen in combinations(items, r):
                relation.add((encode_partial_choice(dict(chosen)), upper))
    return Poset(nodes, relation)


def extract_choice(F: ChoiceFamily) -> PartialChoice:
    """Run the pipeline on the choice poset and decode a full choice function."""
    trace = wzl_pipeline(choice_poset(F))
    if not trace.passed:
        raise InternalError("pipeline verification failed on a choice poset")
    assignments = decode_partial_choice(trace.maximal_element)
    if set(assignments) != set(F.indices):
        raise InternalError("extracted choice function is not total")
    for index, value in assignments.items():
        if value not in F.options(index):
            raise InternalError(f"extracted value {value!r} is not in set {index!r}")
    return PartialChoice(assignments)


def chain_poset(P: Poset) -> Poset:
    """The poset of all chains of P (including the empty chain), ordered by inclusion."""
    names = P.sorted_nodes()
    if len(names) > CHAIN_NODE_LIMIT:
        raise SizeLimitError(
            f"chain poset enumeration is limited to {CHAIN_NODE_LIMIT} nodes, got {len(names)}"
        )
    for name in names:
        if "," in name or name == EMPTY_ENCODING:
            raise ValueError(f"node name {name!r} cannot be encoded into chain nodes")
    n = len(names)
    chains = []
    for mask in range(1 << n):
        members = tuple(names[i] for i in range(n) if mask >> i & 1)
        if P.is_chain(members):
            chains.append(members)
    nodes = [encode_chain(chain) for chain in chains]
    relation = set()
    for chain in chains:
        upper = encode_chain(chain)
        for r in range(len(chain) + 1):
            for sub in combinations(chain, r):
                relation.add((encode_chain(sub), upper))
    return Poset(nodes, relation)


def extract_maximal_via_chains(P: Poset) -> VarId:
    """Obtain a maximal element of P by running the pipeline on its chain poset.

    The pipeline yields a maximal chain; its least upper bound in P tops
    the chain and must be maximal, since any strict successor would extend
    the chain.
    """
    if not P.nodes:
        raise EmptyPosetError("cannot extract a maximal element from an empty poset")
    trace = wzl_pipeline(chain_poset(P))
    if not trace.passed:
        raise InternalError("pipeline verification failed on a chain poset")
    chain = decode_chain(trace.maximal_element)
    bounds = P.upper_bounds(chain)
    if not bounds:
        raise InternalError("maximal chain has no upper bound in a finite poset")
    top = bounds[0]
    if top not in set(P.maximal_elements()):
        raise InternalError("upper bound of a maximal chain is not maximal")
    return top


def parse_family(text: str) -> ChoiceFamily:
    """Parse the family text format.

    One statement per line: ``set <index>: <tok> <tok> ...`` declares an
    indexed nonempty set. ``#`` starts a comment. Indices and tokens are
    alphanumeric (letters, digits, underscore).
    """
    sets: dict[str, list[str]] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        if keyword != "set":
            raise ParseError(f"line {lineno}: expected 'set <index>: <tok> ...', got {line!r}")
        index_part, colon, tokens_part = rest.partition(":")
        index = index_part.strip()
        if not colon:
            raise ParseError(f"line {lineno}: missing ':' after the index")
        if not TOKEN_RE.match(index):
            raise ParseError(f"line {lineno}: index {index!r} is not an alphanumeric token")
        tokens = tokens_part.split()
        if not tokens:
            raise ParseError(f"line {lineno}: set {index!r} has no elements")
        for token in tokens:
            if not TOKEN_RE.match(token):
                raise ParseError(f"line {lineno}: element {token!r} is not an alphanumeric token")
        if index in sets:
            raise ParseError(f"line {lineno}: duplicate index {index!r}")
        sets[index] = tokens
    return ChoiceFamily(sets)
