"""Finite partial orders over named variables.

Construction goes through :func:`build_poset`, which takes strict edges,
closes them reflexively and transitively, and rejects cycles. Derived
constructions elsewhere in the package call :class:`Poset` directly with a
relation that is already a partial order.

All values are immutable after construction and all queries are pure, so
posets can be shared freely. Every collection-valued query returns its
result sorted by node name.
"""

from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable

from .errors import CycleError, ParseError, SizeLimitError, UnknownNodeError

# A variable is identified by its name.
VarId = str

# Lexical rule for node names in hand-written poset files. Programmatic
# construction accepts any non-empty string so that derived posets (whose
# nodes encode chains or partial functions) reuse this class unchanged.
IDENT_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")

BRUTEFORCE_NODE_LIMIT = 15


class Poset:
    """A finite set of nodes with a reflexive, antisymmetric, transitive relation.

    The constructor trusts its arguments; use :func:`build_poset` for
    validated construction from strict edges.
    """

    __slots__ = ("_nodes", "_relation", "_above", "_below", "_sorted")

    def __init__(self, nodes: Iterable[VarId], relation: Iterable[tuple[VarId, VarId]]):
        self._nodes = frozenset(nodes)
        self._relation = frozenset(relation)
        above: dict[VarId, set[VarId]] = {a: set() for a in self._nodes}
        below: dict[VarId, set[VarId]] = {a: set() for a in self._nodes}
        for a, b in self._relation:
            above[a].add(b)
            below[b].add(a)
        self._above = {a: frozenset(s) for a, s in above.items()}
        self._below = {a: frozenset(s) for a, s in below.items()}
        self._sorted = tuple(sorted(self._nodes))

    @property
    def nodes(self) -> frozenset[VarId]:
        return self._nodes

    @property
    def relation(self) -> frozenset[tuple[VarId, VarId]]:
        return self._relation

    def sorted_nodes(self) -> list[VarId]:
        return list(self._sorted)

    def __len__(self) -> int:
        return len(self._nodes)

    def __contains__(self, name: object) -> bool:
        return name in self._nodes

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self._nodes == other._nodes and self._relation == other._relation

    def __hash__(self) -> int:
        return hash((self._nodes, self._relation))

    def __repr__(self) -> str:
        return f"Poset({len(self._nodes)} nodes, {len(self.strict_pairs())} strict pairs)"

    def _require(self, *names: VarId) -> None:
        for name in names:
            if name not in self._nodes:
                raise UnknownNodeError(f"unknown node {name!r}")

    def strict_pairs(self) -> list[tuple[VarId, VarId]]:
        """All pairs (a, b) with a < b, sorted."""
        return sorted((a, b) for a, b in self._relation if a != b)

    def leq(self, a: VarId, b: VarId) -> bool:
        """True iff a is below-or-equal b."""
        self._require(a, b)
        return b in self._above[a]

    def is_chain(self, members: Iterable[VarId]) -> bool:
        """True iff every pair of members is comparable."""
        seen = self._checked(members)
        for x, y in combinations(seen, 2):
            if y not in self._above[x] and x not in self._above[y]:
                return False
        return True

    def upper_bounds(self, members: Iterable[VarId]) -> list[VarId]:
        """All nodes lying above every member, sorted by name."""
        return sorted(self._upper_bound_set(members))

    def is_compatible(self, members: Iterable[VarId]) -> bool:
        """True iff every finite subset of the members has an upper bound.

        For a finite member set this collapses to the set itself having an
        upper bound; the empty set is compatible exactly when the poset is
        nonempty (any node bounds it vacuously).
        """
        return bool(self._upper_bound_set(members))

    def maximal_elements(self) -> list[VarId]:
        """Nodes with no strict successor, sorted by name."""
        return [x for x in self._sorted if self._above[x] == frozenset((x,))]

    def down_set(self, x: VarId) -> list[VarId]:
        """All nodes below-or-equal x, sorted by name."""
        self._require(x)
        return sorted(self._below[x])

    def maximal_compatible_subsets(self) -> list[tuple[VarId, ...]]:
        """All inclusion-maximal compatible subsets, as sorted tuples in sorted order.

        A finite set is compatible exactly when it sits inside some principal
        down-set, so the maximal compatible sets are the down-sets of the
        maximal elements. The brute-force enumeration
        :func:`maximal_compatible_subsets_bruteforce` cross-checks this.
        """
        return sorted(tuple(sorted(self._below[m])) for m in self.maximal_elements())

    def _checked(self, members: Iterable[VarId]) -> frozenset[VarId]:
        seen = frozenset(members)
        for name in seen:
            if name not in self._nodes:
                raise UnknownNodeError(f"unknown node {name!r}")
        return seen

    def _upper_bound_set(self, members: Iterable[VarId]) -> frozenset[VarId]:
        seen = self._checked(members)
        bounds = self._nodes
        for y in seen:
            bounds &= self._above[y]
            if not bounds:
                break
        return frozenset(bounds)


def build_poset(nodes: Iterable[VarId], strict_edges: Iterable[tuple[VarId, VarId]]) -> Poset:
    """Build a poset from nodes and strict edges, closing reflexively and transitively.

    Raises UnknownNodeError for edge endpoints outside the node set, and
    CycleError when the closure would violate antisymmetry (including a
    self-edge, which asserts a < a).
    """
    node_set = set()
    for name in nodes:
        if not isinstance(name, str) or not name:
            raise UnknownNodeError(f"node names must be non-empty strings, got {name!r}")
        node_set.add(name)
    above: dict[VarId, set[VarId]] = {a: {a} for a in node_set}
    for a, b in strict_edges:
        if a not in node_set:
            raise UnknownNodeError(f"edge endpoint {a!r} is not a declared node")
        if b not in node_set:
            raise UnknownNodeError(f"edge endpoint {b!r} is not a declared node")
        if a == b:
            raise CycleError(f"strict relation {a!r} < {a!r} is a one-step cycle")
        above[a].add(b)

    # Warshall closure: after the pass, above[x] is the full up-set of x.
    order = sorted(node_set)
    for k in order:
        reach_k = above[k]
        for i in order:
            if i != k and k in above[i]:
                above[i] |= reach_k

    for a in order:
        for b in above[a]:
            if a != b and a in above[b]:
                raise CycleError(f"relation closes into a cycle through {a!r} and {b!r}")

    relation = frozenset((a, b) for a, ups in above.items() for b in ups)
    return Poset(node_set, relation)


def maximal_compatible_subsets_bruteforce(P: Poset) -> list[tuple[VarId, ...]]:
    """Independent oracle: enumerate all subsets, filter by compatibility.

    A compatible subset is inclusion-maximal iff no one-point extension is
    compatible (compatibility is downward closed, so any larger compatible
    superset would contain a compatible one-point extension).
    """
    names = P.sorted_nodes()
    n = len(names)
    if n > BRUTEFORCE_NODE_LIMIT:
        raise SizeLimitError(
            f"brute-force enumeration is limited to {BRUTEFORCE_NODE_LIMIT} nodes, got {n}"
        )
    compatible = [
        P.is_compatible(names[i] for i in range(n) if mask >> i & 1)
        for mask in range(1 << n)
    ]
    result = []
    for mask in range(1 << n):
        if not compatible[mask]:
            continue
        extensions = (mask | (1 << i) for i in range(n) if not mask >> i & 1)
        if all(not compatible[ext] for ext in extensions):
            result.append(tuple(names[i] for i in range(n) if mask >> i & 1))
    return sorted(result)


def induced_subposet(P: Poset, keep: Iterable[VarId]) -> Poset:
    """The restriction of P to a subset of its nodes."""
    kept = frozenset(keep)
    for name in kept:
        if name not in P.nodes:
            raise UnknownNodeError(f"unknown node {name!r}")
    relation = frozenset((a, b) for a, b in P.relation if a in kept and b in kept)
    return Poset(kept, relation)


def verify_axioms(P: Poset) -> dict[str, bool]:
    """Re-check the order axioms by direct loops, independent of construction."""
    rel = P.relation
    nodes = P.nodes
    reflexive = all((a, a) in rel for a in nodes)
    antisymmetric = all(a == b or (b, a) not in rel for a, b in rel)
    transitive = all(
        (a, d) in rel for a, b in rel for c, d in rel if b == c
    )
    contained = all(a in nodes and b in nodes for a, b in rel)
    return {
        "reflexive": reflexive,
        "antisymmetric": antisymmetric,
        "transitive": transitive,
        "relation_within_nodes": contained,
    }


def parse_poset(text: str) -> Poset:
    """Parse the poset text format.

    One statement per line: ``node <id>`` declares a node, ``rel <a> <b>``
    declares a < b (closed automatically). ``#`` starts a comment. Node
    names must match ``[A-Za-z_][A-Za-z0-9_]*``.
    """
    nodes: list[VarId] = []
    edges: list[tuple[VarId, VarId]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "node" and len(parts) == 2:
            _check_ident(parts[1], lineno)
            nodes.append(parts[1])
        elif parts[0] == "rel" and len(parts) == 3:
            _check_ident(parts[1], lineno)
            _check_ident(parts[2], lineno)
            edges.append((parts[1], parts[2]))
        else:
            raise ParseError(
                f"line {lineno}: expected 'node <id>' or 'rel <a> <b>', got {line!r}"
            )
    return build_poset(nodes, edges)


def _check_ident(name: str, lineno: int) -> None:
    if not IDENT_RE.match(name):
        raise ParseError(f"line {lineno}: {name!r} is not a valid identifier")
