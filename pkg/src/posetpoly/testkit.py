"""Seeded random generators and exhaustive small-instance enumeration.

Everything here is a deterministic function of the seed: the generator is
Python's Mersenne Twister (random.Random), whose output sequence is stable
for a fixed seed, and per-trial seeds are derived with the splitmix64
output mix so trial batches stay independent of each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random
from typing import Iterator

from .errors import CycleError, EmptyPosetError, SizeLimitError
from .polyring import Monomial, Polynomial
from .poset import Poset, build_poset

DEFAULT_SEED = 1729

ENUMERATION_NODE_LIMIT = 4

_MASK64 = (1 << 64) - 1
_ALPHABET = "abcdefghijklmnopqrstuvwxyz"


def derive_seed(seed: int, index: int) -> int:
    """Mix a base seed with a trial index (splitmix64 output function)."""
    z = (seed + (index + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (z ^ (z >> 31)) & _MASK64


@dataclass(frozen=True)
class GenConfig:
    """Knobs for the random generators; equal configs give identical output."""

    seed: int = DEFAULT_SEED
    max_nodes: int = 6
    edge_probability: float = 0.4
    max_terms: int = 5
    max_degree: int = 3
    coeff_bound: int = 9

    def __post_init__(self) -> None:
        if not 0 <= self.seed <= _MASK64:
            raise ValueError("seed must fit in 64 unsigned bits")
        if not 1 <= self.max_nodes <= len(_ALPHABET):
            raise ValueError(f"max_nodes must be between 1 and {len(_ALPHABET)}")
        if not 0.0 <= self.edge_probability <= 1.0:
            raise ValueError("edge_probability must lie in [0, 1]")
        if self.max_terms < 0 or self.max_degree < 0:
            raise ValueError("max_terms and max_degree must be non-negative")
        if self.coeff_bound < 1:
            raise ValueError("coeff_bound must be positive")


def random_poset(cfg: GenConfig) -> Poset:
    """A random poset: strict edges sampled in index order, then closed.

    Sampling edges only from lower to higher index keeps the input acyclic,
    so construction never fails; probability 0 yields an antichain and
    probability 1 a total chain.
    """
    rng = Random(cfg.seed)
    count = rng.randint(1, cfg.max_nodes)
    names = list(_ALPHABET[:count])
    edges = []
    for i in range(count):
        for j in range(i + 1, count):
            if rng.random() < cfg.edge_probability:
                edges.append((names[i], names[j]))
    return build_poset(names, edges)


def random_polynomial(cfg: GenConfig, P: Poset) -> Polynomial:
    """A random polynomial over the poset's variables.

    At most max_terms monomials of total degree at most max_degree, each
    with a nonzero coefficient of magnitude at most coeff_bound. A repeated
    monomial draw is skipped rather than merged, which keeps every stored
    coefficient inside the stated bound.
    """
    if not P.nodes:
        raise EmptyPosetError("random polynomials need at least one variable")
    rng = Random(cfg.seed)
    names = P.sorted_nodes()
    count = rng.randint(0, cfg.max_terms)
    terms: dict[Monomial, int] = {}
    for _ in range(count):
        degree = rng.randint(0, cfg.max_degree)
        exponents: dict[str, int] = {}
        for _ in range(degree):
            var = rng.choice(names)
            exponents[var] = exponents.get(var, 0) + 1
        monomial = Monomial(exponents)
        if monomial in terms:
            continue
        magnitude = rng.randint(1, cfg.coeff_bound)
        sign = 1 if rng.random() < 0.5 else -1
        terms[monomial] = sign * magnitude
    return Polynomial(terms)


def all_posets_up_to(n: int) -> Iterator[Poset]:
    """Every labeled poset with 1..n nodes, exactly once, in a fixed order.

    Enumerates all subsets of ordered pairs as strict edges, closes each,
    drops the cyclic ones, and deduplicates closures that coincide. Counts
    per node count: 1, 3, 19, 219.
    """
    if n > ENUMERATION_NODE_LIMIT:
        raise SizeLimitError(
            f"exhaustive enumeration is limited to {ENUMERATION_NODE_LIMIT} nodes, got {n}"
        )
    for size in range(1, n + 1):
        names = list(_ALPHABET[:size])
        pairs = [(a, b) for a in names for b in names if a != b]
        seen: set[frozenset] = set()
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            try:
                poset = build_poset(names, edges)
            except CycleError:
                continue
            if poset.relation in seen:
                continue
            seen.add(poset.relation)
            yield poset
