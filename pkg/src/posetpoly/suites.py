"""Seeded property suites behind the prop-check command.

Each suite runs an exhaustive small corpus where one exists, then a batch
of seeded random trials, and stops at the first failure. Counterexamples
are shrunk best-effort (dropping polynomial terms, then poset nodes)
before being reported together with the trial seed that produced them.
"""

from __future__ import annotations

from dataclasses import dataclass
from random import Random

from .errors import InternalError, PosetPolyError
from .ideals import maximal_small_ideals, var_ideal_member
from .polyring import Polynomial, format_poly
from .poset import Poset, induced_subposet, maximal_compatible_subsets_bruteforce
from .smallness import is_big
from .testkit import GenConfig, all_posets_up_to, derive_seed, random_polynomial, random_poset
from .zorn import (
    ChoiceFamily,
    chain_poset,
    choice_poset,
    decode_chain,
    decode_partial_choice,
    encode_chain,
    encode_partial_choice,
    wzl_pipeline,
)


@dataclass(frozen=True)
class SuiteResult:
    suite: str
    seed: int
    corpus_total: int
    corpus_passes: int
    trials: int
    trial_passes: int
    counterexample: str | None = None
    counterexample_seed: int | None = None

    @property
    def passed(self) -> bool:
        return (
            self.corpus_passes == self.corpus_total
            and self.trial_passes == self.trials
        )


def describe_poset(P: Poset) -> str:
    nodes = ",".join(P.sorted_nodes())
    strict = " ".join(f"{a}<{b}" for a, b in P.strict_pairs())
    return f"nodes[{nodes}] strict[{strict}]"


def _edge_probability(trial_seed: int) -> float:
    # Vary density across trials while staying a pure function of the seed.
    return ((trial_seed >> 8) % 101) / 100.0


def _trial_poset(trial_seed: int, max_nodes: int) -> Poset:
    cfg = GenConfig(
        seed=derive_seed(trial_seed, 0),
        max_nodes=max_nodes,
        edge_probability=_edge_probability(trial_seed),
    )
    return random_poset(cfg)


def random_big_polynomial(
    seed: int,
    P: Poset,
    max_terms: int = 6,
    max_degree: int = 4,
    coeff_bound: int = 9,
    attempts: int = 500,
) -> Polynomial:
    """Rejection-sample a big polynomial over P's variables."""
    for attempt in range(attempts):
        cfg = GenConfig(
            seed=derive_seed(seed, attempt),
            max_terms=max_terms,
            max_degree=max_degree,
            coeff_bound=coeff_bound,
        )
        candidate = random_polynomial(cfg, P)
        if is_big(P, candidate):
            return candidate
    raise InternalError("could not sample a big polynomial; generator parameters too tight")


def _shrink_poset(P: Poset, still_fails) -> Poset:
    """Greedily drop nodes while the failure predicate keeps holding."""
    changed = True
    while changed and len(P) > 1:
        changed = False
        for name in P.sorted_nodes():
            candidate = induced_subposet(P, P.nodes - {name})
            try:
                bad = still_fails(candidate)
            except PosetPolyError:
                bad = False
            if bad:
                P = candidate
                changed = True
                break
    return P


def _shrink_multiplicativity(P: Poset, f: Polynomial, g: Polynomial):
    def fails(poset: Poset, lhs: Polynomial, rhs: Polynomial) -> bool:
        try:
            return (
                is_big(poset, lhs)
                and is_big(poset, rhs)
                and not is_big(poset, lhs * rhs)
            )
        except PosetPolyError:
            return False

    changed = True
    while changed:
        changed = False
        for monomial, coeff in f.sorted_terms():
            smaller = f - Polynomial({monomial: coeff})
            if fails(P, smaller, g):
                f = smaller
                changed = True
                break
        for monomial, coeff in g.sorted_terms():
            smaller = g - Polynomial({monomial: coeff})
            if fails(P, f, smaller):
                g = smaller
                changed = True
                break
        for name in P.sorted_nodes():
            candidate = induced_subposet(P, P.nodes - {name})
            if fails(candidate, f, g):
                P = candidate
                changed = True
                break
    return P, f, g


def run_multiplicativity(seed: int, trials: int) -> SuiteResult:
    """Products of big polynomials stay big."""
    passes = 0
    for t in range(trials):
        trial_seed = derive_seed(seed, t)
        P = _trial_poset(trial_seed, max_nodes=8)
        f = random_big_polynomial(derive_seed(trial_seed, 1), P)
        g = random_big_polynomial(derive_seed(trial_seed, 2), P)
        if is_big(P, f * g):
            passes += 1
            continue
        P, f, g = _shrink_multiplicativity(P, f, g)
        detail = (
            f"{describe_poset(P)} f={format_poly(f)} g={format_poly(g)} "
            f"product={format_poly(f * g)}"
        )
        return SuiteResult("multiplicativity", seed, 0, 0, trials, passes, detail, trial_seed)
    return SuiteResult("multiplicativity", seed, 0, 0, trials, passes)


def _oracle_ok(P: Poset) -> bool:
    return P.maximal_compatible_subsets() == maximal_compatible_subsets_bruteforce(P)


def run_oracle(seed: int, trials: int) -> SuiteResult:
    """Structural maximal-compatible-subsets equals the brute-force enumeration."""
    return _corpus_and_trials("oracle", seed, trials, _oracle_ok, max_nodes=7)


def _bijection_ok(P: Poset) -> bool:
    subsets = P.maximal_compatible_subsets()
    ideals = maximal_small_ideals(P)
    if [ideal.generators for ideal in ideals] != subsets:
        return False
    if len(set(ideals)) != len(ideals):
        return False
    if len(ideals) != len(P.maximal_elements()):
        return False
    for ideal in ideals:
        if not P.is_compatible(ideal.generators):
            return False
        trapped = tuple(
            x
            for x in P.sorted_nodes()
            if var_ideal_member(P, ideal, Polynomial.variable(x))
        )
        if trapped != ideal.generators:
            return False
    return True


def run_bijection(seed: int, trials: int) -> SuiteResult:
    """Maximal small ideals correspond one-to-one with maximal compatible subsets."""
    return _corpus_and_trials("bijection", seed, trials, _bijection_ok, max_nodes=7)


def _pipeline_ok(P: Poset) -> bool:
    trace = wzl_pipeline(P)
    return (
        trace.passed
        and trace.maximal_element == trace.upper_bound
        and trace.maximal_element in set(P.maximal_elements())
    )


def run_pipeline(seed: int, trials: int) -> SuiteResult:
    """The ideal-theoretic pipeline lands on a maximal element."""
    return _corpus_and_trials("pipeline", seed, trials, _pipeline_ok, max_nodes=7)


def _corpus_and_trials(name, seed, trials, check, max_nodes) -> SuiteResult:
    corpus = list(all_posets_up_to(4))
    corpus_passes = 0
    for P in corpus:
        if check(P):
            corpus_passes += 1
            continue
        shrunk = _shrink_poset(P, lambda Q: not check(Q))
        detail = f"corpus case {describe_poset(shrunk)}"
        return SuiteResult(name, seed, len(corpus), corpus_passes, trials, 0, detail, None)
    passes = 0
    for t in range(trials):
        trial_seed = derive_seed(seed, t)
        P = _trial_poset(trial_seed, max_nodes=max_nodes)
        if check(P):
            passes += 1
            continue
        shrunk = _shrink_poset(P, lambda Q: not check(Q))
        detail = describe_poset(shrunk)
        return SuiteResult(name, seed, len(corpus), corpus_passes, trials, passes, detail, trial_seed)
    return SuiteResult(name, seed, len(corpus), corpus_passes, trials, passes)


def _unions_trial(trial_seed: int) -> tuple[bool, str]:
    rng = Random(trial_seed)
    P = _trial_poset(trial_seed, max_nodes=6)
    chains = chain_poset(P)
    anchor = rng.choice(chains.sorted_nodes())
    members = [x for x in chains.down_set(anchor) if rng.random() < 0.6]
    union: frozenset[str] = frozenset()
    for member in members:
        union |= decode_chain(member)
    encoded = encode_chain(union)
    if not P.is_chain(union):
        return False, f"union of compatible chains is not a chain: {describe_poset(P)} members={members}"
    if encoded not in chains.nodes or not all(chains.leq(x, encoded) for x in members):
        return False, f"chain union is not an upper bound: {describe_poset(P)} members={members}"

    size_count = rng.randint(0, 3)
    sets = {}
    for j in range(size_count):
        sets[f"i{j}"] = [f"t{v}" for v in range(rng.randint(1, 3))]
    family = ChoiceFamily(sets)
    functions = choice_poset(family)
    anchor = rng.choice(functions.sorted_nodes())
    members = [x for x in functions.down_set(anchor) if rng.random() < 0.6]
    merged: dict[str, str] = {}
    for member in members:
        merged.update(decode_partial_choice(member))
    valid = all(
        index in set(family.indices) and value in family.options(index)
        for index, value in merged.items()
    )
    encoded = encode_partial_choice(merged)
    if not valid or encoded not in functions.nodes:
        return False, f"union of compatible partial choices is invalid: family={family.as_dict()} members={members}"
    if not all(functions.leq(x, encoded) for x in members):
        return False, f"partial-choice union is not an upper bound: family={family.as_dict()} members={members}"
    return True, ""


def run_unions(seed: int, trials: int) -> SuiteResult:
    """Unions of compatible chain sets and of compatible partial choices behave as upper bounds."""
    passes = 0
    for t in range(trials):
        trial_seed = derive_seed(seed, t)
        ok, detail = _unions_trial(trial_seed)
        if ok:
            passes += 1
            continue
        return SuiteResult("unions", seed, 0, 0, trials, passes, detail, trial_seed)
    return SuiteResult("unions", seed, 0, 0, trials, passes)


_SUITES = {
    "multiplicativity": run_multiplicativity,
    "bijection": run_bijection,
    "pipeline": run_pipeline,
    "unions": run_unions,
    "oracle": run_oracle,
}

SUITE_NAMES = tuple(sorted(_SUITES))


def run_suite(name: str, seed: int, trials: int) -> SuiteResult:
    try:
        suite = _SUITES[name]
    except KeyError:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITE_NAMES)}") from None
    return suite(seed, trials)
