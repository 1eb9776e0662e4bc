"""Command-line interface.

Every command reads files and arguments, prints a deterministic text (or
JSON) report, and exits with the documented code: 0 ok, 1 usage, 2 syntax
error, 3 domain error, 4 verification failure. All randomness flows from
an explicit --seed; the default is a fixed constant, never the clock.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import (
    CycleError,
    EmptyPosetError,
    InternalError,
    ParseError,
    PreconditionError,
    SizeLimitError,
    UnknownNodeError,
    UnknownVariableError,
)
from .ideals import VarIdeal, big_witness, is_small_var_ideal, maximal_small_ideals, var_ideal_member
from .polyring import format_poly, parse_poly
from .poset import Poset, maximal_compatible_subsets_bruteforce, parse_poset, verify_axioms
from .smallness import dominated_by, dominating_witness
from .suites import SUITE_NAMES, run_suite
from .testkit import DEFAULT_SEED
from .zorn import extract_choice, extract_maximal_via_chains, parse_family, wzl_pipeline

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_SYNTAX = 2
EXIT_DOMAIN = 3
EXIT_VERIFICATION = 4

_DOMAIN_ERRORS = (
    CycleError,
    UnknownNodeError,
    UnknownVariableError,
    SizeLimitError,
    EmptyPosetError,
)
_VERIFICATION_ERRORS = (PreconditionError, InternalError)


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the contract here is exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as handle:
        return handle.read()


def _load_poset(path: str) -> Poset:
    return parse_poset(_read(path))


def _parse_generators(raw: str) -> VarIdeal:
    names = [part for part in raw.split(",") if part]
    return VarIdeal(names)


def _cmd_poset_check(args) -> int:
    P = _load_poset(args.file)
    report = verify_axioms(P)
    print(f"nodes: {len(P)}")
    print(f"relation pairs: {len(P.relation)}")
    for name, ok in report.items():
        print(f"{name}: {'ok' if ok else 'FAIL'}")
    return EXIT_OK if all(report.values()) else EXIT_VERIFICATION


def _cmd_poset_maxcompat(args) -> int:
    P = _load_poset(args.file)
    fast = P.maximal_compatible_subsets()
    for members in fast:
        print("{" + ",".join(members) + "}")
    if args.oracle:
        brute = maximal_compatible_subsets_bruteforce(P)
        if brute != fast:
            print(
                f"oracle mismatch: structural={fast} brute-force={brute}",
                file=sys.stderr,
            )
            return EXIT_VERIFICATION
    return EXIT_OK


def _cmd_poly_classify(args) -> int:
    P = _load_poset(args.file)
    f = parse_poly(args.poly, P)
    witness = dominating_witness(P, f)
    print(f"small witness={witness}" if witness is not None else "big")
    if args.verbose:
        for x in P.sorted_nodes():
            answer = "yes" if dominated_by(P, f, x) else "no"
            print(f"dominated-by {x}: {answer}")
    return EXIT_OK


def _cmd_ideal(args) -> int:
    P = _load_poset(args.file)
    if args.ideal_command == "maxsmall":
        for ideal in maximal_small_ideals(P):
            print(str(ideal))
        return EXIT_OK
    ideal = _parse_generators(args.gens)
    if args.ideal_command == "small":
        print("true" if is_small_var_ideal(P, ideal) else "false")
        return EXIT_OK
    f = parse_poly(args.poly, P)
    if args.ideal_command == "member":
        print("true" if var_ideal_member(P, ideal, f) else "false")
        return EXIT_OK
    witness = big_witness(P, ideal, f)
    print(format_poly(witness))
    return EXIT_OK


def _cmd_zorn(args) -> int:
    if args.zorn_command == "pipeline":
        trace = wzl_pipeline(_load_poset(args.file))
        if args.json:
            print(json.dumps(trace.as_dict(), indent=2))
        else:
            gens = ",".join(trace.maximal_compatible_set)
            print(f"maximal small ideal generators: {{{gens}}}")
            for check in trace.checks:
                print(f"check {check.name}: {'pass' if check.passed else 'FAIL'}")
            print(f"upper bound: {trace.upper_bound}")
            print(f"maximal element: {trace.maximal_element}")
        return EXIT_OK if trace.passed else EXIT_VERIFICATION
    if args.zorn_command == "choice":
        choice = extract_choice(parse_family(_read(args.file)))
        assignments = choice.as_dict()
        if assignments:
            print(" ".join(f"{i}={v}" for i, v in sorted(assignments.items())))
        else:
            print("{}")
        return EXIT_OK
    print(extract_maximal_via_chains(_load_poset(args.file)))
    return EXIT_OK


def _cmd_prop_check(args) -> int:
    result = run_suite(args.suite, args.seed, args.trials)
    print(f"suite {result.suite}: seed={result.seed} trials={result.trials}")
    if result.corpus_total:
        print(f"corpus: {result.corpus_passes}/{result.corpus_total} pass")
    print(f"random: {result.trial_passes}/{result.trials} pass")
    if not result.passed:
        origin = "corpus" if result.counterexample_seed is None else f"seed={result.counterexample_seed}"
        print(f"counterexample ({origin}): {result.counterexample}")
        print("FAIL")
        return EXIT_VERIFICATION
    print("PASS")
    return EXIT_OK


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="posetpoly",
        description="Finite posets, polynomial domination, maximal small ideals, "
        "and maximal-element extraction.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    poset = commands.add_parser("poset", help="poset file queries")
    poset_sub = poset.add_subparsers(dest="poset_command", required=True)
    check = poset_sub.add_parser("check", help="verify the order axioms")
    check.add_argument("file")
    check.set_defaults(func=_cmd_poset_check)
    maxcompat = poset_sub.add_parser("maxcompat", help="list maximal compatible subsets")
    maxcompat.add_argument("file")
    maxcompat.add_argument("--oracle", action="store_true", help="cross-check the brute-force enumeration")
    maxcompat.set_defaults(func=_cmd_poset_maxcompat)

    poly = commands.add_parser("poly", help="polynomial queries")
    poly_sub = poly.add_subparsers(dest="poly_command", required=True)
    classify = poly_sub.add_parser("classify", help="classify a polynomial as small or big")
    classify.add_argument("file")
    classify.add_argument("poly")
    classify.add_argument("--verbose", action="store_true", help="print the per-variable domination table")
    classify.set_defaults(func=_cmd_poly_classify)

    ideal = commands.add_parser("ideal", help="variable-generated ideal queries")
    ideal_sub = ideal.add_subparsers(dest="ideal_command", required=True)
    member = ideal_sub.add_parser("member", help="ideal membership of a polynomial")
    member.add_argument("file")
    member.add_argument("--gens", required=True, help="comma-separated generator names")
    member.add_argument("poly")
    small = ideal_sub.add_parser("small", help="whether the generated ideal is small")
    small.add_argument("file")
    small.add_argument("--gens", required=True, help="comma-separated generator names")
    maxsmall = ideal_sub.add_parser("maxsmall", help="list all maximal small ideals")
    maxsmall.add_argument("file")
    witness = ideal_sub.add_parser("witness", help="big witness for a polynomial outside the ideal")
    witness.add_argument("file")
    witness.add_argument("--gens", required=True, help="comma-separated generator names")
    witness.add_argument("poly")
    for sub in (member, small, maxsmall, witness):
        sub.set_defaults(func=_cmd_ideal)

    zorn = commands.add_parser("zorn", help="maximal-element extraction pipelines")
    zorn_sub = zorn.add_subparsers(dest="zorn_command", required=True)
    pipeline = zorn_sub.add_parser("pipeline", help="run the ideal-theoretic pipeline")
    pipeline.add_argument("file")
    pipeline.add_argument("--json", action="store_true", help="emit the trace as JSON")
    choice = zorn_sub.add_parser("choice", help="extract a full choice function for a family file")
    choice.add_argument("file")
    chains = zorn_sub.add_parser("chains", help="extract a maximal element via the chain poset")
    chains.add_argument("file")
    for sub in (pipeline, choice, chains):
        sub.set_defaults(func=_cmd_zorn)

    prop = commands.add_parser("prop-check", help="run a seeded property suite")
    prop.add_argument("--suite", required=True, choices=SUITE_NAMES)
    prop.add_argument("--seed", type=int, default=DEFAULT_SEED)
    prop.add_argument("--trials", type=int, default=1000)
    prop.set_defaults(func=_cmd_prop_check)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except _VERIFICATION_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SYNTAX


if __name__ == "__main__":
    sys.exit(main())
