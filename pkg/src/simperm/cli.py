"""
Command-line interface.

Permutations are written in one-line notation as space-separated values,
e.g. "2 7 4 8 1 6 3 5"; the compact "27481635" is accepted on input when
every value is a single digit.

Exit codes: 0 success (or a finite class fully enumerated), 2 cap reached
with a nonempty frontier, 3 verification counterexample, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import exceptional, oracle, poset, wreath
from .errors import PermError
from .perm import format_perm, parse_permutation

EXIT_OK = 0
EXIT_CAP = 2
EXIT_COUNTEREXAMPLE = 3
EXIT_USAGE = 64

FORMAT_HELP = ('permutations are space-separated values in one-line notation, e.g. "2 4 1 3"; '
               'the digit string "2413" is accepted when all values are <= 9')


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _perm_arg(text: str):
    try:
        return parse_permutation(text)
    except PermError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="simperm", description="Simple permutations and their pattern poset.",
                     epilog=FORMAT_HELP)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    parser.add_argument("--threads", type=int, default=1, help="worker processes for level generation")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("enumerate", help="list the simple permutations of size N", epilog=FORMAT_HELP)
    p.add_argument("n", type=int)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("poset", help="export the poset of simple permutations up to size MAX_N")
    p.add_argument("max_n", type=int)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("closure", help="export the poset of simple patterns of SIGMA", epilog=FORMAT_HELP)
    p.add_argument("sigma", type=_perm_arg)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("chain", help="a chain of simple permutations from SIGMA down to PI", epilog=FORMAT_HELP)
    p.add_argument("sigma", type=_perm_arg)
    p.add_argument("pi", type=_perm_arg)

    p = sub.add_parser("stats", help="outdegree distribution as CSV for sizes 5..MAX_N")
    p.add_argument("max_n", type=int)
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("wreath", help="simple permutations of Av(B)", epilog=FORMAT_HELP)
    p.add_argument("--basis", type=Path, required=True,
                   help="one permutation per line; blank lines and # comments ignored")
    p.add_argument("--cap", type=int)
    p.add_argument("--general", action="store_true", help="allow non-simple basis elements (needs --cap)")
    p.add_argument("--max-level", type=int, default=wreath.DEFAULT_MAX_LEVEL)
    p.add_argument("--out", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="run exhaustive property checks")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--property", choices=sorted(oracle.PROPERTIES))
    which.add_argument("--all", action="store_true")
    which.add_argument("--list", action="store_true")
    p.add_argument("--max-n", type=int)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("exceptional", help="print an exceptional permutation")
    p.add_argument("--type", type=int, choices=exceptional.FAMILIES, required=True)
    p.add_argument("--m", type=int, required=True)
    return parser


def _emit(text: str, output: Path | None):
    if output is None:
        sys.stdout.write(text)
    else:
        output.write_text(text)


def cmd_enumerate(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    if args.n < 4:
        perms = sorted(oracle.brute_simples(args.n))
    else:
        perms = poset.enumerate_simples(args.n, args.threads)[args.n]
    if args.count_only:
        print(len(perms))
    elif args.format == "json":
        print(json.dumps([format_perm(p) for p in perms]))
    else:
        for p in perms:
            print(format_perm(p))
    return EXIT_OK


def cmd_poset(args) -> int:
    if args.max_n < 4:
        raise UsageError("max_n must be >= 4")
    g = poset.build_poset(args.max_n, args.threads)
    _emit(poset.to_dot(g) if args.format == "dot" else poset.to_json(g), args.output)
    return EXIT_OK


def cmd_closure(args) -> int:
    g = poset.pattern_closure(args.sigma)
    _emit(poset.to_dot(g, "patterns") if args.format == "dot" else poset.to_json(g), args.output)
    return EXIT_OK


def cmd_chain(args) -> int:
    chain = poset.find_chain(args.sigma, args.pi)
    for p in chain.perms:
        print(format_perm(p))
    return EXIT_OK


def cmd_stats(args) -> int:
    if args.max_n < 5:
        raise UsageError("max_n must be >= 5")
    _emit(poset.stats_to_csv(poset.outdegree_stats(args.max_n, args.threads)), args.output)
    return EXIT_OK


def cmd_wreath(args) -> int:
    with open(args.basis) as fh:
        perms = wreath.read_basis(fh)
    if args.general:
        if args.cap is None:
            raise UsageError("--general requires --cap")
        result = wreath.generate_general(perms, args.cap)
    else:
        result = wreath.generate(perms, args.cap, args.max_level)
    if args.out == "json":
        print(json.dumps(result.to_dict(), indent=1))
    else:
        for n, ps in sorted(result.levels.items()):
            print(f"# size {n}: {len(ps)}")
            for p in ps:
                print(format_perm(p))
        print("# terminated" if result.terminated else f"# cap {result.cap} reached")
    return EXIT_OK if result.terminated else EXIT_CAP


def cmd_verify(args) -> int:
    if args.list:
        for name, runner in oracle.PROPERTIES.items():
            print(f"{name}\t{runner.min_n}..{runner.default_max} (max {runner.hard_max})\t{runner.doc}")
        return EXIT_OK
    if args.all:
        if args.max_n is not None:
            raise UsageError("--max-n applies to a single --property")
        reports = oracle.run_all()
    else:
        reports = [oracle.run_property(args.property, args.max_n)]
    if args.json:
        print(json.dumps([r.to_dict() for r in reports], indent=1))
    else:
        for r in reports:
            print(r.summary())
            for w in r.counterexamples[:10]:
                print("  counterexample:", " | ".join(map(str, w)))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_exceptional(args) -> int:
    print(format_perm(exceptional.exceptional_perm((args.type, args.m))))
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate, "poset": cmd_poset, "closure": cmd_closure, "chain": cmd_chain,
    "stats": cmd_stats, "wreath": cmd_wreath, "verify": cmd_verify, "exceptional": cmd_exceptional,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.WARNING - 10 * min(args.verbose, 2),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return COMMANDS[args.command](args)
    except (UsageError, PermError, OSError) as exc:
        print(f"simperm {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
