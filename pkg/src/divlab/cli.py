"""Command-line front end.

Exit codes: 0 reproduced / holds, 1 failed / violated, 2 unknown, 3 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .domains import DOMAINS
from .errors import DivlabError, EmptyContent, NotMember, ParseError, PreconditionFailed
from .fuzz import PROPERTIES, run_property
from .parsing import parse_expr, parse_poly_coeffs, print_expr
from .predicates import Verdict, aq_triple_check, gauss_product_check, primal_check, prime_like_check, primitive_check
from .witnesses import FAMILY_WITNESSES, TRIAL_WITNESSES, WITNESSES, FamilyParams

EXIT_OK, EXIT_FAILED, EXIT_UNKNOWN, EXIT_USAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _verdict_exit(v: Verdict) -> int:
    return {True: EXIT_OK, False: EXIT_FAILED, None: EXIT_UNKNOWN}[v.holds]


def _emit_verdict(v: Verdict) -> int:
    print(json.dumps(v.to_dict(print_expr), sort_keys=True, indent=2))
    return _verdict_exit(v)


def _run_verb(args) -> int:
    tag = args.domain
    n_args = {"aq": 3, "prime-like": 3, "primal": 3, "gauss": 2}.get(args.verb)
    if n_args is not None and len(args.exprs) != n_args:
        raise UsageError(f"{args.verb} takes exactly {n_args} expressions, got {len(args.exprs)}")
    if args.verb == "primitive":
        if not args.exprs:
            raise UsageError("primitive needs at least one coefficient")
        return _emit_verdict(primitive_check(tag, [parse_expr(e, tag) for e in args.exprs]))
    if args.verb == "gauss":
        f, g = (parse_poly_coeffs(e, tag) for e in args.exprs)
        return _emit_verdict(gauss_product_check(tag, f, g))
    elems = [parse_expr(e, tag) for e in args.exprs]
    check = {"aq": aq_triple_check, "prime-like": prime_like_check, "primal": primal_check}[args.verb]
    return _emit_verdict(check(tag, *elems))


def _run_witness(args) -> int:
    fn = WITNESSES[args.name]
    kwargs = {}
    if args.name in FAMILY_WITNESSES:
        try:
            kwargs["params"] = FamilyParams(args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    elif args.n != 100:
        raise UsageError(f"--n does not apply to witness {args.name}")
    if args.name in TRIAL_WITNESSES:
        kwargs["seed"] = args.seed
        if args.trials is not None:
            kwargs["trials"] = args.trials
    report = fn(**kwargs)
    print(report.to_json() if args.json else report.summary())
    return EXIT_OK if report.reproduced else EXIT_FAILED


def _run_fuzz(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be positive")
    res = run_property(args.property, args.trials, args.seed)
    if args.json:
        print(json.dumps(res.to_dict(), sort_keys=True, indent=2))
    else:
        print(f"{res.name}: {'ok' if res.ok else 'FAILED'} ({res.trials} trials, seed {args.seed}, "
              f"{res.elapsed:.2f}s)")
        for line in res.failures[:10]:
            print(f"  {line}")
    return EXIT_OK if res.ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="divlab", description="Exact divisibility experiments.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    w = sub.add_parser("witness", help="run a named reproduction")
    w.add_argument("name", choices=sorted(WITNESSES))
    w.add_argument("--n", type=int, default=100, help="family size for indexed witnesses")
    w.add_argument("--trials", type=int, default=None, help="batch size for fuzzed witnesses")
    w.add_argument("--seed", type=int, default=0)
    w.add_argument("--json", action="store_true")

    verbs = {
        "primitive": "coefficients c_0 c_1 ...: is the list primitive?",
        "gauss": "two comma-separated coefficient lists: is the product primitive?",
        "aq": "r s t: does gcd(r,s)=gcd(r,t)=1 imply gcd(r,st)=1?",
        "prime-like": "p r s with p | rs: find a nonunit divisor of p dividing r or s",
        "primal": "p a b with p | ab: split p across a and b",
    }
    for verb, help_text in verbs.items():
        v = sub.add_parser(verb, help=help_text)
        v.add_argument("--domain", required=True, choices=sorted(DOMAINS))
        v.add_argument("exprs", nargs="*")
        v.set_defaults(verb=verb)

    f = sub.add_parser("fuzz", help="run a seeded property check")
    f.add_argument("property", choices=sorted(PROPERTIES))
    f.add_argument("--trials", type=int, default=1000)
    f.add_argument("--seed", type=int, default=0)
    f.add_argument("--json", action="store_true")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "witness":
            return _run_witness(args)
        if args.command == "fuzz":
            return _run_fuzz(args)
        return _run_verb(args)
    except (UsageError, ParseError, NotMember, PreconditionFailed, EmptyContent) as exc:
        print(f"divlab: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DivlabError as exc:
        print(f"divlab: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
