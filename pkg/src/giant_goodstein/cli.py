"""giant-goodstein command line.

Exit codes: 0 success, 1 usage error, 2 budget stop, 3 counterexample found.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from . import buchholz as hb
from .ackermann import DEFAULT_CAP_BITS, EvaluationTooDeep, Exceeded
from .assignment import assign, fmt
from .base_change import OPS, base_change
from .goodstein import DEFAULT_MAX_TERM_NODES, VARIANTS, mr_seed, run
from .normal_form import (DEFAULT_NCAP, CertificationImpossible, eval_term, hereditary, knf,
                          term_str)
from .ordinal_e0 import ParseError, format_e0, fund_e0, parse_e0
from .verifier import SUITES, Params, run_suite

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_COUNTEREXAMPLE = 0, 1, 2, 3
_BUDGET = (Exceeded, CertificationImpossible, EvaluationTooDeep)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _nat(text: str) -> int:
    if not text.isdigit():
        raise argparse.ArgumentTypeError(f"expected a decimal natural number, got {text!r}")
    return int(text)


def _default_bits() -> int:
    env = os.environ.get("GOODSTEIN_MAX_BITS")
    if env is None:
        return DEFAULT_CAP_BITS
    if not env.isdigit():
        raise UsageError(f"GOODSTEIN_MAX_BITS must be a natural number, got {env!r}")
    return int(env)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-bits", type=_nat, default=None,
                        help="value budget in bits (default: $GOODSTEIN_MAX_BITS or 65536)")
    common.add_argument("--max-term-nodes", type=_nat, default=DEFAULT_MAX_TERM_NODES)
    common.add_argument("--ncap", type=_nat, default=DEFAULT_NCAP,
                        help="ncount bound for ordinal-index candidates")
    common.add_argument("--json", action="store_true", help="machine-readable output")

    def number_args(p):
        p.add_argument("--m", type=_nat, required=True)
        p.add_argument("--k", type=_nat, default=3)
        p.add_argument("--part", type=int, choices=(1, 2), default=1)

    ap = _Parser(prog="giant-goodstein",
                 description="Goodstein sequences over Ackermann normal forms.")
    sub = ap.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("nf", parents=[common], help="k-normal form of m")
    number_args(p)

    p = sub.add_parser("bc", parents=[common], help="base change k -> k+1")
    number_args(p)
    p.add_argument("--op", choices=OPS, default="prime")

    p = sub.add_parser("ord", parents=[common], help="ordinal assigned to m")
    number_args(p)
    p.add_argument("--map", choices=("psi", "chi", "xi", "simple"), default="psi")

    p = sub.add_parser("run", parents=[common], help="run a Goodstein sequence")
    seed = p.add_mutually_exclusive_group(required=True)
    seed.add_argument("--m", type=_nat)
    seed.add_argument("--seed-r", type=_nat, help="start from the symbolic seed m(r)")
    p.add_argument("--part", type=int, choices=(1, 2), default=1)
    p.add_argument("--variant", choices=VARIANTS, default="prime")
    p.add_argument("--max-steps", type=_nat, default=10_000)
    p.add_argument("--csv", action="store_true", help="print the trace as CSV")
    p.add_argument("--trace", metavar="FILE", help="write the JSON trace to FILE")

    p = sub.add_parser("fund", parents=[common], help="fundamental sequence member t[x]")
    p.add_argument("--system", choices=("e0", "ot", "otp"), default="e0")
    p.add_argument("--term", required=True)
    p.add_argument("--x", type=_nat, required=True)

    p = sub.add_parser("check", parents=[common], help="run a lemma suite")
    p.add_argument("--suite", choices=(*SUITES, "all"), required=True)
    p.add_argument("--m-max", type=_nat, default=200)
    p.add_argument("--k-min", type=_nat, default=3)
    p.add_argument("--k-max", type=_nat, default=4)
    p.add_argument("--samples", type=_nat, default=1000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--parts", default="1,2", help="comma-separated parts, e.g. 1 or 1,2")

    p = sub.add_parser("seed", parents=[common], help="the seeds m(r)")
    p.add_argument("--r", type=_nat, required=True)
    p.add_argument("--part", type=int, choices=(1, 2), default=1)
    p.add_argument("--map", choices=("psi", "chi", "xi"), default=None,
                   help="also print the seed's ordinal at k=3")
    return ap


def _emit(args, text: str, obj: dict) -> None:
    print(json.dumps(obj) if args.json else text)


def _check_k(k: int) -> None:
    if k < 3:
        raise UsageError("k must be at least 3")


def cmd_nf(args, cap: int) -> int:
    _check_k(args.k)
    if args.m < 1:
        raise UsageError("normal forms are defined for m >= 1")
    nf = knf(args.m, args.k, args.part, cap, args.ncap)
    index = format_e0(nf.index) if args.part == 2 else str(nf.index)
    _emit(args, str(nf), {"m": str(args.m), "k": args.k, "part": args.part,
                          "nf": {"index": index, "b": str(nf.b), "l": str(nf.l)}})
    return EXIT_OK


def cmd_bc(args, cap: int) -> int:
    _check_k(args.k)
    t = base_change(hereditary(args.m, args.k, args.part, cap, args.ncap), args.k, args.op, cap)
    v = eval_term(t, args.k + 1, cap)
    text = term_str(t, args.k + 1, cap)
    _emit(args, text, {"m": str(args.m), "k": args.k, "op": args.op, "part": args.part,
                       "value": str(v), "term": text})
    return EXIT_OK


def cmd_ord(args, cap: int) -> int:
    _check_k(args.k)
    o = assign(args.map, hereditary(args.m, args.k, args.part, cap, args.ncap), args.k,
               args.part, cap)
    _emit(args, fmt(o), {"m": str(args.m), "k": args.k, "map": args.map, "part": args.part,
                         "ordinal": fmt(o)})
    return EXIT_OK


def cmd_run(args, cap: int) -> int:
    if args.seed_r == 0:
        raise UsageError("--seed-r must be at least 1")
    seed = args.m if args.m is not None else mr_seed(args.seed_r, args.part, cap)
    tr = run(seed, args.variant, args.part, args.max_steps, cap, args.max_term_nodes)
    if args.trace:
        with open(args.trace, "w") as fh:
            fh.write(tr.dumps() + "\n")
    if args.json:
        print(tr.dumps())
    elif args.csv:
        sys.stdout.write(tr.to_csv())
    else:
        for s in tr.steps:
            index, b, l = s.nf
            print(f"l={s.l} k={s.k} m={s.value} nf=({index},{b},{l}) o={s.ordinal} "
                  f"descent={'ok' if s.descent_ok else 'FAIL'}")
        print(f"status {tr.status} at l={tr.length}")
    if not tr.descent_ok:
        return EXIT_COUNTEREXAMPLE
    return EXIT_BUDGET if tr.status == "budget" else EXIT_OK


def cmd_fund(args, cap: int) -> int:
    try:
        if args.system == "e0":
            t = parse_e0(args.term)
            out = format_e0(fund_e0(t, args.x))
        else:
            t = hb.parse_hb(args.term)
            if args.system == "ot" and hb.uses_upsi(t):
                raise UsageError("P(...) belongs to system otp")
            if args.system == "otp" and not hb.in_otp(t):
                raise UsageError("only P(...), W, w and naturals belong to system otp")
            if not hb.is_nf(t):
                raise UsageError(f"{args.term} is not in normal form")
            out = hb.format_hb(hb.fund_hb(t, args.x))
    except (ParseError, hb.MixedSystems) as e:
        raise UsageError(str(e)) from None
    _emit(args, out, {"system": args.system, "term": args.term, "x": args.x, "result": out})
    return EXIT_OK


def cmd_check(args, cap: int) -> int:
    try:
        parts = tuple(int(x) for x in args.parts.split(","))
    except ValueError:
        raise UsageError(f"bad --parts {args.parts!r}") from None
    if not parts or any(x not in (1, 2) for x in parts):
        raise UsageError("--parts takes 1, 2 or 1,2")
    params = Params(m_max=args.m_max, k_min=args.k_min, k_max=args.k_max, samples=args.samples,
                    seed=args.seed, parts=parts, cap_bits=cap, ncap=args.ncap)
    if params.k_min < 3 or params.k_max < params.k_min:
        raise UsageError("need 3 <= k-min <= k-max")
    suites = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(s, params) for s in suites]
    if args.json:
        print(json.dumps([r.to_json() for r in reports], indent=2))
    else:
        for r in reports:
            print(r.summary())
            for c in r.counterexamples:
                print(f"  counterexample: {c}")
    return EXIT_OK if all(r.ok for r in reports) else EXIT_COUNTEREXAMPLE


def cmd_seed(args, cap: int) -> int:
    if args.r < 1:
        raise UsageError("--r must be at least 1")
    t = mr_seed(args.r, args.part, cap)
    text = term_str(t, 3, cap)
    obj = {"r": args.r, "part": args.part, "term": text, "value": str(eval_term(t, 3, cap))}
    if args.map:
        obj["ordinal"] = fmt(assign(args.map, t, 3, args.part, cap))
        text += f" -> {obj['ordinal']}"
    _emit(args, text, obj)
    return EXIT_OK


COMMANDS = {"nf": cmd_nf, "bc": cmd_bc, "ord": cmd_ord, "run": cmd_run, "fund": cmd_fund,
            "check": cmd_check, "seed": cmd_seed}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    try:
        cap = args.max_bits if args.max_bits is not None else _default_bits()
        return COMMANDS[args.cmd](args, cap)
    except UsageError as e:
        print(f"giant-goodstein: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except _BUDGET as e:
        print(f"giant-goodstein: budget: {e}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
