"""Command-line surface.

Subcommands: classify one candidate, search a range of primes for minimal
exponents (JSONL output), print the factor table of GF(3, n), and verify the
classifier against the oracle over a grid.

Exit codes: 0 prime, 1 composite, 2 primover, 3 usage or contract error.
Big integers are serialized as decimal strings; doubles lose them immediately.
"""

import argparse
import json
import os
import sys
import time

from . import gf3, verify
from .classify import DEFAULT_SIEVE_BUDGET, Evidence, ProthCandidate, Verdict, classify
from .oracle import Factorization
from .search import SearchReport, scan

_EXIT_BY_OUTCOME = {"prime": 0, "composite": 1, "primover": 2}
USAGE_ERROR = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad flags; 2 means "primover" here, so remap.
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _workers(value: int | None) -> int:
    if value is not None:
        return value
    env = os.environ.get("THREADS", "")
    if env.isdigit() and int(env) >= 1:
        return int(env)
    return 1


def _phrase(v: Verdict, n: int) -> str:
    if v.evidence is Evidence.DIVISIBLE_BY_THREE:
        return "divisible by 3"
    if v.evidence is Evidence.EULER_WITNESS:
        return "Euler test failed"
    if v.evidence is Evidence.PROTH_BOUND:
        return "Proth bound"
    if v.evidence is Evidence.MAGNITUDE_BOUND:
        return "magnitude bound"
    if v.evidence is Evidence.NON_DIVISOR_OF_GF:
        return f"non-divisor of GF(3,{n - 1})"
    if v.evidence is Evidence.SIEVE_EXHAUSTED:
        return "sieve exhausted below sqrt(R)"
    if v.evidence is Evidence.SIEVE_FACTOR_FOUND:
        return f"factor {v.factor} found"
    return f"divides GF(3,{n - 1}), sieve budget spent"


def _classify_record(c: ProthCandidate, v: Verdict, elapsed_ms: int) -> dict:
    return {
        "p": str(c.p),
        "n": c.n,
        "R": str(c.R),
        "verdict": v.outcome.value,
        "evidence": v.evidence.value,
        "witness": None if v.factor is None else str(v.factor),
        "elapsed_ms": elapsed_ms,
    }


def _cmd_classify(args) -> int:
    c = ProthCandidate(args.p, args.n, attested=args.attested_prime)
    start = time.perf_counter()
    v = classify(c, args.sieve_budget)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    if args.json:
        print(json.dumps(_classify_record(c, v, elapsed_ms), separators=(",", ":")))
    else:
        print(f"{v.outcome.value} ({_phrase(v, c.n)})")
    return _EXIT_BY_OUTCOME[v.outcome.value]


def _report_line(r: SearchReport) -> str:
    obj = {
        "p": str(r.p),
        "n_max": r.n_max,
        "min_n": r.min_n,
        "R_at_min": None if r.R_at_min is None else str(r.R_at_min),
        "survivor": r.survivor,
        "verdicts": [
            {
                "n": e.n,
                "R": str(e.R),
                "verdict": e.verdict,
                "evidence": e.evidence,
                "witness": None if e.witness is None else str(e.witness),
            }
            for e in r.verdicts
        ],
    }
    return json.dumps(obj, separators=(",", ":"))


def _cmd_search(args) -> int:
    reports = scan(
        args.p_min,
        args.p_max,
        args.n_max,
        sieve_budget=args.sieve_budget,
        workers=_workers(args.workers),
        accept_primover=args.accept_primover,
    )
    lines = "".join(_report_line(r) + "\n" for r in reports)
    if args.out is None:
        sys.stdout.write(lines)
    else:
        with open(args.out, "w") as fh:
            fh.write(lines)
        print(f"wrote {len(reports)} reports to {args.out}")
    return 0


def _factor_str(fact: Factorization) -> str:
    parts = [p if e == 1 else f"{p}^{e}" for p, e in fact.prime_factors]
    return " · ".join(str(x) for x in parts)


def _cmd_gf3(args) -> int:
    fact = gf3.factor_gf3(args.n)
    odd_forms = [
        (p, gf3.form_of(p, args.n)) for p, _ in fact.prime_factors if p % 2 == 1
    ]
    if args.json:
        obj = {
            "n": args.n,
            "gf": str(fact.target),
            "factors": [
                {"prime": str(p), "multiplicity": e} for p, e in fact.prime_factors
            ],
            "forms": [
                {
                    "factor": str(p),
                    "kind": None if form is None else form.kind,
                    "witness": None if form is None else form.witness,
                }
                for p, form in odd_forms
            ],
            "complete": fact.complete,
        }
        print(json.dumps(obj, separators=(",", ":")))
    else:
        pieces = [f"{fact.target} = {_factor_str(fact)}"]
        for p, form in odd_forms:
            if form is None:
                pieces.append(f"{p} = no form")
            elif form.kind == "A":
                pieces.append(f"{p} = FormA(k={form.witness})")
            else:
                pieces.append(f"{p} = FormB(m={form.witness})")
        print("; ".join(pieces))
    return 0


def _cmd_verify(args) -> int:
    summary = verify.replay(args.p_max, args.n_max, workers=_workers(args.workers))
    print(f"candidates tested: {summary.candidates}")
    print(f"oracle primes: {summary.oracle_primes}")
    print(f"oracle composites: {summary.oracle_composites}")
    print(f"primover verdicts: {summary.primover_verdicts}")
    print(f"euler-passing composites: {summary.euler_passing_composites}")
    print(f"discrepancies: {len(summary.discrepancies)}")
    for d in summary.discrepancies:
        print(f"  {d}")
    return 0 if not summary.discrepancies else 1


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="proth3",
        description=(
            "Classify R = p*2^n + 1 with a single base-3 Euler exponentiation, "
            "search minimal exponents, and factor GF(3, n) = 3^(2^n) + 1."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("classify", help="classify one candidate R = p*2^n + 1")
    c.add_argument("--p", type=int, required=True, help="odd prime multiplier")
    c.add_argument("--n", type=int, required=True, help="power-of-two exponent, >= 2")
    c.add_argument("--sieve-budget", type=int, default=DEFAULT_SIEVE_BUDGET)
    c.add_argument("--json", action="store_true", help="one JSON object instead of text")
    c.add_argument(
        "--attested-prime",
        action="store_true",
        help="accept p beyond the oracle's exact range as prime on your word",
    )
    c.set_defaults(func=_cmd_classify)

    s = sub.add_parser("search", help="minimal prime exponent for each p in a range")
    s.add_argument("--p-min", type=int, required=True)
    s.add_argument("--p-max", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--sieve-budget", type=int, default=DEFAULT_SIEVE_BUDGET)
    s.add_argument("--workers", type=int, default=None, help="default $THREADS or 1")
    s.add_argument("--out", default=None, help="JSONL path (default: stdout)")
    s.add_argument(
        "--accept-primover",
        action="store_true",
        help="treat primover (probable prime) as terminal; exploratory only",
    )
    s.set_defaults(func=_cmd_search)

    g = sub.add_parser("gf3", help="factor table and divisor forms for GF(3, n)")
    g.add_argument("--n", type=int, required=True, help=f"1 <= n <= {gf3.DEFAULT_CAP}")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=_cmd_gf3)

    v = sub.add_parser("verify", help="replay the classifier against the oracle")
    v.add_argument("--p-max", type=int, required=True)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--workers", type=int, default=None, help="default $THREADS or 1")
    v.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
