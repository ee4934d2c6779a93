"""Command-line front end: ``qhdisc <subcommand> ...``.

Exit codes: 0 success, 1 usage error or input outside an operation's
domain, 2 verdict disagreement over Q or an internal inconsistency.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import charp
from .branches import branch_exponents_at_origin, puiseux_branches
from .homog import multi_homogenize
from .laurent import laurent_decompose
from .newton import find_qh_type
from .polyring import PolySyntaxError, field_from_json, parse_poly
from .resultants import InexactDivisionError, discriminant_y
from .theoremlab import (
    TheoremAgreementError,
    append_corpus,
    check_theorem,
    fuzz,
    make_record,
)

EXIT_OK, EXIT_USAGE, EXIT_FAILURE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _field(text):
    try:
        return field_from_json(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _p_range(text):
    try:
        a, b = text.split("..")
        a, b = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if a > b:
        raise argparse.ArgumentTypeError("empty prime range")
    return a, b


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="qhdisc", description="Decide quasi-homogeneity, discriminant monomiality and the projective common-zero condition.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def poly_cmd(name, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("poly", help='polynomial in x, y, e.g. "y^2 - x^3"')
        p.add_argument("--field", type=_field, default="q", help="q (rationals) or fp:<p>")
        return p

    p = poly_cmd("analyze", "full verdict report")
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.add_argument("--algo", choices=("auto", "bareiss", "interpolate"), default="auto")
    p = poly_cmd("disc", "discriminant in y")
    p.add_argument("--algo", choices=("auto", "bareiss", "interpolate"), default="auto")
    poly_cmd("homogenize", "multi-homogenization in P^1 x P^1")
    poly_cmd("decompose", "normal form of a quasi-homogeneous polynomial")
    p = poly_cmd("branches", "branch exponents at the origin and h-limits")
    p.add_argument("--ramify", type=int, default=None, metavar="N")
    p.add_argument("--order", type=int, default=None, metavar="K")

    p = sub.add_parser("fuzz", help="random equivalence sweep over Q")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--height", type=int, default=10)
    p.add_argument("--corpus", default=None, help="JSONL file receiving failures")
    p.add_argument("--record-all", action="store_true", help="append every report, not only failures")

    p = sub.add_parser("charp", help="counterexample search over GF(p)")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--p", type=int, default=None)
    g.add_argument("--p-range", type=_p_range, default=None, metavar="A..B")
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--corpus", default=None)
    p.add_argument("--json", action="store_true")
    p.add_argument("--show", type=int, default=5, help="counterexamples to print per prime")
    return ap


def _print_report(r):
    print(f"input      {r.input}")
    print(f"canonical  {r.canonical}   over {r.field}, degrees {tuple(r.degrees)}")
    print("preconditions  " + ", ".join(f"{k}={v}" for k, v in r.preconditions.items()))
    t = r.verdict_A["type"]
    print(f"(A) {r.verdict_A['holds']}" + (f"  type ({t[0]}; {t[1]}, {t[2]})" if t else ""))
    b = r.verdict_B
    print(f"(B) {b['holds']}  f0 = {b['f0']}, fn = {b['fn']}, disc = {b['disc']}" + (f"  [{'; '.join(b['flags'])}]" if b["flags"] else ""))
    c = r.verdict_C
    w = c["witness"]
    print(f"(C) {c['holds']}" + (f"  witness {w['kind']}: {w['factor']}" if w else ""))
    print(f"agreement  {r.agreement}")


def cmd_analyze(a):
    f = parse_poly(a.poly, field=a.field)
    if f.is_zero():
        raise UsageError("the zero polynomial has no verdicts")
    try:
        r = check_theorem(f, a.poly, a.algo)
        code = EXIT_OK
    except TheoremAgreementError as exc:
        r, code = exc.report, EXIT_FAILURE
    if a.json:
        print(r.to_json(indent=2))
    else:
        _print_report(r)
    return code


def cmd_disc(a):
    f = parse_poly(a.poly, field=a.field)
    try:
        print(discriminant_y(f, a.algo))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


def cmd_homogenize(a):
    f = parse_poly(a.poly, field=a.field)
    if f.is_zero():
        raise UsageError("cannot homogenize the zero polynomial")
    F = multi_homogenize(f)
    print(f"bidegree {F.bidegree}: {F}")
    return EXIT_OK


def cmd_decompose(a):
    f = parse_poly(a.poly, field=a.field)
    if f.is_zero():
        raise UsageError("cannot decompose the zero polynomial")
    t = find_qh_type(f)
    if t is None or t.alpha == 0:
        print("not quasi-homogeneous with nonzero weight of x", file=sys.stderr)
        return EXIT_USAGE
    L = laurent_decompose(f, t)
    print(f"type {t}")
    print(f"scale {L.scale}, k0 = {L.k0}, l0 = {L.ell0}, k' = {L.k_prime}")
    print(f"g(z) = {L.g}")
    return EXIT_OK


def cmd_branches(a):
    f = parse_poly(a.poly, field=a.field)
    try:
        exps = branch_exponents_at_origin(f)
        reports = puiseux_branches(f, a.ramify, a.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print("exponents  " + ", ".join(str(e) for e in exps))
    bad = False
    for r in reports:
        if r.series is None:
            print(f"M = {r.exponent}  seed {r.seed}: {r.note}")
            continue
        ok = r.limit == r.expected and r.limit != 0 and r.residual_ok
        bad |= not ok
        print(f"M = {r.exponent}  seed {r.seed}: s = {r.series}")
        print(f"    h-limit {r.limit} (expected {r.expected}){'' if ok else '  MISMATCH'}")
    return EXIT_FAILURE if bad else EXIT_OK


def cmd_fuzz(a):
    failures = 0
    records = []
    for params, res in fuzz(a.count, a.seed, a.degree, a.height):
        if isinstance(res, TheoremAgreementError):
            failures += 1
            print(f"DISAGREEMENT {res.report.canonical}", file=sys.stderr)
            records.append(make_record(res.report, params, "failure"))
        elif a.record_all:
            records.append(make_record(res, params))
    if a.corpus and records:
        append_corpus(a.corpus, records)
    print(f"{a.count} instances, {failures} disagreements")
    return EXIT_FAILURE if failures else EXIT_OK


def cmd_charp(a):
    from .polyring import is_prime

    if a.p_range:
        primes = [q for q in range(a.p_range[0], a.p_range[1] + 1) if is_prime(q)]
    else:
        primes = [a.p if a.p is not None else 2]
    if not primes or any(not is_prime(q) for q in primes):
        raise UsageError("need at least one prime")
    summaries, out, total = [], [], 0
    for q in primes:
        try:
            cfg = charp.CharPExperimentConfig(q, a.degree, a.count, a.seed)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        found, s = charp.search_counterexamples(cfg, a.exhaustive)
        summaries.append(s)
        total += len(found)
        out.append({"summary": s.to_json(), "counterexamples": [c.to_json() for c in found]})
        if a.corpus and found:
            append_corpus(a.corpus, [_charp_record(c, cfg, a.exhaustive) for c in found])
        if not a.json:
            print(f"p = {q}, d = {a.degree}: {s.accepted}/{s.sampled} valid, {s.counterexamples} counterexamples")
            for c in found[: a.show]:
                v = "".join(k if b else k.lower() for k, b in zip(charp.LABELS, c.verdicts))
                print(f"    {c.to_json()['poly']}  [{v}] fails {', '.join(c.failed)}")
    largest = charp.largest_failing_prime(summaries)
    if a.json:
        print(json.dumps({"cells": out, "largest_failing_prime": largest}, indent=2))
    else:
        print(f"total counterexamples {total}; largest failing prime per d: {largest or 'none'}")
    return EXIT_OK


def _charp_record(c, cfg, exhaustive):
    report = check_theorem(c.poly, strict=False)
    params = {"p": cfg.p, "d": cfg.d, "samples": cfg.samples, "seed": cfg.seed, "exhaustive": exhaustive}
    return make_record(report, params, "charp-counterexample")


COMMANDS = {
    "analyze": cmd_analyze,
    "disc": cmd_disc,
    "homogenize": cmd_homogenize,
    "decompose": cmd_decompose,
    "branches": cmd_branches,
    "fuzz": cmd_fuzz,
    "charp": cmd_charp,
}


def main(argv=None) -> int:
    ap = build_parser()
    try:
        a = ap.parse_args(argv)
        return COMMANDS[a.command](a)
    except UsageError as exc:
        print(f"qhdisc: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PolySyntaxError as exc:
        print(f"qhdisc: syntax error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InexactDivisionError, ArithmeticError, AssertionError) as exc:
        print(f"qhdisc: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
