"""Verdict engine for the equivalence (A) <=> (B) <=> (C), random instance
generators, and the JSONL corpus."""

from __future__ import annotations

import json
import random
import time
from dataclasses import asdict, dataclass, field as dc_field
from math import gcd

from .homog import condition_C
from .newton import condition_A
from .polyring import QQ, BivarPoly, UniPoly, format_poly, is_reduced, parse_poly
from .resultants import condition_B

REPORT_VERSION = 1


class TheoremAgreementError(AssertionError):
    """The three verdicts disagree on a valid input over Q."""

    def __init__(self, report):
        super().__init__(f"verdicts disagree for {report.canonical}")
        self.report = report


class GenerationBudgetError(RuntimeError):
    """Rejection sampling gave up; the requirements are too restrictive."""


# -- reports ---------------------------------------------------------------------


@dataclass
class TheoremReport:
    input: str
    canonical: str
    field: str
    degrees: tuple
    support: list
    preconditions: dict
    verdict_A: dict
    verdict_B: dict
    verdict_C: dict
    agreement: bool
    timings: dict = dc_field(default_factory=dict, compare=False)

    @property
    def preconditions_hold(self) -> bool:
        return all(self.preconditions.values())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["degrees"] = list(self.degrees)
        d["support"] = [list(p) for p in self.support]
        d["version"] = REPORT_VERSION
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, **kw)

    @classmethod
    def from_dict(cls, d: dict) -> "TheoremReport":
        d = dict(d)
        d.pop("version", None)
        d["degrees"] = tuple(d["degrees"])
        d["support"] = [tuple(p) for p in d["support"]]
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "TheoremReport":
        return cls.from_dict(json.loads(text))


def _poly_str(u):
    return None if u is None else str(u)


def check_theorem(f: BivarPoly, text: str | None = None, algo: str = "auto", strict: bool = True) -> TheoremReport:
    """Run the precondition checks and the three independent checkers.

    Over Q with all preconditions met, disagreement raises
    :class:`TheoremAgreementError` unless ``strict`` is False.
    """
    if f.is_zero():
        raise ValueError("check_theorem of the zero polynomial")
    timings = {}

    def timed(key, fn, *args):
        t0 = time.perf_counter()
        out = fn(*args)
        timings[key] = time.perf_counter() - t0
        return out

    cols = f.coefficients_in_y()
    pre = {
        "reduced": timed("reduced", is_reduced, f),
        "f0_nonzero": not cols[0].is_zero(),
        "fn_nonzero": not cols[-1].is_zero(),
    }
    a, t = timed("A", condition_A, f)
    vA = {"holds": a, "type": None if t is None else list(t.as_tuple())}
    if pre["f0_nonzero"] and pre["fn_nonzero"]:
        b, wb = timed("B", condition_B, f, algo)
        vB = {"holds": b, "f0": str(wb.f0), "fn": str(wb.fn), "disc": str(wb.disc), "flags": list(wb.flags)}
        c, wc = timed("C", condition_C, f, algo)
        vC = {"holds": c, "witness": None if wc is None else {"kind": wc.kind, "factor": _poly_str(wc.factor)}}
    else:
        vB = {"holds": None, "f0": str(cols[0]), "fn": str(cols[-1]), "disc": None, "flags": ["undefined: f_0 or f_n is zero"]}
        vC = {"holds": None, "witness": None}
    verdicts = (vA["holds"], vB["holds"], vC["holds"])
    agreement = None not in verdicts and verdicts[0] == verdicts[1] == verdicts[2]
    report = TheoremReport(
        input=text if text is not None else format_poly(f),
        canonical=format_poly(f),
        field=f.field.to_json(),
        degrees=(f.deg_x, f.deg_y),
        support=sorted(f.support()),
        preconditions=pre,
        verdict_A=vA,
        verdict_B=vB,
        verdict_C=vC,
        agreement=agreement,
        timings=timings,
    )
    if strict and f.characteristic == 0 and report.preconditions_hold and not agreement:
        raise TheoremAgreementError(report)
    return report


def analyze_text(text: str, field=QQ, algo: str = "auto", strict: bool = True) -> TheoremReport:
    return check_theorem(parse_poly(text, field=field), text, algo, strict)


# -- corpus ------------------------------------------------------------------------

VOLATILE_KEYS = ("timestamp", "timings")


@dataclass
class CorpusRecord:
    report: TheoremReport
    seed: int | None = None
    params: dict = dc_field(default_factory=dict)
    timestamp: float | None = None
    kind: str = "theorem"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "seed": self.seed,
            "params": self.params,
            "timestamp": self.timestamp,
            "report": self.report.to_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "CorpusRecord":
        return cls(TheoremReport.from_dict(d["report"]), d.get("seed"), d.get("params", {}), d.get("timestamp"), d.get("kind", "theorem"))

    @classmethod
    def from_json(cls, text: str) -> "CorpusRecord":
        return cls.from_dict(json.loads(text))


def stable_view(record_json: str) -> str:
    """Record text with the wall-clock fields removed, for determinism checks."""
    d = json.loads(record_json)
    d.pop("timestamp", None)
    d.get("report", {}).pop("timings", None)
    return json.dumps(d, sort_keys=True)


def append_corpus(path, records) -> int:
    """Append records as JSON lines; returns how many were written."""
    n = 0
    with open(path, "a", encoding="utf-8") as fh:
        for r in records:
            fh.write(r.to_json() + "\n")
            n += 1
        fh.flush()
    return n


def load_corpus(path) -> list:
    out = []
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(CorpusRecord.from_json(line))
    return out


# -- generators -------------------------------------------------------------------


@dataclass(frozen=True)
class RandomParams:
    degree: int = 4
    density: float | None = None
    height: int = 10
    seed: int = 0
    require_reduced: bool = True
    require_f0: bool = True
    require_fn: bool = True
    field: object = QQ
    budget: int = 1000
    force_square: bool = False

    def to_json(self) -> dict:
        d = asdict(self)
        d["field"] = self.field.to_json()
        return d


def _random_candidate(rng, p: RandomParams) -> BivarPoly:
    dx = rng.randint(0, p.degree)
    dy = rng.randint(1, p.degree)
    dens = p.density if p.density is not None else rng.uniform(0.15, 0.9)
    F = p.field
    terms = {}
    for i in range(dx + 1):
        for j in range(dy + 1):
            if rng.random() < dens:
                c = 0
                while c == 0 or F(c) == 0:
                    c = rng.randint(-p.height, p.height)
                terms[(i, j)] = F(c)
    # force the required end columns to be present
    if p.require_f0 and not any(j == 0 for _, j in terms):
        terms[(rng.randint(0, dx), 0)] = F(rng.choice([-1, 1]) * rng.randint(1, p.height))
    if p.require_fn and not any(j == dy for _, j in terms):
        terms[(rng.randint(0, dx), dy)] = F(rng.choice([-1, 1]) * rng.randint(1, p.height))
    return BivarPoly(terms, F)


def generate_random(params: RandomParams, stats: dict | None = None) -> BivarPoly:
    """Rejection-sample a polynomial with deg_x, deg_y <= params.degree.

    Deterministic in ``params``.  Rejection counts by reason go into ``stats``.
    ``force_square`` squares every candidate (a self-test of the filter).
    """
    rng = random.Random(f"random:{params.seed}:{params.degree}:{params.height}:{params.density}")
    stats = stats if stats is not None else {}
    for _ in range(params.budget):
        f = _random_candidate(rng, params)
        if params.force_square:
            f = f * f
        reason = None
        if f.is_zero():
            reason = "zero"
        else:
            cols = f.coefficients_in_y()
            if params.require_f0 and cols[0].is_zero():
                reason = "f0"
            elif params.require_fn and cols[-1].is_zero():
                reason = "fn"
            elif params.require_reduced and not is_reduced(f):
                reason = "reduced"
        if reason is None:
            stats["accepted"] = stats.get("accepted", 0) + 1
            return f
        stats[reason] = stats.get(reason, 0) + 1
    raise GenerationBudgetError(f"no acceptable polynomial in {params.budget} attempts: {stats}")


@dataclass(frozen=True)
class QHParams:
    alpha: int | None = None
    beta: int | None = None
    g: tuple | None = None
    g_degree: int = 2
    squarefree: bool = True
    k: int = 0
    ell: int = 0
    seed: int = 0
    height: int = 5
    max_weight: int = 3
    scale: object = 1


def _random_type(rng, max_weight):
    while True:
        a = rng.randint(1, max_weight)
        b = rng.randint(-max_weight, max_weight)
        if gcd(a, abs(b)) == 1:
            return a, b


def _random_unipoly(rng, deg, height, F):
    while True:
        coeffs = [F(rng.randint(-height, height)) for _ in range(deg + 1)]
        if coeffs[0] != 0 and coeffs[-1] != 0:
            return UniPoly(coeffs, F, "z")


def _random_g(rng, params: QHParams, F):
    if not params.squarefree:
        h = _random_unipoly(rng, max(1, params.g_degree // 2), params.height, F)
        return h * h
    while True:
        g = _random_unipoly(rng, params.g_degree, params.height, F)
        if g.is_squarefree():
            return g


def generate_qh(params: QHParams, field=QQ) -> BivarPoly:
    """scale * x^k * y^ell * (polynomial form of g(x^-beta y^alpha)).

    For beta > 0 the polynomial form multiplies by x^(beta*deg g), so k is
    the x-exponent of the product form in both cases.
    """
    rng = random.Random(f"qh:{params.seed}")
    if params.alpha is None:
        alpha, beta = _random_type(rng, params.max_weight)
    else:
        alpha, beta = params.alpha, params.beta if params.beta is not None else 0
    if alpha < 1 or gcd(alpha, abs(beta)) != 1:
        raise ValueError(f"invalid type weights alpha={alpha}, beta={beta}")
    if params.k < 0 or params.ell < 0:
        raise ValueError("k and ell must be nonnegative")
    if params.g is not None:
        g = UniPoly(list(params.g), field, "z")
        if g.is_zero() or g.coeffs[0] == 0:
            raise ValueError("g must satisfy g(0) != 0")
    else:
        g = _random_g(rng, params, field)
    d = g.degree
    terms = {}
    scale = field(params.scale)
    for m, c in g.terms():
        i = params.k + (beta * (d - m) if beta > 0 else -beta * m)
        terms[(i, params.ell + alpha * m)] = scale * c
    return BivarPoly(terms, field)


# -- fuzzing ------------------------------------------------------------------------


def fuzz(count: int, seed: int = 0, degree: int = 6, height: int = 10, algo: str = "auto"):
    """Yield (params, report or error) for ``count`` random valid instances."""
    for trial in range(count):
        p = RandomParams(degree=degree, height=height, seed=seed * 1_000_003 + trial)
        f = generate_random(p)
        try:
            yield p, check_theorem(f, algo=algo)
        except TheoremAgreementError as exc:
            yield p, exc


def make_record(report: TheoremReport, params=None, kind="theorem", now=None) -> CorpusRecord:
    pj = params.to_json() if hasattr(params, "to_json") else dict(params or {})
    return CorpusRecord(report, pj.get("seed"), pj, time.time() if now is None else now, kind)


__all__ = [
    "CorpusRecord",
    "GenerationBudgetError",
    "QHParams",
    "RandomParams",
    "TheoremAgreementError",
    "TheoremReport",
    "analyze_text",
    "append_corpus",
    "check_theorem",
    "fuzz",
    "generate_qh",
    "generate_random",
    "load_corpus",
    "make_record",
    "stable_view",
]
