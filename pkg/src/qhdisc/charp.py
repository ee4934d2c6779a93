"""The three condition checkers over GF(p) and a counterexample search.

Verdicts over GF(p) are geometric: reducedness over GF(p) equals reducedness
over its algebraic closure (GF(p) is perfect), and "no root in the
multiplicative group of the closure" is read off symbolically as "the
x-stripped polynomial is constant".
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field as dc_field

from .homog import condition_C
from .newton import condition_A
from .polyring import GF, BivarPoly, format_poly, is_prime, is_reduced
from .resultants import condition_B, resultant_y

LABELS = ("A", "B", "C")


class PreconditionError(ValueError):
    """Input is zero, not geometrically reduced, or has f_0 = 0 or f_n = 0."""


@dataclass(frozen=True)
class CharPExperimentConfig:
    p: int
    d: int
    samples: int = 500
    seed: int = 0
    density: float | None = None

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.d < 1:
            raise ValueError("degree bound must be at least 1")
        if self.samples < 1:
            raise ValueError("sample count must be at least 1")
        if self.density is not None and not 0 < self.density <= 1:
            raise ValueError("density must lie in (0, 1]")


@dataclass(frozen=True)
class Counterexample:
    poly: BivarPoly
    verdicts: tuple
    failed: tuple
    flags: tuple = ()

    def to_json(self) -> dict:
        return {
            "poly": format_poly(self.poly),
            "field": self.poly.field.to_json(),
            "verdicts": dict(zip(LABELS, self.verdicts)),
            "failed_implications": list(self.failed),
            "flags": list(self.flags),
        }


def failed_implications(verdicts) -> tuple:
    """All "X=>Y" with X true and Y false."""
    out = []
    for (a, va), (b, vb) in itertools.permutations(zip(LABELS, verdicts), 2):
        if va and not vb:
            out.append(f"{a}=>{b}")
    return tuple(out)


def check_preconditions(f: BivarPoly):
    """Reason string for the first failed precondition, or None."""
    if f.is_zero():
        return "zero polynomial"
    cols = f.coefficients_in_y()
    if cols[0].is_zero():
        return "f_0 = 0"
    if cols[-1].is_zero():
        return "f_n = 0"
    if not is_reduced(f):
        return "not geometrically reduced"
    return None


def check_conditions_mod_p(f: BivarPoly):
    """(A, B, C, flags) for f over GF(p)."""
    if f.characteristic == 0:
        raise ValueError("check_conditions_mod_p needs a polynomial over GF(p)")
    reason = check_preconditions(f)
    if reason:
        raise PreconditionError(reason)
    a, _ = condition_A(f)
    b, wb = condition_B(f)
    c, wc = condition_C(f)
    flags = list(wb.flags)
    if wc is not None and wc.factor.is_zero():
        flags.append("common points over every abscissa")
    return a, b, c, tuple(flags)


# -- sampling -----------------------------------------------------------------


def _monomials(d):
    return [(i, j) for i in range(d + 1) for j in range(d + 1 - i)]


def trial_rng(seed, p, d, trial) -> random.Random:
    """Independent stream per trial, so trials can run in any order."""
    return random.Random(f"charp:{seed}:{p}:{d}:{trial}")


def random_poly_mod_p(rng: random.Random, p: int, d: int, density=None) -> BivarPoly:
    """Total degree <= d, each monomial present with probability ``density``
    (drawn per trial when None), coefficients uniform in GF(p)^x."""
    dens = density if density is not None else rng.uniform(0.2, 0.9)
    terms = {}
    for m in _monomials(d):
        if rng.random() < dens:
            terms[m] = rng.randrange(1, p)
    return BivarPoly(terms, GF(p))


def _all_polys(p, d):
    mons = _monomials(d)
    for coeffs in itertools.product(range(p), repeat=len(mons)):
        yield BivarPoly({m: c for m, c in zip(mons, coeffs) if c}, GF(p))


@dataclass
class SearchSummary:
    p: int
    d: int
    sampled: int = 0
    accepted: int = 0
    rejected: dict = dc_field(default_factory=dict)
    counterexamples: int = 0

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "d": self.d,
            "sampled": self.sampled,
            "accepted": self.accepted,
            "rejected": dict(sorted(self.rejected.items())),
            "counterexamples": self.counterexamples,
        }


def _examine(f, summary, found):
    summary.sampled += 1
    reason = check_preconditions(f)
    if reason:
        summary.rejected[reason] = summary.rejected.get(reason, 0) + 1
        return
    summary.accepted += 1
    a, b, c, flags = check_conditions_mod_p(f)
    if not a == b == c:
        summary.counterexamples += 1
        found.append(Counterexample(f, (a, b, c), failed_implications((a, b, c)), flags))


def search_counterexamples(cfg: CharPExperimentConfig, exhaustive: bool = False):
    """(counterexamples, summary) for polynomials of total degree <= d over GF(p).

    ``exhaustive`` enumerates every polynomial (p^((d+1)(d+2)/2) of them) and
    ignores the sample count and seed.
    """
    summary = SearchSummary(cfg.p, cfg.d)
    found = []
    if exhaustive:
        for f in _all_polys(cfg.p, cfg.d):
            _examine(f, summary, found)
    else:
        for trial in range(cfg.samples):
            rng = trial_rng(cfg.seed, cfg.p, cfg.d, trial)
            _examine(random_poly_mod_p(rng, cfg.p, cfg.d, cfg.density), summary, found)
    return found, summary


def largest_failing_prime(summaries) -> dict:
    """d -> largest p with a counterexample (the empirical shadow of N_d)."""
    out = {}
    for s in summaries:
        if s.counterexamples:
            out[s.d] = max(out.get(s.d, 0), s.p)
    return out


# -- reduction compatibility ------------------------------------------------------


def reduction_bound(f: BivarPoly) -> int:
    """Primes above this keep the support of f, f_0, f_n, Res_y(f, f_y) and
    Disc_y(f) unchanged, so the verdicts mod p equal those over Q.

    f must have integer coefficients.
    """
    if f.characteristic:
        raise ValueError("reduction_bound needs a polynomial over Q")
    if any(int(c) != c for _, c in f.items()):
        raise ValueError("reduction_bound needs integer coefficients")
    bound = max(abs(c) for _, c in f.items())
    n = f.deg_y
    bound = max(bound, n)
    if n >= 1:
        res = resultant_y(f, f.derivative("y"), degrees=(n, n - 1))
        fn = f.coefficients_in_y()[-1]
        disc, _ = res.divmod(fn)
        for u in (res, disc):
            if not u.is_zero():
                bound = max(bound, max(abs(c) for c in u.coeffs))
    return bound
