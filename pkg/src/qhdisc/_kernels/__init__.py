"""Hot modular kernels with a compiled backend and a pure-Python fallback.

The Cython extension ``_ckernels`` is used when it was built; otherwise (or
when ``QHDISC_PURE_PYTHON=1`` is set) the identical API from ``_pykernels``
is used.  The compiled kernels only accept moduli below 2**31; larger primes
are routed to the Python versions automatically.
"""

import os

from . import _pykernels

_compiled = None
if os.environ.get("QHDISC_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _ckernels as _compiled
    except ImportError:
        _compiled = None

BACKEND = _compiled.BACKEND if _compiled is not None else _pykernels.BACKEND
WORD_PRIME_LIMIT = 2**31


def backend_module(name=None):
    """Return the kernel module for ``name`` ("cython"/"python"/None=active)."""
    if name is None:
        return _compiled or _pykernels
    if name == "python":
        return _pykernels
    if name == "cython":
        if _compiled is None:
            raise ImportError("compiled kernels are not available")
        return _compiled
    raise ValueError(f"unknown backend {name!r}")


def _pick(p):
    if _compiled is not None and p < WORD_PRIME_LIMIT:
        return _compiled
    return _pykernels


def det_mod(rows, p):
    return _pick(p).det_mod(rows, p)


def eval_mod(coeffs, a, p):
    return _pick(p).eval_mod(coeffs, a, p)


def interpolate_mod(xs, ys, p):
    return _pick(p).interpolate_mod(xs, ys, p)


def resultant_y_mod(fc, gc, p, npoints):
    return _pick(p).resultant_y_mod(fc, gc, p, npoints)


def gcd_mod(a, b, p):
    return _pick(p).gcd_mod(a, b, p)


def gcd_degree_at_mod(fc, gc, p, a):
    return _pick(p).gcd_degree_at_mod(fc, gc, p, a)


sample_points = _pykernels.sample_points
