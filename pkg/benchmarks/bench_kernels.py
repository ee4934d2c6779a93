"""Compare the compiled and pure-Python modular kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--json]

Times the scalar determinant, the evaluation/interpolation resultant, and
the end-to-end ``resultant_y`` over Q with each backend forced in turn.
"""

import argparse
import json
import random
import time

from qhdisc import _kernels
from qhdisc._kernels import _pykernels
from qhdisc.polyring import BivarPoly

P = 2147483629


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _cases(rng):
    mat = [[rng.randrange(P) for _ in range(12)] for _ in range(12)]
    fc = [[rng.randrange(P) for _ in range(7)] for _ in range(7)]
    gc = [[rng.randrange(P) for _ in range(7)] for _ in range(7)]
    return mat, fc, gc


def _rand_poly(rng, d):
    return BivarPoly({(i, j): rng.randint(-10, 10) for i in range(d + 1) for j in range(d + 1)})


def _with_backend(mod, fn):
    saved = _kernels._compiled
    _kernels._compiled = mod if mod is not _pykernels else None
    try:
        return fn()
    finally:
        _kernels._compiled = saved


def run(repeat=5):
    from qhdisc.resultants import resultant_y

    rng = random.Random(0)
    mat, fc, gc = _cases(rng)
    f, g = _rand_poly(rng, 6), _rand_poly(rng, 6)
    npts = 6 * 6 + 6 * 6 + 1
    backends = [("python", _pykernels)]
    try:
        backends.insert(0, ("cython", _kernels.backend_module("cython")))
    except ImportError:
        pass
    rows = {}
    for name, mod in backends:
        rows[name] = {
            "det_mod 12x12": _best(lambda: mod.det_mod(mat, P), repeat * 20),
            "resultant_y_mod 6x6, 73 points": _best(lambda: mod.resultant_y_mod(fc, gc, P, npts), repeat),
            "resultant_y over Q, degree 6": _with_backend(mod, lambda: _best(lambda: resultant_y(f, g, "interpolate"), repeat)),
        }
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    a = ap.parse_args()
    rows = run(a.repeat)
    if a.json:
        print(json.dumps(rows, indent=2))
        return
    names = list(rows)
    cases = list(rows[names[0]])
    print(f"{'case':34}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for c in cases:
        line = f"{c:34}" + "".join(f"{rows[n][c] * 1e3:>10.3f}ms" for n in names)
        if len(names) > 1:
            line += f"{rows['python'][c] / rows['cython'][c]:>11.1f}x"
        print(line)


if __name__ == "__main__":
    main()
