# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled modular kernels; same API as ``_pykernels``.

Moduli must be primes below 2**31 so every product fits in a signed 64-bit
integer.
"""

from libc.stdlib cimport malloc, free

ctypedef long long i64

BACKEND = "cython"


cdef inline i64 _md(i64 a, i64 p) nogil:
    a %= p
    return a + p if a < 0 else a


cdef i64 _powmod(i64 b, i64 e, i64 p) nogil:
    cdef i64 r = 1
    b = _md(b, p)
    while e > 0:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


cdef i64 _det(i64* a, int n, i64 p) nogil:
    """In-place determinant of the n x n row-major matrix ``a``."""
    cdef int c, r, k, piv
    cdef i64 det = 1, inv, f, tmp
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if a[r * n + c] != 0:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != c:
            for k in range(n):
                tmp = a[c * n + k]
                a[c * n + k] = a[piv * n + k]
                a[piv * n + k] = tmp
            det = p - det if det else 0
        det = det * a[c * n + c] % p
        inv = _powmod(a[c * n + c], p - 2, p)
        for r in range(c + 1, n):
            f = a[r * n + c] * inv % p
            if f:
                for k in range(c, n):
                    a[r * n + k] = _md(a[r * n + k] - f * a[c * n + k], p)
    return det


cdef i64 _eval(i64* c, int len_, i64 x, i64 p) nogil:
    cdef i64 acc = 0
    cdef int k
    for k in range(len_ - 1, -1, -1):
        acc = (acc * x + c[k]) % p
    return acc


def _check_p(p):
    if not (2 <= p < 2 ** 31):
        raise ValueError("modulus must lie in [2, 2**31)")


def det_mod(rows, p):
    _check_p(p)
    cdef int n = len(rows)
    if n == 0:
        return 1
    cdef i64* a = <i64*> malloc(n * n * sizeof(i64))
    cdef int i, j
    cdef i64 pp = p
    try:
        for i in range(n):
            row = rows[i]
            for j in range(n):
                a[i * n + j] = _md(row[j] % p, pp)
        return _det(a, n, pp)
    finally:
        free(a)


def eval_mod(coeffs, a, p):
    _check_p(p)
    cdef i64 acc = 0
    cdef i64 pp = p
    cdef i64 x = a % p
    for c in reversed(coeffs):
        acc = (acc * x + (c % pp)) % pp
    return acc


cdef void _interp(i64* xs, i64* dd, i64* out, int n, i64 p) nogil:
    cdef int i, j, k
    cdef i64 num, den, xk
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = _md(dd[i] - dd[i - 1], p)
            den = _md(xs[i] - xs[i - j], p)
            dd[i] = num * _powmod(den, p - 2, p) % p
    for i in range(n):
        out[i] = 0
    for k in range(n - 1, -1, -1):
        xk = xs[k]
        for i in range(n - 1, 0, -1):
            out[i] = _md(out[i - 1] - xk * out[i] % p, p)
        out[0] = _md(dd[k] - xk * out[0] % p, p)


def interpolate_mod(xs, ys, p):
    _check_p(p)
    cdef int n = len(xs)
    cdef i64* bx = <i64*> malloc(3 * n * sizeof(i64) + 8)
    cdef i64* dd = bx + n
    cdef i64* out = bx + 2 * n
    cdef int i
    try:
        for i in range(n):
            bx[i] = xs[i] % p
            dd[i] = ys[i] % p
        _interp(bx, dd, out, n, p)
        return [out[i] for i in range(n)]
    finally:
        free(bx)


def sample_points(count, p):
    if count > p:
        raise ValueError(f"only {p} distinct points modulo {p}")
    pts = []
    k = 0
    while len(pts) < count:
        if k == 0:
            pts.append(0)
        else:
            pts.append(k % p)
            if len(pts) < count:
                pts.append(-k % p)
        k += 1
    return pts


cdef i64* _flatten(list cols, int* width, i64 p) except NULL:
    """Pack a list of coefficient lists into a (len(cols) x width) block."""
    cdef int m = len(cols), w = 1, i, j
    for u in cols:
        if len(u) > w:
            w = len(u)
    cdef i64* buf = <i64*> malloc(m * w * sizeof(i64) + 8)
    for i in range(m):
        u = cols[i]
        for j in range(w):
            buf[i * w + j] = _md(u[j] % p, p) if j < len(u) else 0
    width[0] = w
    return buf


def resultant_y_mod(fc, gc, p, npoints):
    _check_p(p)
    if npoints > p:
        raise ValueError("not enough distinct evaluation points modulo p")
    cdef int m = len(fc) - 1, n = len(gc) - 1
    cdef int size = m + n, npts = npoints
    cdef int wf, wg, r, k, t
    cdef i64 pp = p
    cdef i64* F = _flatten(list(fc), &wf, pp)
    cdef i64* G = _flatten(list(gc), &wg, pp)
    cdef i64* fv = <i64*> malloc((m + 1) * sizeof(i64))
    cdef i64* gv = <i64*> malloc((n + 1) * sizeof(i64))
    cdef i64* mat = <i64*> malloc((size * size + 1) * sizeof(i64))
    cdef i64* xs = <i64*> malloc(3 * npts * sizeof(i64) + 8)
    cdef i64* ys = xs + npts
    cdef i64* out = xs + 2 * npts
    pts = sample_points(npoints, p)
    for t in range(npts):
        xs[t] = pts[t]
    try:
        with nogil:
            for t in range(npts):
                for k in range(m + 1):
                    fv[k] = _eval(F + k * wf, wf, xs[t], pp)
                for k in range(n + 1):
                    gv[k] = _eval(G + k * wg, wg, xs[t], pp)
                for k in range(size * size):
                    mat[k] = 0
                for r in range(n):
                    for k in range(m + 1):
                        mat[r * size + r + k] = fv[m - k]
                for r in range(m):
                    for k in range(n + 1):
                        mat[(n + r) * size + r + k] = gv[n - k]
                ys[t] = _det(mat, size, pp) if size > 0 else 1
            _interp(xs, ys, out, npts, pp)
        return [out[t] for t in range(npts)]
    finally:
        free(F)
        free(G)
        free(fv)
        free(gv)
        free(mat)
        free(xs)


cdef int _polymod_inplace(i64* a, int la, i64* b, int lb, i64 p) nogil:
    """a := a mod b; returns the new length (trailing zeros stripped)."""
    cdef int db = lb - 1, shift, t
    cdef i64 inv = _powmod(b[db], p - 2, p), q
    while la - 1 >= db and la > 0:
        q = a[la - 1] * inv % p
        shift = la - 1 - db
        if q:
            for t in range(db + 1):
                a[shift + t] = _md(a[shift + t] - q * b[t], p)
        la -= 1
        while la > 0 and a[la - 1] == 0:
            la -= 1
    return la


cdef int _gcd_inplace(i64* a, int la, i64* b, int lb, i64 p, i64** res) nogil:
    cdef i64* tmp
    cdef int tl
    while la > 0 and a[la - 1] == 0:
        la -= 1
    while lb > 0 and b[lb - 1] == 0:
        lb -= 1
    while lb > 0:
        la = _polymod_inplace(a, la, b, lb, p)
        tmp = a
        a = b
        b = tmp
        tl = la
        la = lb
        lb = tl
    res[0] = a
    return la


def gcd_mod(a, b, p):
    _check_p(p)
    cdef int la = len(a), lb = len(b), i
    cdef i64 pp = p
    cdef i64* A = <i64*> malloc((la + 1) * sizeof(i64))
    cdef i64* B = <i64*> malloc((lb + 1) * sizeof(i64))
    cdef i64* R
    cdef int lr
    cdef i64 inv
    try:
        for i in range(la):
            A[i] = _md(a[i] % p, pp)
        for i in range(lb):
            B[i] = _md(b[i] % p, pp)
        lr = _gcd_inplace(A, la, B, lb, pp, &R)
        if lr == 0:
            return []
        inv = _powmod(R[lr - 1], pp - 2, pp)
        return [R[i] * inv % pp for i in range(lr)]
    finally:
        free(A)
        free(B)


def gcd_degree_at_mod(fc, gc, p, a):
    _check_p(p)
    cdef i64 pp = p
    fv = [eval_mod(u, a, p) for u in fc]
    if not fv or fv[len(fv) - 1] == 0:
        return -1
    gv = [eval_mod(u, a, p) for u in gc]
    return len(gcd_mod(fv, gv, p)) - 1
