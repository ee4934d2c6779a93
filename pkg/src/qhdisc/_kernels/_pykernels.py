"""Pure-Python modular kernels (reference and fallback for ``_ckernels``).

All inputs are lists of Python ints already reduced into ``[0, p)``;
polynomials are coefficient lists, low degree first.
"""

BACKEND = "python"


def det_mod(rows, p):
    """Determinant of a square matrix over GF(p) by Gaussian elimination."""
    n = len(rows)
    a = [list(r) for r in rows]
    det = 1
    for c in range(n):
        piv = -1
        for r in range(c, n):
            if a[r][c]:
                piv = r
                break
        if piv < 0:
            return 0
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        pc = a[c][c]
        det = det * pc % p
        inv = pow(pc, p - 2, p)
        rowc = a[c]
        for r in range(c + 1, n):
            rowr = a[r]
            f = rowr[c] * inv % p
            if f:
                for k in range(c, n):
                    rowr[k] = (rowr[k] - f * rowc[k]) % p
    return det % p


def eval_mod(coeffs, a, p):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * a + c) % p
    return acc


def interpolate_mod(xs, ys, p):
    """Coefficients of the unique polynomial of degree < len(xs) through the points."""
    n = len(xs)
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            num = (dd[i] - dd[i - 1]) % p
            den = (xs[i] - xs[i - j]) % p
            dd[i] = num * pow(den, p - 2, p) % p
    coeffs = [0] * n
    # Horner expansion of the Newton form
    for k in range(n - 1, -1, -1):
        # coeffs := coeffs * (X - xs[k]) + dd[k]
        xk = xs[k] % p
        for i in range(n - 1, 0, -1):
            coeffs[i] = (coeffs[i - 1] - xk * coeffs[i]) % p
        coeffs[0] = (dd[k] - xk * coeffs[0]) % p
    return coeffs


def _sylvester_at(fc, gc, a, p):
    m = len(fc) - 1
    n = len(gc) - 1
    fv = [eval_mod(u, a, p) for u in fc]
    gv = [eval_mod(u, a, p) for u in gc]
    size = m + n
    rows = []
    for r in range(n):
        row = [0] * size
        for k in range(m + 1):
            row[r + k] = fv[m - k]
        rows.append(row)
    for r in range(m):
        row = [0] * size
        for k in range(n + 1):
            row[r + k] = gv[n - k]
        rows.append(row)
    return rows


def sample_points(count, p):
    """0, 1, -1, 2, -2, ... reduced mod p (distinct while count <= p)."""
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


def resultant_y_mod(fc, gc, p, npoints):
    """Res_y(f, g) mod p by evaluation at ``npoints`` points and interpolation.

    ``fc``/``gc`` list the x-coefficient lists of y^0..y^m; their lengths fix
    the formal Sylvester sizes, so leading entries may vanish.
    """
    if npoints > p:
        raise ValueError("not enough distinct evaluation points modulo p")
    xs = sample_points(npoints, p)
    ys = [det_mod(_sylvester_at(fc, gc, a, p), p) for a in xs]
    return interpolate_mod(xs, ys, p)


def _polymod(a, b, p):
    a = list(a)
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    while len(a) - 1 >= db and a:
        q = a[-1] * inv % p
        shift = len(a) - 1 - db
        if q:
            for t in range(db + 1):
                a[shift + t] = (a[shift + t] - q * b[t]) % p
        a.pop()
        while a and a[-1] == 0:
            a.pop()
    return a


def gcd_mod(a, b, p):
    """Monic gcd over GF(p) of two coefficient lists."""
    a = [c % p for c in a]
    b = [c % p for c in b]
    while a and a[-1] == 0:
        a.pop()
    while b and b[-1] == 0:
        b.pop()
    while b:
        a, b = b, _polymod(a, b, p)
    if not a:
        return []
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def gcd_degree_at_mod(fc, gc, p, a):
    """Degree in y of gcd(f(a, y), g(a, y)) over GF(p), or -1 if f's y-leading
    coefficient vanishes at ``a``."""
    fv = [eval_mod(u, a, p) for u in fc]
    if not fv or fv[-1] == 0:
        return -1
    gv = [eval_mod(u, a, p) for u in gc]
    g = gcd_mod(fv, gv, p)
    return len(g) - 1
