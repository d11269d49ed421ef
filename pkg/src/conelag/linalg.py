"""Exact dense linear algebra over a field (Fraction or Scalar entries).

Matrices are tuples of tuples (rows).  Everything here is plain Gaussian
elimination with exact division; sizes in this package never exceed a few
dozen, so no pivoting strategy beyond "first nonzero" is needed.
"""

from __future__ import annotations


def mat_from_rows(rows) -> tuple:
    return tuple(tuple(r) for r in rows)


def identity(n: int, one, zero) -> tuple:
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def transpose(a) -> tuple:
    return tuple(zip(*a)) if a else ()


def mat_add(a, b) -> tuple:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))

def mat_sub(a, b) -> tuple:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a, c) -> tuple:
    return tuple(tuple(x * c for x in row) for row in a)


def mat_mul(a, b) -> tuple:
    bt = transpose(b)
    return tuple(tuple(_dot(row, col) for col in bt) for row in a)


def mat_vec(a, v) -> tuple:
    return tuple(_dot(row, v) for row in a)


def mat_trace(a):
    t = a[0][0]
    for i in range(1, len(a)):
        t = t + a[i][i]
    return t


def _dot(u, v):
    it = iter(zip(u, v))
    x, y = next(it)
    s = x * y
    for x, y in it:
        s = s + x * y
    return s


def vec_dot(u, v):
    """Bilinear dot product (no conjugation)."""
    return _dot(u, v)


def solve(a, b) -> tuple:
    """Solve the square system a x = b exactly; raises on singular input."""
    n = len(a)
    m = [list(row) + [bv] for row, bv in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ArithmeticError("singular linear system")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(m[r][n] for r in range(n))


def invert(a) -> tuple:
    n = len(a)
    zero = a[0][0] - a[0][0]
    one = None
    for row in a:
        for x in row:
            if x:
                one = x / x
                break
        if one is not None:
            break
    if one is None:
        raise ArithmeticError("singular matrix")
    m = [list(row) + list(idr) for row, idr in zip(a, identity(n, one, zero))]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            raise ArithmeticError("singular matrix")
        m[col], m[piv] = m[piv], m[col]
        inv = one / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(m[r][n:]) for r in range(n))


def det(a):
    """Exact determinant by elimination."""
    n = len(a)
    if n == 0:
        raise ValueError("empty matrix")
    m = [list(row) for row in a]
    zero = m[0][0] - m[0][0]
    out = None
    sign_flips = 0
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col]), None)
        if piv is None:
            return zero
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            sign_flips ^= 1
        p = m[col][col]
        out = p if out is None else out * p
        for r in range(col + 1, n):
            if m[r][col]:
                f = m[r][col] / p
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return -out if sign_flips else out


def rank(rows) -> int:
    """Rank of a list of coordinate vectors."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        p = m[rk][col]
        for r in range(len(m)):
            if r != rk and m[r][col]:
                f = m[r][col] / p
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
        if rk == len(m):
            break
    return rk


def independent_subset(rows) -> list[int]:
    """Indices of a maximal linearly independent subset, greedy in order."""
    kept: list[int] = []
    basis: list[list] = []
    for idx, row in enumerate(rows):
        cand = basis + [list(row)]
        if rank(cand) > len(basis):
            basis = cand
            kept.append(idx)
    return kept


def coordinates_in_span(basis_rows, v):
    """Coefficients expressing v in the given independent basis rows.

    Solves the (possibly overdetermined) system by restriction to a set of
    pivot columns; raises if v is outside the span.
    """
    k = len(basis_rows)
    if k == 0:
        if any(x for x in v):
            raise ArithmeticError("vector outside span")
        return ()
    ncols = len(v)
    # find k columns on which the basis has full rank
    cols: list[int] = []
    m = [list(r) for r in basis_rows]
    taken = [list(r) for r in zip(*m)]  # columns
    chosen: list[list] = []
    for c in range(ncols):
        cand = chosen + [taken[c]]
        if rank(cand) > len(chosen):
            chosen = cand
            cols.append(c)
            if len(cols) == k:
                break
    if len(cols) < k:
        raise ArithmeticError("basis rows are dependent")
    a = tuple(tuple(basis_rows[i][c] for i in range(k)) for c in cols)
    b = tuple(v[c] for c in cols)
    coeffs = solve(a, b)
    # verify on the full vector (exact)
    for c in range(ncols):
        acc = None
        for i in range(k):
            t = coeffs[i] * basis_rows[i][c]
            acc = t if acc is None else acc + t
        if acc - v[c]:
            raise ArithmeticError("vector outside span")
    return coeffs
