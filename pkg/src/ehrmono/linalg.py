"""Exact integer and rational linear algebra.

Everything here works on lists of lists of ints (or Fractions where noted);
no floating point.  Sizes are desk scale (dimensions <= 8 or so), so the
implementations favour clarity over asymptotics.
"""

from __future__ import annotations

from fractions import Fraction


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]


def identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(col) for col in zip(*a)]


def rank(rows) -> int:
    """Rank of an integer (or Fraction) matrix, by fraction-free elimination."""
    m = [[Fraction(x) for x in row] for row in rows]
    r = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c] / m[r][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def det(rows) -> int:
    """Determinant of a square integer matrix (Bareiss, stays integral)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[-1][-1]


def solve(rows, rhs):
    """Solve A x = b exactly over Q; returns list of Fractions or None.

    A need not be square; returns one solution of the consistent system,
    None if inconsistent.
    """
    m = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    nrows, ncols = len(m), len(m[0]) - 1
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    for i in range(r, nrows):
        if m[i][-1] != 0:
            return None
    x = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        x[c] = m[i][-1]
    return x


def smith_normal_form(a):
    """Smith normal form with transforms.

    Returns (d, u, v) with u * a * v = d, u and v unimodular, and d diagonal
    with d[i][i] dividing d[i+1][i+1].  Diagonal entries are non-negative.
    """
    m = [list(r) for r in a]
    nr = len(m)
    nc = len(m[0]) if nr else 0
    u = identity(nr)
    v = identity(nc)

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in m:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, f):
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, f):
        for row in m:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(nr, nc):
        # move a pivot of smallest absolute value into position (t, t)
        entries = [(abs(m[i][j]), i, j) for i in range(t, nr) for j in range(t, nc) if m[i][j] != 0]
        if not entries:
            break
        _, pi, pj = min(entries)
        swap_rows(t, pi)
        swap_cols(t, pj)
        done = True
        for i in range(t + 1, nr):
            if m[i][t] != 0:
                add_row(t, i, -(m[i][t] // m[t][t]))
                if m[i][t] != 0:
                    done = False
        for j in range(t + 1, nc):
            if m[t][j] != 0:
                add_col(t, j, -(m[t][j] // m[t][t]))
                if m[t][j] != 0:
                    done = False
        if not done:
            continue
        # pivot must divide every remaining entry
        offender = None
        for i in range(t + 1, nr):
            for j in range(t + 1, nc):
                if m[i][j] % m[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(offender, t, 1)
            continue
        if m[t][t] < 0:
            negate_row(t)
        t += 1
    return m, u, v


def elementary_divisors(a):
    d, _, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i] != 0]


def saturation_basis(rows):
    """Basis of (Q-span of rows) intersected with Z^n, as a list of rows.

    The input rows need not be independent.  The result has one row per
    dimension of the span and generates the saturated lattice.
    """
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    d, u, v = smith_normal_form(rows)
    r = len(elementary_divisors(rows))
    # u * A * v = d  =>  A = u^-1 d v^-1; the saturation is spanned by the
    # first r rows of v^-1, i.e. the first r columns of v read as the dual:
    # v^-1 = adjugate route is avoided; invert v by solving v * x = e_i.
    vinv = invert_unimodular(v)
    return [vinv[i] for i in range(r)]


def invert_unimodular(a):
    """Inverse of a unimodular integer matrix, as integer rows."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c] != 0)
        aug[c], aug[piv] = aug[piv], aug[c]
        aug[c] = [x / aug[c][c] for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    inv = []
    for i in range(n):
        row = aug[i][n:]
        assert all(x.denominator == 1 for x in row)
        inv.append([int(x) for x in row])
    return inv


def lattice_index(rows) -> int:
    """Index of the lattice generated by the rows inside its saturation."""
    divs = elementary_divisors(rows)
    if len(divs) < len(rows):
        from .errors import DependentVectors

        raise DependentVectors("vectors are linearly dependent")
    out = 1
    for d in divs:
        out *= d
    return out
