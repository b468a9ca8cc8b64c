"""Exact dense linear algebra over Q(zeta_N).

Matrices are lists of row lists of Cyclotomic values.  Everything here is
plain Gaussian elimination with exact field division; sizes stay at desk
scale (dimensions bounded by a few dozen), so no pivoting strategy beyond
first-nonzero is needed.
"""

from __future__ import annotations

from .cyclotomic import Cyclotomic


def zeros(r: int, c: int, conductor: int):
    z = Cyclotomic.zero(conductor)
    return [[z for _ in range(c)] for _ in range(r)]


def identity(d: int, conductor: int):
    z = Cyclotomic.zero(conductor)
    o = Cyclotomic.one(conductor)
    return [[o if i == j else z for j in range(d)] for i in range(d)]


def scalar_matrix(d: int, value: Cyclotomic):
    z = Cyclotomic.zero(value.conductor)
    return [[value if i == j else z for j in range(d)] for i in range(d)]


def mat_add(A, B):
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_sub(A, B):
    return [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_scale(A, s):
    return [[a * s for a in row] for row in A]


def mat_mul(A, B):
    n, k = len(A), len(B)
    m = len(B[0])
    Bc = [[B[i][j] for i in range(k)] for j in range(m)]
    out = []
    for row in A:
        out_row = []
        for col in Bc:
            acc = None
            for a, b in zip(row, col):
                term = a * b
                acc = term if acc is None else acc + term
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_vec(A, v):
    out = []
    for row in A:
        acc = None
        for a, b in zip(row, v):
            term = a * b
            acc = term if acc is None else acc + term
        out.append(acc)
    return out


def mat_pow(A, k: int):
    d = len(A)
    conductor = A[0][0].conductor
    out = identity(d, conductor)
    base = A
    if k < 0:
        inv = inverse(base)
        if inv is None:
            raise ZeroDivisionError("matrix is not invertible")
        base, k = inv, -k
    while k:
        if k & 1:
            out = mat_mul(out, base)
        base = mat_mul(base, base)
        k >>= 1
    return out


def mat_eq(A, B) -> bool:
    return all(a == b for ra, rb in zip(A, B) for a, b in zip(ra, rb))


def is_zero_matrix(A) -> bool:
    return all(a.is_zero() for row in A for a in row)


def rref(A):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    rows = [list(r) for r in A]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(A) -> int:
    return len(rref(A)[0])


def nullspace(A):
    """Basis of the right kernel, as a list of vectors."""
    if not A:
        return []
    ncols = len(A[0])
    conductor = A[0][0].conductor
    rows, pivots = rref(A)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    zero = Cyclotomic.zero(conductor)
    one = Cyclotomic.one(conductor)
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for r, p in zip(rows, pivots):
            v[p] = -r[f]
        basis.append(v)
    return basis


def inverse(A):
    """Exact inverse, or None when singular."""
    d = len(A)
    conductor = A[0][0].conductor
    aug = [list(row) + list(idrow) for row, idrow in zip(A, identity(d, conductor))]
    rows, pivots = rref(aug)
    if len(rows) < d or pivots[:d] != list(range(d)):
        return None
    return [row[d:] for row in rows[:d]]


def det(A) -> Cyclotomic:
    d = len(A)
    conductor = A[0][0].conductor
    rows = [list(r) for r in A]
    out = Cyclotomic.one(conductor)
    for c in range(d):
        pivot = next((i for i in range(c, d) if not rows[i][c].is_zero()), None)
        if pivot is None:
            return Cyclotomic.zero(conductor)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            out = -out
        out = out * rows[c][c]
        inv = rows[c][c].inverse()
        for i in range(c + 1, d):
            if not rows[i][c].is_zero():
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return out


class SpanBasis:
    """Incrementally maintained row space over Q(zeta_N), for closure runs."""

    def __init__(self, length: int, conductor: int):
        self.length = length
        self.conductor = conductor
        self.rows = []      # echelon rows, pivot normalized to 1
        self.pivots = []    # pivot column per row

    def reduce(self, vec):
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            if not v[p].is_zero():
                f = v[p]
                v = [x - f * y for x, y in zip(v, row)]
        return v

    def add(self, vec) -> bool:
        """Insert vec; returns True when it enlarged the span."""
        v = self.reduce(vec)
        p = next((i for i, x in enumerate(v) if not x.is_zero()), None)
        if p is None:
            return False
        inv = v[p].inverse()
        v = [x * inv for x in v]
        # keep the basis fully reduced so membership tests stay valid
        for i, row in enumerate(self.rows):
            if not row[p].is_zero():
                f = row[p]
                self.rows[i] = [x - f * y for x, y in zip(row, v)]
        idx = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(idx, v)
        self.pivots.insert(idx, p)
        return True

    def dim(self) -> int:
        return len(self.rows)
