"""Exact linear algebra over Z, Q, and GF(p) for small dense integer matrices.

Matrices are lists of row lists of Python ints (arbitrary precision). Field
computations use Fraction for Q and modular ints for GF(p). The Smith normal
form uses elementary row/column operations with least-absolute-value pivoting.
"""

from __future__ import annotations

from fractions import Fraction


def zeros(rows: int, cols: int):
    return [[0] * cols for _ in range(rows)]

def mat_mul(a, b):
    if a and b and len(a[0]) != len(b):
        raise ValueError("shape mismatch")
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def is_zero_matrix(a) -> bool:
    return all(v == 0 for row in a for v in row)


def _to_field(a, p: int | None):
    if p is None:
        return [[Fraction(v) for v in row] for row in a]
    return [[v % p for v in row] for row in a]


def _row_echelon_field(a, p: int | None):
    """In-place forward elimination; returns (matrix, pivot column list)."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = pow(m[r][c], -1, p) if p is not None else 1 / m[r][c]
        m[r] = [(v * inv) % p if p is not None else v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                if p is not None:
                    m[i] = [(vi - f * vr) % p for vi, vr in zip(m[i], m[r])]
                else:
                    m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(a, p: int | None = None) -> int:
    """Rank over Q (p=None) or GF(p)."""
    if not a or not a[0]:
        return 0
    _, pivots = _row_echelon_field(_to_field(a, p), p)
    return len(pivots)


def nullspace(a, p: int | None = None):
    """Basis of the right kernel over Q (p=None) or GF(p), as column vectors."""
    if not a:
        return []
    cols = len(a[0])
    reduced, pivots = _row_echelon_field(_to_field(a, p), p)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for f in free:
        vec = [Fraction(0)] * cols if p is None else [0] * cols
        vec[f] = Fraction(1) if p is None else 1
        for r, c in enumerate(pivots):
            v = -reduced[r][f]
            vec[c] = v % p if p is not None else v
        basis.append(vec)
    return basis


def in_column_span(a, v, p: int | None = None) -> bool:
    """Whether v lies in the column span of a over Q or GF(p)."""
    if not a or not a[0]:
        return all(x % p == 0 if p is not None else x == 0 for x in v)
    augmented = [row + [vi] for row, vi in zip(a, v)]
    return rank(a, p) == rank(augmented, p)


def integer_kernel_basis(a, cols: int | None = None):
    """Basis of ker(a) as a sublattice of Z^cols (saturated, hence a direct summand).

    Column reduction with a unimodular transform U: the U-columns matching the
    zero columns of the echelon form span the kernel.
    """
    rows = len(a)
    if cols is None:
        if not rows:
            raise ValueError("pass cols for a matrix with no rows")
        cols = len(a[0])
    work = [[a[r][c] for r in range(rows)] for c in range(cols)]
    u = [[1 if i == j else 0 for j in range(cols)] for i in range(cols)]  # columns of U

    lead = 0
    for r in range(rows):
        active = [c for c in range(lead, cols) if work[c][r] != 0]
        while len(active) > 1:
            active.sort(key=lambda c: abs(work[c][r]))
            piv = active[0]
            for c in active[1:]:
                q = work[c][r] // work[piv][r]
                if q:
                    work[c] = [x - q * y for x, y in zip(work[c], work[piv])]
                    u[c] = [x - q * y for x, y in zip(u[c], u[piv])]
            active = [c for c in active if work[c][r] != 0]
        if active:
            piv = active[0]
            work[lead], work[piv] = work[piv], work[lead]
            u[lead], u[piv] = u[piv], u[lead]
            lead += 1
            if lead == cols:
                break
    return [list(u[c]) for c in range(lead, cols)]


def smith_normal_form(a):
    """Nonzero invariant factors of an integer matrix, in divisibility order."""
    m = [row[:] for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    factors = []
    t = 0
    while t < min(rows, cols):
        pivot = _least_nonzero(m, t)
        if pivot is None:
            break
        while True:
            i, j = _least_nonzero(m, t)  # re-pick after each reduction pass
            _swap_rows(m, t, i)
            _swap_cols(m, t, j)
            dirty = False
            for r in range(t + 1, rows):
                q = m[r][t] // m[t][t]
                if q:
                    m[r] = [x - q * y for x, y in zip(m[r], m[t])]
                if m[r][t]:
                    dirty = True
            for c in range(t + 1, cols):
                q = m[t][c] // m[t][t]
                if q:
                    for r in range(rows):
                        m[r][c] -= q * m[r][t]
                if m[t][c]:
                    dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block
            offender = None
            d = m[t][t]
            for r in range(t + 1, rows):
                for c in range(t + 1, cols):
                    if m[r][c] % d:
                        offender = r
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            m[t] = [x + y for x, y in zip(m[t], m[offender])]
        factors.append(abs(m[t][t]))
        t += 1
    return factors


def _least_nonzero(m, t):
    best = None
    for i in range(t, len(m)):
        for j in range(t, len(m[0])):
            v = abs(m[i][j])
            if v and (best is None or v < abs(m[best[0]][best[1]])):
                best = (i, j)
                if v == 1:
                    return best
    return best


def _swap_rows(m, a, b):
    if a != b:
        m[a], m[b] = m[b], m[a]


def _swap_cols(m, a, b):
    if a != b:
        for row in m:
            row[a], row[b] = row[b], row[a]
