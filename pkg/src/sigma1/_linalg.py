"""Exact rational/integer linear algebra used across the package.

Everything here works on small dense matrices given as lists of rows.
Entries may be ints or Fractions; results are exact.  No floats, ever.
"""

from fractions import Fraction
from math import gcd


def _as_fraction_rows(rows):
    return [[Fraction(x) for x in row] for row in rows]


def rref(rows):
    """Reduced row echelon form over the rationals.

    Returns (rank, pivot_columns, reduced_rows).  Zero rows are dropped.
    """
    m = _as_fraction_rows(rows)
    if not m:
        return 0, [], []
    n_cols = len(m[0])
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return r, pivots, m[:r]


def rank(rows):
    return rref(rows)[0]


def primitive_int_vector(vec):
    """Scale a rational vector by a positive rational to a primitive integer
    vector (gcd of entries 1, ray direction preserved)."""
    fracs = [Fraction(x) for x in vec]
    mult = 1
    for f in fracs:
        mult = mult * f.denominator // gcd(mult, f.denominator)
    ints = [int(f * mult) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return tuple(ints)


def integer_row_basis(rows):
    """Canonical basis of the row space: RREF rows rescaled to primitive
    integer vectors (pivot entries positive by construction)."""
    _, _, reduced = rref(rows)
    return [primitive_int_vector(row) for row in reduced]


def nullspace(rows, n_cols):
    """Canonical primitive integer basis of {v : M v = 0} over the rationals.

    `rows` is the matrix M (each row of length n_cols); n_cols must be given
    explicitly so the empty matrix works.
    """
    rank_, pivots, reduced = rref(rows)
    free_cols = [c for c in range(n_cols) if c not in pivots]
    basis = []
    for fc in free_cols:
        v = [Fraction(0)] * n_cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -reduced[i][fc]
        basis.append(primitive_int_vector(v))
    return basis


def stack_rank(*row_groups):
    stacked = []
    for g in row_groups:
        stacked.extend(list(row) for row in g)
    if not stacked:
        return 0
    return rank(stacked)


def span_contains(rows, vec):
    """True iff vec lies in the rational row span of rows."""
    base = [list(r) for r in rows]
    r0 = rank(base) if base else 0
    return rank(base + [list(vec)]) == r0


def smith_normal_form(rows):
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the list of nonzero diagonal entries d_1 | d_2 | ... (positive).
    Transform matrices are not tracked; only the diagonal is needed here.
    """
    m = [[int(x) for x in row] for row in rows]
    if not m or not m[0]:
        return []
    n_rows, n_cols = len(m), len(m[0])
    diag = []
    t = 0
    while t < n_rows and t < n_cols:
        best = None
        for i in range(t, n_rows):
            for j in range(t, n_cols):
                v = m[i][j]
                if v != 0 and (best is None or abs(v) < abs(m[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i0, j0 = best
        m[t], m[i0] = m[i0], m[t]
        for row in m:
            row[t], row[j0] = row[j0], row[t]
        dirty = False
        pivot = m[t][t]
        for i in range(t + 1, n_rows):
            if m[i][t] != 0:
                q = m[i][t] // pivot
                m[i] = [a - q * b for a, b in zip(m[i], m[t])]
                if m[i][t] != 0:
                    dirty = True
        for j in range(t + 1, n_cols):
            if m[t][j] != 0:
                q = m[t][j] // pivot
                for row in m:
                    row[j] -= q * row[t]
                if m[t][j] != 0:
                    dirty = True
        if dirty:
            # a remainder smaller than the pivot appeared; repick the pivot
            continue
        diag.append(abs(pivot))
        t += 1
    # enforce the divisibility chain d1 | d2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a != 0:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a // g * b
                changed = True
        diag.sort()
    return [d for d in diag if d != 0]
