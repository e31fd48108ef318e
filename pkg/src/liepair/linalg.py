"""Exact dense linear algebra over Q (or any exact field).

Matrices are lists of row lists.  Pivoting is deterministic (first nonzero
entry in column order), so echelon forms, ranks, nullspaces and the
representatives derived from them are reproducible bit for bit.  Entries are
duck-typed: Fraction and GaussianRational both work.
"""

from __future__ import annotations

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def zeros(rows, cols):
    return [[ZERO for _ in range(cols)] for _ in range(rows)]


def identity(n):
    m = zeros(n, n)
    for i in range(n):
        m[i][i] = ONE
    return m


def copy_matrix(m):
    return [row[:] for row in m]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    n, k = len(a), len(b)
    cols = len(b[0]) if b else 0
    out = zeros(n, cols)
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            c = ai[t]
            if not c:
                continue
            bt = b[t]
            for j in range(cols):
                if bt[j]:
                    oi[j] += c * bt[j]
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        s = ZERO
        for c, x in zip(row, v):
            if c and x:
                s += c * x
        out.append(s)
    return out


def vec_add(u, v):
    return [x + y for x, y in zip(u, v)]


def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]


def vec_scale(c, u):
    return [c * x for x in u]


def is_zero_vec(u):
    return all(not x for x in u)


def is_zero_matrix(m):
    return all(not x for row in m for x in row)


def mat_eq(a, b):
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def rref(m):
    """Reduced row echelon form.  Returns (rref_matrix, pivot_columns)."""
    a = copy_matrix(m)
    n_rows = len(a)
    n_cols = len(a[0]) if n_rows else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        pivot_row = None
        for i in range(r, n_rows):
            if a[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        p = a[r][c]
        if p != 1:
            a[r] = [x / p for x in a[r]]
        for i in range(n_rows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return a, pivots


def rank(m):
    if not m:
        return 0
    return len(rref(m)[1])


def nullspace(m, n_cols=None):
    """Basis of the right nullspace of ``m`` (rows = solutions, unit free var)."""
    if not m:
        return identity(n_cols) if n_cols else []
    n_cols = len(m[0])
    r, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(n_cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ZERO] * n_cols
        v[fc] = ONE
        for row_idx, pc in enumerate(pivots):
            v[pc] = -r[row_idx][fc]
        basis.append(v)
    return basis


def solve(m, rhs):
    """One exact solution of ``m x = rhs`` (free variables 0), or None."""
    if not m:
        return [] if is_zero_vec(rhs) else None
    n_cols = len(m[0])
    aug = [row[:] + [rhs[i]] for i, row in enumerate(m)]
    r, pivots = rref(aug)
    if n_cols in pivots:
        return None
    x = [ZERO] * n_cols
    for row_idx, pc in enumerate(pivots):
        x[pc] = r[row_idx][n_cols]
    return x


def row_space_contains(basis_rows, vec):
    """Whether ``vec`` lies in the row span of ``basis_rows``."""
    if is_zero_vec(vec):
        return True
    if not basis_rows:
        return False
    return rank(basis_rows) == rank(basis_rows + [vec])


def complete_basis(inner_rows, candidate_rows):
    """Indices of candidates extending span(inner_rows) to span(inner+candidates).

    Scans candidates in order, keeping those that raise the rank.  Used to pick
    deterministic quotient-space representatives.
    """
    chosen = []
    current = [row[:] for row in inner_rows]
    current_rank = rank(current) if current else 0
    for idx, cand in enumerate(candidate_rows):
        trial = current + [cand]
        r = rank(trial)
        if r > current_rank:
            chosen.append(idx)
            current = trial
            current_rank = r
    return chosen
