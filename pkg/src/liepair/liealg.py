"""Finite-dimensional Lie algebras, Lie pairs, and derivations.

A Lie algebra is stored by structure constants f[i][j] with
[b_i, b_j] = sum_k f[i][j][k] b_k.  A Lie pair fixes an adapted basis: the
first r basis vectors span a subalgebra a, the remaining q = n - r vectors
realize a chosen splitting of the quotient B = l/a, so the projections onto
a and B are coordinate projections and the Bott connection
nabla_a b = pr_B [a, j(b)] is a table of q x q matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .scalars import ONE, ZERO


class LieError(ValueError):
    pass


class NotASubalgebra(LieError):
    pass


@dataclass
class LieValidationReport:
    ok: bool
    axiom: str | None = None  # first violated axiom, None when ok
    witness: tuple = ()


def _as_constants(raw):
    n = len(raw)
    out = []
    for i in range(n):
        if len(raw[i]) != n:
            raise LieError("structure constants are not cubic")
        row = []
        for j in range(n):
            vec = list(raw[i][j])
            if len(vec) != n:
                raise LieError("structure constant vector has wrong length")
            row.append(vec)
        out.append(row)
    return out


def validate_lie(raw_constants):
    """Antisymmetry and Jacobi scan; reports the first violation."""
    f = _as_constants(raw_constants)
    n = len(f)
    for i in range(n):
        for j in range(i, n):
            if f[i][j] != [-x for x in f[j][i]]:
                return LieValidationReport(False, "antisymmetry", (i, j))

    def bracket_vec(u, v):
        out = [ZERO] * n
        for i, ci in enumerate(u):
            if not ci:
                continue
            for j, cj in enumerate(v):
                if cj:
                    c = ci * cj
                    for k, t in enumerate(f[i][j]):
                        if t:
                            out[k] += c * t
        return out

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                ei = [ONE if t == i else ZERO for t in range(n)]
                ej = [ONE if t == j else ZERO for t in range(n)]
                ek = [ONE if t == k else ZERO for t in range(n)]
                s = bracket_vec(f[i][j], ek)
                s = linalg.vec_add(s, bracket_vec(f[j][k], ei))
                s = linalg.vec_add(s, bracket_vec(f[k][i], ej))
                if not linalg.is_zero_vec(s):
                    return LieValidationReport(False, "jacobi", (i, j, k))
    return LieValidationReport(True)


class LieAlgebra:
    def __init__(self, constants, basis=None, name=None):
        report = validate_lie(constants)
        if not report.ok:
            raise LieError(f"not a Lie algebra: {report.axiom} fails at {report.witness}")
        self.f = _as_constants(constants)
        self.dim = len(self.f)
        self.basis = list(basis) if basis else [f"x{i}" for i in range(self.dim)]
        if len(self.basis) != self.dim:
            raise LieError("basis label count does not match dimension")
        self.name = name

    def __repr__(self):
        return f"LieAlgebra({self.name or self.basis}, dim={self.dim})"

    def __eq__(self, other):
        return isinstance(other, LieAlgebra) and self.f == other.f

    def bracket(self, u, v):
        """Bracket of coefficient vectors."""
        out = [ZERO] * self.dim
        for i, ci in enumerate(u):
            if not ci:
                continue
            for j, cj in enumerate(v):
                if cj:
                    c = ci * cj
                    for k, t in enumerate(self.f[i][j]):
                        if t:
                            out[k] += c * t
        return out

    def bracket_basis(self, i, j):
        return self.f[i][j]

    def basis_vector(self, i):
        return [ONE if k == i else ZERO for k in range(self.dim)]

    @classmethod
    def from_sparse(cls, dim, entries, basis=None, name=None):
        """Build from records (i, j, k, coeff) with i < j; antisymmetry implied."""
        f = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for i, j, k, c in entries:
            if not (0 <= i < j < dim):
                raise LieError(f"sparse bracket record needs 0 <= i < j < dim, got ({i},{j})")
            f[i][j][k] += c
            f[j][i][k] -= c
        return cls(f, basis=basis, name=name)


class LiePair:
    """A Lie algebra with a subalgebra spanned by the first ``rank`` basis vectors."""

    def __init__(self, lie, rank, name=None):
        n = lie.dim
        if not 0 < rank < n:
            raise LieError("subalgebra rank must be strictly between 0 and dim")
        for i in range(rank):
            for j in range(i + 1, rank):
                if any(lie.f[i][j][rank:]):
                    raise NotASubalgebra(
                        f"basis vectors {i},{j} bracket outside the first {rank}"
                    )
        self.lie = lie
        self.rank = rank
        self.q = n - rank
        self.name = name or (f"{lie.name}_r{rank}" if lie.name else None)
        # Bott connection: nabla[a] is the q x q matrix of pr_B [e_a, j(-)].
        self.nabla = []
        for a in range(rank):
            mat = [[ZERO] * self.q for _ in range(self.q)]
            for m in range(self.q):
                col = lie.f[a][rank + m][rank:]
                for b in range(self.q):
                    mat[b][m] = col[b]
            self.nabla.append(mat)

    def __repr__(self):
        return f"LiePair({self.name or self.lie!r}, rank={self.rank})"

    def __eq__(self, other):
        return (
            isinstance(other, LiePair)
            and other.lie == self.lie
            and other.rank == self.rank
        )

    # Coordinate projections and inclusions in the adapted basis.
    def pr_a(self, vec):
        return vec[: self.rank]

    def pr_b(self, vec):
        return vec[self.rank :]

    def include_a(self, avec):
        return list(avec) + [ZERO] * self.q

    def include_b(self, bvec):
        return [ZERO] * self.rank + list(bvec)

    def nabla_apply(self, a_index, bvec):
        return linalg.mat_vec(self.nabla[a_index], bvec)

    def bott_flat_ok(self):
        """Sanity check: nabla_[a1,a2] == [nabla_a1, nabla_a2] on all pairs."""
        for a1 in range(self.rank):
            for a2 in range(self.rank):
                lhs = [[ZERO] * self.q for _ in range(self.q)]
                for c, coeff in enumerate(self.lie.f[a1][a2][: self.rank]):
                    if coeff:
                        lhs = linalg.mat_add(lhs, linalg.mat_scale(coeff, self.nabla[c]))
                rhs = linalg.mat_sub(
                    linalg.mat_mul(self.nabla[a1], self.nabla[a2]),
                    linalg.mat_mul(self.nabla[a2], self.nabla[a1]),
                )
                if not linalg.mat_eq(lhs, rhs):
                    return False
        return True

    def is_matched(self):
        """True when the splitting complement is itself bracket-closed."""
        for i in range(self.rank, self.lie.dim):
            for j in range(i + 1, self.lie.dim):
                if any(self.lie.f[i][j][: self.rank]):
                    return False
        return True

    def derivation_blocks(self, der):
        """Block decomposition (P, Q, R, beta) of a derivation in the adapted basis.

        P = pr_A d i (r x r), Q = pr_B d j (q x q), R = pr_A d j (r x q),
        beta = pr_B d i (q x r).
        """
        r, q, n = self.rank, self.q, self.lie.dim
        m = der.matrix
        P = [[m[i][j] for j in range(r)] for i in range(r)]
        beta = [[m[r + i][j] for j in range(r)] for i in range(q)]
        R = [[m[i][r + j] for j in range(q)] for i in range(r)]
        Q = [[m[r + i][r + j] for j in range(q)] for i in range(q)]
        return P, Q, R, beta


def validate_pair(lie, rank, name=None):
    """Build a LiePair, raising NotASubalgebra with a witness pair on failure."""
    return LiePair(lie, rank, name=name)


def is_matched(pair):
    return pair.is_matched()


class Derivation:
    """A linear map D with D[u,v] = [Du,v] + [u,Dv] on all basis pairs."""

    def __init__(self, lie, matrix, check=True):
        if len(matrix) != lie.dim or any(len(r) != lie.dim for r in matrix):
            raise LieError("derivation matrix has wrong shape")
        self.lie = lie
        self.matrix = [row[:] for row in matrix]
        if check and not self._leibniz_ok():
            raise LieError("matrix does not satisfy the Leibniz identity")

    def _leibniz_ok(self):
        lie = self.lie
        for i in range(lie.dim):
            for j in range(i + 1, lie.dim):
                lhs = self.apply(lie.f[i][j])
                rhs = linalg.vec_add(
                    lie.bracket(self.column(i), lie.basis_vector(j)),
                    lie.bracket(lie.basis_vector(i), self.column(j)),
                )
                if lhs != rhs:
                    return False
        return True

    def column(self, i):
        return [self.matrix[k][i] for k in range(self.lie.dim)]

    def apply(self, vec):
        return linalg.mat_vec(self.matrix, vec)

    def __add__(self, other):
        return Derivation(self.lie, linalg.mat_add(self.matrix, other.matrix), check=False)

    def __sub__(self, other):
        return Derivation(self.lie, linalg.mat_sub(self.matrix, other.matrix), check=False)

    def __neg__(self):
        return Derivation(self.lie, [[-x for x in row] for row in self.matrix], check=False)

    def scale(self, c):
        return Derivation(self.lie, linalg.mat_scale(c, self.matrix), check=False)

    def is_zero(self):
        return linalg.is_zero_matrix(self.matrix)

    def __eq__(self, other):
        return (
            isinstance(other, Derivation)
            and other.lie == self.lie
            and linalg.mat_eq(other.matrix, self.matrix)
        )

    def flat(self):
        return [x for row in self.matrix for x in row]

    @classmethod
    def zero(cls, lie):
        return cls(lie, linalg.zeros(lie.dim, lie.dim), check=False)

    @classmethod
    def from_flat(cls, lie, flat, check=False):
        n = lie.dim
        return cls(lie, [flat[i * n : (i + 1) * n] for i in range(n)], check=check)


def inner_derivation(lie, u):
    """ad_u = [u, -]."""
    n = lie.dim
    mat = [[ZERO] * n for _ in range(n)]
    for i in range(n):
        col = lie.bracket(u, lie.basis_vector(i))
        for k in range(n):
            mat[k][i] = col[k]
    return Derivation(lie, mat, check=False)


def commutator(d1, d2):
    """Matrix commutator of two derivations (again a derivation)."""
    m = linalg.mat_sub(
        linalg.mat_mul(d1.matrix, d2.matrix), linalg.mat_mul(d2.matrix, d1.matrix)
    )
    return Derivation(d1.lie, m, check=False)


def derivation_space(lie):
    """Deterministic echelonized basis of all derivations.

    Solves D[b_i,b_j] = [D b_i, b_j] + [b_i, D b_j] exactly over all basis
    pairs; unknowns are the n^2 matrix entries in row-major order.  The
    result is cached on the (immutable) algebra.
    """
    cached = getattr(lie, "_derivation_space_cache", None)
    if cached is not None:
        return list(cached)
    n = lie.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                # coefficient of D[k][c] in equation (i,j,k)
                row = [ZERO] * (n * n)
                for c in range(n):
                    if lie.f[i][j][c]:
                        row[k * n + c] += lie.f[i][j][c]
                for m in range(n):
                    if lie.f[m][j][k]:
                        row[m * n + i] -= lie.f[m][j][k]
                    if lie.f[i][m][k]:
                        row[m * n + j] -= lie.f[i][m][k]
                rows.append(row)
    if not rows:
        basis = linalg.identity(n * n)
    else:
        basis = linalg.nullspace(rows, n_cols=n * n)
        basis = linalg.rref(basis)[0][: linalg.rank(basis)] if basis else []
    result = [Derivation.from_flat(lie, v, check=False) for v in basis]
    lie._derivation_space_cache = result
    return list(result)


def inner_derivation_space(lie):
    """Echelonized basis of the inner derivations ad_u (cached on the algebra)."""
    cached = getattr(lie, "_inner_space_cache", None)
    if cached is not None:
        return list(cached)
    rows = [inner_derivation(lie, lie.basis_vector(i)).flat() for i in range(lie.dim)]
    rows = [r for r in rows if not linalg.is_zero_vec(r)]
    if not rows:
        result = []
    else:
        basis = linalg.rref(rows)[0][: linalg.rank(rows)]
        result = [Derivation.from_flat(lie, v, check=False) for v in basis]
    lie._inner_space_cache = result
    return list(result)
