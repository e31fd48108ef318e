"""The graded spaces Omega^k = Hom(Lambda^k a, B) and their brackets.

Elements are stored densely on strictly increasing index tuples of the
subalgebra basis, each holding a B-coordinate vector; antisymmetric values
at arbitrary tuples come from sorting with the permutation sign.  Degree 0
is a single B vector.

Implemented brackets, all exact:

* the Chevalley-Eilenberg differential of the Bott module,
* the quadratic and cubic brackets on degree-1 elements (the diagonal
  formulas polarized to symmetric multilinear maps),
* the brackets pairing a derivation of the ambient algebra with Omega
  elements (unary, binary, and the two-shuffle ternary bracket).

On odd inputs the higher brackets are symmetric, matching the use of
[xi,xi]_2 and [xi,xi,xi]_3 with nonzero diagonals in the Maurer-Cartan
equation.
"""

from __future__ import annotations

import itertools
from math import comb

from . import linalg
from .liealg import Derivation, LiePair
from .scalars import ZERO


class OmegaError(ValueError):
    pass


def sort_with_sign(idxs):
    """Sort an index tuple, returning (sorted_tuple, sign); sign 0 on repeats."""
    idxs = tuple(idxs)
    n = len(idxs)
    if len(set(idxs)) != n:
        return idxs, 0
    inversions = 0
    for i in range(n):
        for j in range(i + 1, n):
            if idxs[i] > idxs[j]:
                inversions += 1
    return tuple(sorted(idxs)), (-1) ** inversions


def shuffles(p, q):
    """All (p,q)-shuffle splittings of range(p+q) with their signs.

    Yields (first, second, sign) where first/second are the increasing
    position tuples and sign is the parity of the permutation first+second.
    """
    out = []
    total = p + q
    for first in itertools.combinations(range(total), p):
        second = tuple(i for i in range(total) if i not in first)
        _, sign = sort_with_sign(first + second)
        out.append((first, second, sign))
    return out


class OmegaElement:
    """Element of Hom(Lambda^k a, B) for a fixed Lie pair."""

    def __init__(self, pair: LiePair, degree: int, rows=None):
        if degree < 0:
            raise OmegaError("negative degree")
        self.pair = pair
        self.degree = degree
        self.combos = list(itertools.combinations(range(pair.rank), degree))
        n_rows = len(self.combos)
        if rows is None:
            rows = [[ZERO] * pair.q for _ in range(n_rows)]
        if len(rows) != n_rows or any(len(r) != pair.q for r in rows):
            raise OmegaError("coefficient tensor has wrong shape")
        self.rows = [row[:] for row in rows]
        self._index = {c: i for i, c in enumerate(self.combos)}

    @classmethod
    def zero(cls, pair, degree):
        return cls(pair, degree)

    @classmethod
    def from_terms(cls, pair, degree, terms):
        """Build from sparse terms ((i1 < ... < ik), b_index, coeff)."""
        el = cls(pair, degree)
        for idxs, b_index, coeff in terms:
            idxs = tuple(idxs)
            if idxs not in el._index:
                raise OmegaError(f"indices {idxs} are not strictly increasing in range")
            el.rows[el._index[idxs]][b_index] += coeff
        return el

    def copy(self):
        return OmegaElement(self.pair, self.degree, self.rows)

    def is_zero(self):
        return all(not x for row in self.rows for x in row)

    def __eq__(self, other):
        return (
            isinstance(other, OmegaElement)
            and other.pair == self.pair
            and other.degree == self.degree
            and other.rows == self.rows
        )

    def __add__(self, other):
        self._compat(other)
        return OmegaElement(
            self.pair, self.degree, [linalg.vec_add(a, b) for a, b in zip(self.rows, other.rows)]
        )

    def __sub__(self, other):
        self._compat(other)
        return OmegaElement(
            self.pair, self.degree, [linalg.vec_sub(a, b) for a, b in zip(self.rows, other.rows)]
        )

    def __neg__(self):
        return OmegaElement(self.pair, self.degree, [[-x for x in row] for row in self.rows])

    def scale(self, c):
        return OmegaElement(self.pair, self.degree, [[c * x for x in row] for row in self.rows])

    def _compat(self, other):
        if other.pair != self.pair or other.degree != self.degree:
            raise OmegaError("mismatched pair or degree")

    def value(self, idxs):
        """Antisymmetric value at an arbitrary basis-index tuple (a B vector)."""
        sorted_idxs, sign = sort_with_sign(idxs)
        if sign == 0:
            return [ZERO] * self.pair.q
        row = self.rows[self._index[sorted_idxs]]
        if sign == 1:
            return row[:]
        return [-x for x in row]

    def value_insert(self, avec, rest):
        """Value with an a-coefficient vector in the first slot: X(v, rest)."""
        out = [ZERO] * self.pair.q
        for i, c in enumerate(avec):
            if c:
                out = linalg.vec_add(out, linalg.vec_scale(c, self.value((i,) + tuple(rest))))
        return out

    def flat(self):
        return [x for row in self.rows for x in row]

    @classmethod
    def from_flat(cls, pair, degree, flat):
        q = pair.q
        n_rows = comb(pair.rank, degree)
        rows = [flat[i * q : (i + 1) * q] for i in range(n_rows)]
        return cls(pair, degree, rows)

    def terms(self):
        for combo, row in zip(self.combos, self.rows):
            for b, c in enumerate(row):
                if c:
                    yield combo, b, c

    def __repr__(self):
        items = [f"{c}*e{list(idxs)}^b{b}" for idxs, b, c in self.terms()]
        return f"Omega{self.degree}(" + (" + ".join(items) if items else "0") + ")"


def d_ce(x: OmegaElement) -> OmegaElement:
    """Chevalley-Eilenberg differential of the Bott module, degree k -> k+1.

    (dX)(a_0..a_k) = sum_i (-1)^i nabla_{a_i} X(..a_i-hat..)
                   + sum_{i<j} (-1)^{i+j} X([a_i,a_j], ..a_i-hat..a_j-hat..).
    """
    pair = x.pair
    out = OmegaElement(pair, x.degree + 1)
    for t_idx, combo in enumerate(out.combos):
        acc = [ZERO] * pair.q
        for i, a_i in enumerate(combo):
            rest = combo[:i] + combo[i + 1 :]
            term = pair.nabla_apply(a_i, x.value(rest))
            if i % 2:
                term = [-v for v in term]
            acc = linalg.vec_add(acc, term)
        for i in range(len(combo)):
            for j in range(i + 1, len(combo)):
                br = pair.pr_a(pair.lie.bracket_basis(combo[i], combo[j]))
                rest = tuple(combo[t] for t in range(len(combo)) if t not in (i, j))
                term = x.value_insert(br, rest)
                if (i + j) % 2:
                    term = [-v for v in term]
                acc = linalg.vec_add(acc, term)
        out.rows[t_idx] = acc
    return out


def _j_bracket(pair, bvec1, bvec2):
    """[j(b1), j(b2)] as an ambient coefficient vector."""
    return pair.lie.bracket(pair.include_b(bvec1), pair.include_b(bvec2))


def _aj_bracket(pair, a_index, bvec):
    """[e_a, j(b)] as an ambient coefficient vector."""
    return pair.lie.bracket(pair.lie.basis_vector(a_index), pair.include_b(bvec))


def bracket2(xi: OmegaElement, eta: OmegaElement) -> OmegaElement:
    """Symmetric bilinear 2-bracket on degree-1 elements, valued in degree 2.

    The diagonal satisfies (1/2)[xi,xi](a1,a2) =
    pr_B[j xi a1, j xi a2] - xi(pr_A[j xi a1, a2]) - xi(pr_A[a1, j xi a2]);
    off-diagonal values are the polarization of that quadratic map.
    """
    if xi.degree != 1 or eta.degree != 1:
        raise OmegaError("bracket2 takes two degree-1 elements")
    if xi.pair != eta.pair:
        raise OmegaError("mismatched pairs")
    pair = xi.pair
    out = OmegaElement(pair, 2)
    for t_idx, (a1, a2) in enumerate(out.combos):
        xi1, xi2 = xi.value((a1,)), xi.value((a2,))
        eta1, eta2 = eta.value((a1,)), eta.value((a2,))
        acc = pair.pr_b(_j_bracket(pair, xi1, eta2))
        acc = linalg.vec_add(acc, pair.pr_b(_j_bracket(pair, eta1, xi2)))
        # -xi(pr_A[j eta a1, a2]) = +xi(pr_A[a2, j eta a1])
        acc = linalg.vec_add(acc, xi.value_insert(pair.pr_a(_aj_bracket(pair, a2, eta1)), ()))
        acc = linalg.vec_sub(acc, xi.value_insert(pair.pr_a(_aj_bracket(pair, a1, eta2)), ()))
        acc = linalg.vec_add(acc, eta.value_insert(pair.pr_a(_aj_bracket(pair, a2, xi1)), ()))
        acc = linalg.vec_sub(acc, eta.value_insert(pair.pr_a(_aj_bracket(pair, a1, xi2)), ()))
        out.rows[t_idx] = acc
    return out


def bracket3(xi: OmegaElement, eta: OmegaElement, zeta: OmegaElement) -> OmegaElement:
    """Symmetric trilinear 3-bracket on degree-1 elements, valued in degree 2.

    Diagonal: (1/6)[xi,xi,xi](a1,a2) = -xi(pr_A[j xi a1, j xi a2]).
    """
    for el in (xi, eta, zeta):
        if el.degree != 1:
            raise OmegaError("bracket3 takes three degree-1 elements")
    pair = xi.pair
    out = OmegaElement(pair, 2)
    triples = list(itertools.permutations((xi, eta, zeta)))
    for t_idx, (a1, a2) in enumerate(out.combos):
        acc = [ZERO] * pair.q
        for u, v, w in triples:
            inner = pair.pr_a(_j_bracket(pair, u.value((a1,)), v.value((a2,))))
            acc = linalg.vec_sub(acc, w.value_insert(inner, ()))
        out.rows[t_idx] = acc
    return out


def b1_der(pair: LiePair, delta: Derivation) -> OmegaElement:
    """Unary bracket of a derivation: a |-> -pr_B(delta(a)), in degree 1."""
    _, _, _, beta = pair.derivation_blocks(delta)
    out = OmegaElement(pair, 1)
    for a in range(pair.rank):
        out.rows[a] = [-beta[b][a] for b in range(pair.q)]
    return out


def b2_der(pair: LiePair, delta: Derivation, x: OmegaElement) -> OmegaElement:
    """Binary bracket of a derivation with a degree-k element (degree 0 operator).

    [delta, X](a_1..a_k) = (pr_B delta j)(X(a_1..a_k))
                          - sum_s X(a_1, .., pr_A delta(a_s), .., a_k).
    """
    if x.pair != pair:
        raise OmegaError("element does not live on the given pair")
    P, Q, _, _ = pair.derivation_blocks(delta)
    out = OmegaElement(pair, x.degree)
    for t_idx, combo in enumerate(out.combos):
        acc = linalg.mat_vec(Q, x.value(combo))
        for pos, a in enumerate(combo):
            pa = [P[i][a] for i in range(pair.rank)]
            rest = combo[:pos] + combo[pos + 1 :]
            term = x.value_insert(pa, rest)
            if pos % 2:
                term = [-v for v in term]
            acc = linalg.vec_sub(acc, term)
        out.rows[t_idx] = acc
    return out


def b3_der(pair: LiePair, delta: Derivation, x: OmegaElement, y: OmegaElement) -> OmegaElement:
    """Ternary bracket of a derivation with elements of degrees p, q >= 1.

    Two shuffle sums through the operator pr_A delta j, with overall sign
    (-1)^(p+1) on the first; graded-symmetric in (x, y).  Degrees that
    overflow the top of the complex give the zero element.
    """
    if x.pair != pair or y.pair != pair:
        raise OmegaError("elements do not live on the given pair")
    p, q = x.degree, y.degree
    if p < 1 or q < 1:
        raise OmegaError("b3_der needs both element degrees >= 1")
    _, _, R, _ = pair.derivation_blocks(delta)
    out = OmegaElement(pair, p + q - 1)
    sign1 = (-1) ** (p + 1)
    sh1 = shuffles(p, q - 1)
    sh2 = shuffles(p - 1, q)
    for t_idx, combo in enumerate(out.combos):
        acc = [ZERO] * pair.q
        for first, second, sgn in sh1:
            xv = x.value(tuple(combo[i] for i in first))
            inner = linalg.mat_vec(R, xv)
            term = y.value_insert(inner, tuple(combo[i] for i in second))
            acc = linalg.vec_add(acc, linalg.vec_scale(sign1 * sgn, term))
        for first, second, sgn in sh2:
            yv = y.value(tuple(combo[i] for i in second))
            inner = linalg.mat_vec(R, yv)
            term = x.value_insert(inner, tuple(combo[i] for i in first))
            acc = linalg.vec_add(acc, linalg.vec_scale(sgn, term))
        out.rows[t_idx] = acc
    return out
