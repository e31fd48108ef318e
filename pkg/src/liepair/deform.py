"""Coefficient-linear realizations: standard inclusions and small automorphisms.

This is the matrix side of the theory.  A map between free modules V tensor A
and W tensor A is stored as one scalar block per coefficient-algebra basis
vector; block 0 is the map's center (its evaluation at the maximal ideal).
Standard inclusions I_xi(a) = i(a) + j(xi(a)), exponentials of nilpotent
derivation families, their logarithms, and the action

    Pi |> xi = pr_B o Pi o I_xi o (pr_A o Pi o I_xi)^(-1)

are all computed here exactly, with center-identity maps inverted by finite
Neumann series.  Everything re-verifies its defining property before being
returned, because these operators are the independent oracle against the
bracket-side gauge machinery in :mod:`liepair.mc`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import linalg
from .artin import ArtinAlgebra
from .liealg import Derivation, LiePair
from .mc import (
    GaugeParameter,
    InternalInconsistency,
    MCElement,
    gauge_exp_terms,
    gauge_solve,
    is_mc,
)
from .omega import OmegaElement
from .scalars import ONE, ZERO


class DeformError(ValueError):
    pass


class AMap:
    """A coefficient-linear map V tensor A -> W tensor A in block form."""

    def __init__(self, algebra: ArtinAlgebra, src_dim: int, dst_dim: int, blocks=None):
        self.algebra = algebra
        self.src_dim = src_dim
        self.dst_dim = dst_dim
        if blocks is None:
            blocks = [linalg.zeros(dst_dim, src_dim) for _ in range(algebra.dim)]
        if len(blocks) != algebra.dim:
            raise DeformError("block count does not match algebra dimension")
        for b in blocks:
            if len(b) != dst_dim or any(len(r) != src_dim for r in b):
                raise DeformError("block has wrong shape")
        self.blocks = [linalg.copy_matrix(b) for b in blocks]

    @classmethod
    def from_center(cls, algebra, matrix):
        dst, src = len(matrix), len(matrix[0]) if matrix else 0
        out = cls(algebra, src, dst)
        out.blocks[0] = linalg.copy_matrix(matrix)
        return out

    @classmethod
    def identity(cls, algebra, dim):
        return cls.from_center(algebra, linalg.identity(dim))

    def center(self):
        return self.blocks[0]

    def _compat(self, other):
        if (
            other.algebra != self.algebra
            or other.src_dim != self.src_dim
            or other.dst_dim != self.dst_dim
        ):
            raise DeformError("mismatched map shapes")

    def __add__(self, other):
        self._compat(other)
        return AMap(
            self.algebra, self.src_dim, self.dst_dim,
            [linalg.mat_add(a, b) for a, b in zip(self.blocks, other.blocks)],
        )

    def __sub__(self, other):
        self._compat(other)
        return AMap(
            self.algebra, self.src_dim, self.dst_dim,
            [linalg.mat_sub(a, b) for a, b in zip(self.blocks, other.blocks)],
        )

    def __neg__(self):
        return AMap(
            self.algebra, self.src_dim, self.dst_dim,
            [[[-x for x in row] for row in b] for b in self.blocks],
        )

    def scale(self, c):
        return AMap(
            self.algebra, self.src_dim, self.dst_dim,
            [linalg.mat_scale(c, b) for b in self.blocks],
        )

    def compose(self, other):
        """self o other, multiplying coefficient blocks through the table."""
        if other.algebra != self.algebra or other.dst_dim != self.src_dim:
            raise DeformError("maps not composable")
        out = AMap(self.algebra, other.src_dim, self.dst_dim)
        table = self.algebra.table
        for a, left in enumerate(self.blocks):
            if linalg.is_zero_matrix(left):
                continue
            for b, right in enumerate(other.blocks):
                if linalg.is_zero_matrix(right):
                    continue
                prod = linalg.mat_mul(left, right)
                for k, t in enumerate(table[a][b]):
                    if t:
                        out.blocks[k] = linalg.mat_add(out.blocks[k], linalg.mat_scale(t, prod))
        return out

    def apply(self, avec):
        """Apply to a vector given as one coefficient list per algebra basis index."""
        if len(avec) != self.algebra.dim or any(len(v) != self.src_dim for v in avec):
            raise DeformError("vector has wrong shape")
        out = [[ZERO] * self.dst_dim for _ in range(self.algebra.dim)]
        table = self.algebra.table
        for a, block in enumerate(self.blocks):
            if linalg.is_zero_matrix(block):
                continue
            for b, v in enumerate(avec):
                if linalg.is_zero_vec(v):
                    continue
                img = linalg.mat_vec(block, v)
                for k, t in enumerate(table[a][b]):
                    if t:
                        out[k] = linalg.vec_add(out[k], linalg.vec_scale(t, img))
        return out

    def apply_basis(self, i):
        """Image of e_i tensor 1 (a vector of coefficient lists)."""
        return [[b[r][i] for r in range(self.dst_dim)] for b in self.blocks]

    def is_zero(self):
        return all(linalg.is_zero_matrix(b) for b in self.blocks)

    def __eq__(self, other):
        return (
            isinstance(other, AMap)
            and other.algebra == self.algebra
            and other.src_dim == self.src_dim
            and other.dst_dim == self.dst_dim
            and all(linalg.mat_eq(a, b) for a, b in zip(other.blocks, self.blocks))
        )

    def neumann_inverse(self):
        """Exact inverse of a center-identity map via the finite Neumann series."""
        if self.src_dim != self.dst_dim:
            raise DeformError("only square maps are invertible")
        if not linalg.mat_eq(self.center(), linalg.identity(self.src_dim)):
            raise DeformError("Neumann inversion needs a center-identity map")
        ident = AMap.identity(self.algebra, self.src_dim)
        nil = ident - self
        acc = ident
        power = ident
        for _ in range(self.algebra.nilpotency_order):
            power = nil.compose(power)
            if power.is_zero():
                break
            acc = acc + power
        return acc


def avec_zero(algebra, dim):
    return [[ZERO] * dim for _ in range(algebra.dim)]


def avec_basis(algebra, dim, i):
    out = avec_zero(algebra, dim)
    out[0][i] = ONE
    return out


def avec_eq(u, v):
    return u == v


def avec_add(u, v):
    return [linalg.vec_add(a, b) for a, b in zip(u, v)]


def avec_sub(u, v):
    return [linalg.vec_sub(a, b) for a, b in zip(u, v)]


def bracket_avec(lie, algebra, u, v):
    """Coefficient-bilinear extension of the Lie bracket to l tensor A."""
    out = avec_zero(algebra, lie.dim)
    table = algebra.table
    for a, x in enumerate(u):
        if linalg.is_zero_vec(x):
            continue
        for b, y in enumerate(v):
            if linalg.is_zero_vec(y):
                continue
            w = lie.bracket(x, y)
            for k, t in enumerate(table[a][b]):
                if t:
                    out[k] = linalg.vec_add(out[k], linalg.vec_scale(t, w))
    return out


def _inclusion_matrix(pair):
    """i: a -> l in the adapted basis (n x r)."""
    n, r = pair.lie.dim, pair.rank
    m = linalg.zeros(n, r)
    for a in range(r):
        m[a][a] = ONE
    return m


def _pr_a_map(pair, algebra):
    r, n = pair.rank, pair.lie.dim
    m = linalg.zeros(r, n)
    for a in range(r):
        m[a][a] = ONE
    return AMap.from_center(algebra, m)


def _pr_b_map(pair, algebra):
    r, q, n = pair.rank, pair.q, pair.lie.dim
    m = linalg.zeros(q, n)
    for b in range(q):
        m[b][r + b] = ONE
    return AMap.from_center(algebra, m)


def omega1_to_block(el: OmegaElement):
    """A degree-1 element as the q x r matrix of the map a -> B."""
    pair = el.pair
    m = linalg.zeros(pair.q, pair.rank)
    for a in range(pair.rank):
        col = el.value((a,))
        for b in range(pair.q):
            m[b][a] = col[b]
    return m


def block_to_omega1(pair, m):
    el = OmegaElement(pair, 1)
    for a in range(pair.rank):
        el.rows[a] = [m[b][a] for b in range(pair.q)]
    return el


def family_to_amap(fam) -> AMap:
    """A degree-1 family as a map a tensor A -> B tensor A."""
    pair, algebra = fam.pair, fam.algebra
    out = AMap(algebra, pair.rank, pair.q)
    for idx, comp in enumerate(fam.comps):
        out.blocks[idx] = omega1_to_block(comp)
    return out


def amap_to_mc(pair, amap: AMap) -> MCElement:
    if not linalg.is_zero_matrix(amap.center()):
        raise DeformError("map has a nonzero center, not an m-supported element")
    comps = [block_to_omega1(pair, b) for b in amap.blocks]
    return MCElement(pair, amap.algebra, comps)


def standard_inclusion(xi: MCElement) -> AMap:
    """I_xi(a) = i(a) + j(xi(a)) as a map a tensor A -> l tensor A."""
    pair, algebra = xi.pair, xi.algebra
    n, r, q = pair.lie.dim, pair.rank, pair.q
    out = AMap(algebra, r, n)
    out.blocks[0] = _inclusion_matrix(pair)
    for idx in range(1, algebra.dim):
        blk = omega1_to_block(xi.comps[idx])
        full = linalg.zeros(n, r)
        for b in range(q):
            for a in range(r):
                full[r + b][a] = blk[b][a]
        out.blocks[idx] = full
    return out


def std_check(xi: MCElement) -> bool:
    """The closure equation I_xi(pr_A [I_xi a1, I_xi a2]) == [I_xi a1, I_xi a2].

    Checked on all subalgebra basis pairs with exact coefficient arithmetic;
    agrees with the Maurer-Cartan test by construction of the brackets, which
    the two-oracle test suites exercise explicitly.
    """
    pair, algebra = xi.pair, xi.algebra
    imap = standard_inclusion(xi)
    pr_a = _pr_a_map(pair, algebra)
    lie = pair.lie
    images = [imap.apply(avec_basis(algebra, pair.rank, a)) for a in range(pair.rank)]
    for a1 in range(pair.rank):
        for a2 in range(a1 + 1, pair.rank):
            u = bracket_avec(lie, algebra, images[a1], images[a2])
            back = imap.apply(pr_a.apply(u))
            if not avec_eq(back, u):
                return False
    return True


class InducedBracket:
    """The bracket pr_A([I_xi -, I_xi -]) on a tensor A, as a basis table.

    Refuses elements failing the closure equation unless ``check=False``;
    the unchecked table exists so callers can exhibit the Jacobi violation
    that the refusal is protecting against.
    """

    def __init__(self, xi: MCElement, check=True):
        if check and not std_check(xi):
            raise DeformError("element fails the closure equation; bracket would not be Lie")
        self.pair = xi.pair
        self.algebra = xi.algebra
        pair, algebra = xi.pair, xi.algebra
        imap = standard_inclusion(xi)
        pr_a = _pr_a_map(pair, algebra)
        lie = pair.lie
        r = pair.rank
        images = [imap.apply(avec_basis(algebra, r, a)) for a in range(r)]
        self.table = [[None] * r for _ in range(r)]
        for i in range(r):
            for j in range(r):
                u = bracket_avec(lie, algebra, images[i], images[j])
                self.table[i][j] = pr_a.apply(u)

    def apply(self, x, y):
        """Bracket of two vectors in a tensor A (coefficient-bilinear)."""
        algebra, r = self.algebra, self.pair.rank
        out = avec_zero(algebra, r)
        for a, xv in enumerate(x):
            if linalg.is_zero_vec(xv):
                continue
            for b, yv in enumerate(y):
                if linalg.is_zero_vec(yv):
                    continue
                # scalar-basis bracket values, then multiply m_a m_b through
                acc = avec_zero(algebra, r)
                for i, ci in enumerate(xv):
                    if not ci:
                        continue
                    for j, cj in enumerate(yv):
                        if not cj:
                            continue
                        c = ci * cj
                        for g, gvec in enumerate(self.table[i][j]):
                            if not linalg.is_zero_vec(gvec):
                                acc[g] = linalg.vec_add(acc[g], linalg.vec_scale(c, gvec))
                for g, gvec in enumerate(acc):
                    if linalg.is_zero_vec(gvec):
                        continue
                    ab = algebra.table[a][b]
                    prod = algebra.mul_coeffs(
                        [ONE if t == g else ZERO for t in range(algebra.dim)], ab
                    )
                    for k, t in enumerate(prod):
                        if t:
                            out[k] = linalg.vec_add(out[k], linalg.vec_scale(t, gvec))
        return out

    def antisymmetric_ok(self):
        r = self.pair.rank
        for i in range(r):
            for j in range(r):
                neg = [[-x for x in row] for row in self.table[j][i]]
                if not avec_eq(self.table[i][j], neg):
                    return False
        return True

    def jacobi_ok(self):
        """Jacobi identity over the coefficient algebra, full triple scan."""
        r, algebra = self.pair.rank, self.algebra
        for i in range(r):
            for j in range(r):
                for k in range(r):
                    ei = avec_basis(algebra, r, i)
                    ej = avec_basis(algebra, r, j)
                    ek = avec_basis(algebra, r, k)
                    s = self.apply(self.table[i][j], ek)
                    s = avec_add(s, self.apply(self.table[j][k], ei))
                    s = avec_add(s, self.apply(self.table[k][i], ej))
                    if any(not linalg.is_zero_vec(v) for v in s):
                        return False
        return True

    def center_table(self):
        """The evaluation of the bracket table (must be the plain a-bracket)."""
        return [[vec[0] for vec in row] for row in self.table]


def induced_bracket(xi: MCElement) -> InducedBracket:
    return InducedBracket(xi)


class SmallAutomorphism(AMap):
    """A center-identity bracket automorphism of l tensor A."""

    def __init__(self, pair: LiePair, algebra: ArtinAlgebra, blocks, check=True):
        n = pair.lie.dim
        super().__init__(algebra, n, n, blocks)
        self.pair = pair
        if check:
            if not linalg.mat_eq(self.center(), linalg.identity(n)):
                raise DeformError("center is not the identity")
            if not self.preserves_bracket():
                raise DeformError("map does not preserve the extended bracket")

    def preserves_bracket(self):
        lie, algebra = self.pair.lie, self.algebra
        n = lie.dim
        images = [self.apply(avec_basis(algebra, n, i)) for i in range(n)]
        for i in range(n):
            for j in range(i + 1, n):
                lhs = self.apply(
                    [lie.bracket_basis(i, j) if k == 0 else [ZERO] * n for k in range(algebra.dim)]
                )
                rhs = bracket_avec(lie, algebra, images[i], images[j])
                if not avec_eq(lhs, rhs):
                    return False
        return True

    def compose_small(self, other):
        if other.pair != self.pair:
            raise DeformError("mismatched pairs")
        composed = self.compose(other)
        return SmallAutomorphism(self.pair, self.algebra, composed.blocks, check=False)


def exp_derivation(delta: GaugeParameter) -> SmallAutomorphism:
    """exp(delta) = sum delta^k / k!, a small automorphism (re-verified)."""
    pair, algebra = delta.pair, delta.algebra
    n = pair.lie.dim
    dmap = AMap(algebra, n, n)
    for idx, comp in enumerate(delta.comps):
        dmap.blocks[idx] = linalg.copy_matrix(comp.matrix)
    acc = AMap.identity(algebra, n)
    power = AMap.identity(algebra, n)
    k = 0
    while True:
        k += 1
        power = dmap.compose(power)
        if power.is_zero() or k > algebra.nilpotency_order:
            break
        acc = acc + power.scale(Fraction(1, factorial(k)))
    return SmallAutomorphism(pair, algebra, acc.blocks, check=True)


def log_automorphism(pi: SmallAutomorphism) -> GaugeParameter:
    """The unique nilpotent derivation family with exp(log(Pi)) = Pi."""
    pair, algebra = pi.pair, pi.algebra
    n = pair.lie.dim
    if not linalg.mat_eq(pi.center(), linalg.identity(n)):
        raise DeformError("logarithm needs a center-identity automorphism")
    ident = AMap.identity(algebra, n)
    nil = AMap(algebra, n, n, pi.blocks) - ident
    acc = AMap(algebra, n, n)
    power = ident
    k = 0
    while True:
        k += 1
        power = nil.compose(power)
        if power.is_zero() or k > algebra.nilpotency_order:
            break
        acc = acc + power.scale(Fraction((-1) ** (k + 1), k))
    comps = [Derivation(pair.lie, acc.blocks[idx], check=(idx > 0)) for idx in range(algebra.dim)]
    return GaugeParameter(pair, algebra, comps, mode="weak", check=False)


def act_on_standard(pi: SmallAutomorphism, xi: MCElement) -> MCElement:
    """Pi |> xi = pr_B o Pi o I_xi o (pr_A o Pi o I_xi)^(-1); re-verified."""
    pair, algebra = xi.pair, xi.algebra
    if pi.pair != pair or pi.algebra != algebra:
        raise DeformError("automorphism and element live on different data")
    if not std_check(xi):
        raise DeformError("element fails the closure equation")
    pr_a = _pr_a_map(pair, algebra)
    pr_b = _pr_b_map(pair, algebra)
    imap = standard_inclusion(xi)
    pi_i = pi.compose(imap)
    pi_xi = pr_a.compose(pi_i)
    pi_xi_inv = pi_xi.neumann_inverse()
    result_map = pr_b.compose(pi_i).compose(pi_xi_inv)
    out = amap_to_mc(pair, result_map)
    if not std_check(out):
        raise InternalInconsistency("action produced a non-standard deformation")
    # commuting square: I_(Pi |> xi) o Pi_xi == Pi o I_xi
    if standard_inclusion(out).compose(pi_xi) != pi_i:
        raise InternalInconsistency("action failed the commuting-square identity")
    out._verified = True
    return out


def standard_realization(imap: AMap, bracket: InducedBracket, pair, algebra) -> MCElement:
    """Recover xi from an inclusion with center i intertwining a given bracket.

    Decomposes I = iota_A + j o iota_B and returns xi = iota_B o iota_A^(-1);
    the inclusion then factors as I_xi = I o iota_A^(-1).
    """
    n, r = pair.lie.dim, pair.rank
    if imap.src_dim != r or imap.dst_dim != n or imap.algebra != algebra:
        raise DeformError("inclusion map has wrong shape")
    if not linalg.mat_eq(imap.center(), _inclusion_matrix(pair)):
        raise DeformError("center of the inclusion is not the subalgebra inclusion")
    lie = pair.lie
    for i in range(r):
        for j in range(r):
            lhs = imap.apply(bracket.table[i][j])
            rhs = bracket_avec(
                lie, algebra,
                imap.apply(avec_basis(algebra, r, i)),
                imap.apply(avec_basis(algebra, r, j)),
            )
            if not avec_eq(lhs, rhs):
                raise DeformError("inclusion does not intertwine the given bracket")
    iota_a = _pr_a_map(pair, algebra).compose(imap)
    iota_b = _pr_b_map(pair, algebra).compose(imap)
    xi_map = iota_b.compose(iota_a.neumann_inverse())
    out = amap_to_mc(pair, xi_map)
    if not std_check(out):
        raise InternalInconsistency("standard realization fails the closure equation")
    out._verified = True
    return out


def xy_sequences(delta: GaugeParameter, xi: MCElement, kmax: int):
    """The maps x^k = pr_A o delta^k o I_xi and y^k = pr_B o delta^k o I_xi."""
    if not is_mc(xi):
        raise DeformError("element does not satisfy the Maurer-Cartan equation")
    pair, algebra = xi.pair, xi.algebra
    n = pair.lie.dim
    dmap = AMap(algebra, n, n)
    for idx, comp in enumerate(delta.comps):
        dmap.blocks[idx] = linalg.copy_matrix(comp.matrix)
    pr_a = _pr_a_map(pair, algebra)
    pr_b = _pr_b_map(pair, algebra)
    power_i = standard_inclusion(xi)
    xs, ys = [], []
    for _ in range(kmax + 1):
        xs.append(pr_a.compose(power_i))
        ys.append(pr_b.compose(power_i))
        power_i = dmap.compose(power_i)
    return xs, ys


def xy_identity_check(delta: GaugeParameter, xi: MCElement, kmax: int) -> bool:
    """Exact check of y^k == -sum_p C(k,p) e^p o x^(k-p) for all k <= kmax."""
    pair, algebra = xi.pair, xi.algebra
    xs, ys = xy_sequences(delta, xi, kmax)
    terms = gauge_exp_terms(delta, xi, kmax)
    e_maps = [family_to_amap(t) for t in terms]
    for k in range(kmax + 1):
        rhs = AMap(algebra, pair.rank, pair.q)
        for p in range(k + 1):
            rhs = rhs - e_maps[p].compose(xs[k - p]).scale(Fraction(comb(k, p)))
        if ys[k] != rhs:
            return False
    return True


@dataclass
class DecideOutcome:
    status: str  # "equivalent" | "not_equivalent" | "unknown"
    delta: GaugeParameter | None = None
    witness: SmallAutomorphism | None = None
    order: int | None = None

    @property
    def equivalent(self):
        return self.status == "equivalent"


def equiv_decide(xi: MCElement, eta: MCElement, mode="weak") -> DecideOutcome:
    """Decide orbit equivalence in the given mode; any witness is re-verified.

    Sound-if-found beyond square-zero coefficients, mirroring the gauge
    solver; a positive answer always ships with the small automorphism
    exp(delta) whose action has been checked to carry xi to eta exactly.
    """
    outcome = gauge_solve(xi, eta, mode)
    if outcome.status == "not_equivalent":
        return DecideOutcome("not_equivalent")
    if outcome.status == "not_found_at_order":
        return DecideOutcome("unknown", order=outcome.order)
    delta = outcome.delta
    pi = exp_derivation(delta)
    acted = act_on_standard(pi, xi)
    if acted != eta:
        raise InternalInconsistency("gauge witness failed the action re-verification")
    return DecideOutcome("equivalent", delta=delta, witness=pi)
