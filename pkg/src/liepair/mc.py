"""Maurer-Cartan theory over a local Artinian algebra K + m.

Degree-1 elements xi in Omega^1 tensor m are stored as one Omega component
per coefficient-algebra basis vector (the unit component must vanish).  The
brackets extend coefficient-bilinearly, multiplying m-parts through the
algebra table, which makes the extended graded algebra nilpotent and every
series here a finite sum.

The cubic Maurer-Cartan residual is d xi + (1/2)[xi,xi]_2 + (1/6)[xi,xi,xi]_3.
Gauge equivalence uses the exponential recursion for a nilpotent derivation
parameter delta:

    e^0 = -xi,
    e^1 = [delta]_1 - [delta,xi]_2 + (1/2)[delta,xi,xi]_3,
    e^(k+1) = [delta,e^k]_2 - [delta,xi,e^k]_3
              + (1/2) sum_(k1+k2=k) k!/(k1!k2!) [delta,e^k1,e^k2]_3,

and acts by  exp(delta) * xi = xi - sum_(k>=1) e^k/k! .
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from . import linalg
from .artin import ArtinAlgebra, ArtinMorphism
from .liealg import (
    Derivation,
    LiePair,
    derivation_space,
    inner_derivation,
    inner_derivation_space,
)
from .omega import OmegaElement, b1_der, b2_der, b3_der, bracket2, bracket3, d_ce
from .scalars import ONE, ZERO


class MCError(ValueError):
    pass


class NotVerified(MCError):
    pass


class InternalInconsistency(RuntimeError):
    """A result failed its own re-verification; always a bug, never returned."""


class OmegaFamily:
    """An element of Omega^degree tensor A, one component per algebra basis vector."""

    def __init__(self, pair: LiePair, algebra: ArtinAlgebra, degree: int, comps=None):
        self.pair = pair
        self.algebra = algebra
        self.degree = degree
        if comps is None:
            comps = [OmegaElement.zero(pair, degree) for _ in range(algebra.dim)]
        if len(comps) != algebra.dim:
            raise MCError("component list does not match algebra dimension")
        self.comps = list(comps)

    def _compat(self, other):
        if (
            other.pair != self.pair
            or other.algebra != self.algebra
            or other.degree != self.degree
        ):
            raise MCError("mismatched pair, algebra, or degree")

    def __add__(self, other):
        self._compat(other)
        return type(self)._build(
            self.pair, self.algebra, self.degree,
            [a + b for a, b in zip(self.comps, other.comps)],
        )

    def __sub__(self, other):
        self._compat(other)
        return type(self)._build(
            self.pair, self.algebra, self.degree,
            [a - b for a, b in zip(self.comps, other.comps)],
        )

    def __neg__(self):
        return type(self)._build(
            self.pair, self.algebra, self.degree, [-a for a in self.comps]
        )

    def scale(self, c):
        return type(self)._build(
            self.pair, self.algebra, self.degree, [a.scale(c) for a in self.comps]
        )

    @classmethod
    def _build(cls, pair, algebra, degree, comps):
        if cls is OmegaFamily:
            return OmegaFamily(pair, algebra, degree, comps)
        # subclasses fix the degree themselves
        return cls(pair, algebra, comps)

    def is_zero(self):
        return all(c.is_zero() for c in self.comps)

    def __eq__(self, other):
        return (
            isinstance(other, OmegaFamily)
            and other.pair == self.pair
            and other.algebra == self.algebra
            and other.degree == self.degree
            and all(a == b for a, b in zip(other.comps, self.comps))
        )

    def min_mdegree(self):
        """Smallest m-adic degree carrying a nonzero component (None if zero)."""
        degs = [
            self.algebra.mdegrees[i]
            for i, c in enumerate(self.comps)
            if i > 0 and not c.is_zero()
        ]
        return min(degs) if degs else None

    def supported_in_power(self, k):
        """True when every nonzero component sits in m^k."""
        return all(
            c.is_zero() or (i > 0 and self.algebra.mdegrees[i] >= k)
            for i, c in enumerate(self.comps)
        )

    def truncate_above(self, k):
        """Kill components of m-adic degree > k."""
        comps = [
            c if (i == 0 or self.algebra.mdegrees[i] <= k) else OmegaElement.zero(self.pair, self.degree)
            for i, c in enumerate(self.comps)
        ]
        return type(self)._build(self.pair, self.algebra, self.degree, comps)


class MCElement(OmegaFamily):
    """Candidate Maurer-Cartan element: a degree-1 family supported in m."""

    def __init__(self, pair, algebra, comps=None):
        super().__init__(pair, algebra, 1, comps)
        if not self.comps[0].is_zero():
            raise MCError("Maurer-Cartan candidates may not have a unit component")
        self._verified = None

    @classmethod
    def zero(cls, pair, algebra):
        return cls(pair, algebra)

    @classmethod
    def from_terms(cls, pair, algebra, terms):
        """Build from (m_index, OmegaElement) pairs."""
        comps = [OmegaElement.zero(pair, 1) for _ in range(algebra.dim)]
        for idx, el in terms:
            if idx == 0:
                raise MCError("unit-component term not allowed")
            comps[idx] = comps[idx] + el
        return cls(pair, algebra, comps)

    @property
    def verified(self):
        return bool(self._verified)


class GaugeParameter:
    """A derivation family delta in Der(l) tensor m, with a mode restriction.

    Modes: ``weak`` allows any derivation components, ``semistrict``
    restricts to the span of inner derivations, ``matched`` to inner
    derivations along the splitting complement (ad_{j(b)}).
    """

    MODES = ("weak", "semistrict", "matched")

    def __init__(self, pair, algebra, comps=None, mode="weak", check=True):
        if mode not in self.MODES:
            raise MCError(f"unknown gauge mode {mode!r}")
        self.pair = pair
        self.algebra = algebra
        self.mode = mode
        if comps is None:
            comps = [Derivation.zero(pair.lie) for _ in range(algebra.dim)]
        if len(comps) != algebra.dim:
            raise MCError("component list does not match algebra dimension")
        self.comps = list(comps)
        if not self.comps[0].is_zero():
            raise MCError("gauge parameters may not have a unit component")
        if check:
            self._check_mode()

    def _check_mode(self):
        for i, d in enumerate(self.comps):
            if d.is_zero():
                continue
            if not d._leibniz_ok():
                raise MCError(f"component {i} is not a derivation")
        if self.mode == "semistrict":
            span = [d.flat() for d in inner_derivation_space(self.pair.lie)]
            for i, d in enumerate(self.comps):
                if not d.is_zero() and not linalg.row_space_contains(span, d.flat()):
                    raise MCError(f"component {i} is not an inner derivation")
        elif self.mode == "matched":
            span = [d.flat() for d in matched_derivation_generators(self.pair)]
            for i, d in enumerate(self.comps):
                if not d.is_zero() and not linalg.row_space_contains(span, d.flat()):
                    raise MCError(f"component {i} is not of the form ad_j(b)")

    def is_zero(self):
        return all(c.is_zero() for c in self.comps)

    def __eq__(self, other):
        return (
            isinstance(other, GaugeParameter)
            and other.pair == self.pair
            and other.algebra == self.algebra
            and all(a == b for a, b in zip(other.comps, self.comps))
        )

    @classmethod
    def zero(cls, pair, algebra, mode="weak"):
        return cls(pair, algebra, mode=mode, check=False)


def matched_derivation_generators(pair):
    """The derivations ad_{j(e_b)} over the complement basis."""
    out = []
    for m in range(pair.q):
        bvec = [ONE if i == m else ZERO for i in range(pair.q)]
        out.append(inner_derivation(pair.lie, pair.include_b(bvec)))
    return out


def _triple_product(algebra, a, b, c):
    """Coefficient vector of m_a * m_b * m_c."""
    ab = algebra.table[a][b]
    out = [ZERO] * algebra.dim
    for s, coeff in enumerate(ab):
        if coeff:
            for k, t in enumerate(algebra.table[s][c]):
                if t:
                    out[k] += coeff * t
    return out


def _lift2(pair, algebra, op, comps1, comps2, out_degree):
    """Tensor extension of a bilinear bracket through the algebra table."""
    out = OmegaFamily(pair, algebra, out_degree)
    for a, x in enumerate(comps1):
        if x.is_zero():
            continue
        for b, y in enumerate(comps2):
            if y.is_zero():
                continue
            val = op(x, y)
            if val.is_zero():
                continue
            for k, t in enumerate(algebra.table[a][b]):
                if t:
                    out.comps[k] = out.comps[k] + val.scale(t)
    return out


def _lift3(pair, algebra, op, comps1, comps2, comps3, out_degree):
    """Tensor extension of a trilinear bracket through the algebra table."""
    out = OmegaFamily(pair, algebra, out_degree)
    for a, x in enumerate(comps1):
        if x.is_zero():
            continue
        for b, y in enumerate(comps2):
            if y.is_zero():
                continue
            for c, z in enumerate(comps3):
                if z.is_zero():
                    continue
                val = op(x, y, z)
                if val.is_zero():
                    continue
                prod = _triple_product(algebra, a, b, c)
                for k, t in enumerate(prod):
                    if t:
                        out.comps[k] = out.comps[k] + val.scale(t)
    return out


def d_family(fam: OmegaFamily) -> OmegaFamily:
    return OmegaFamily(
        fam.pair, fam.algebra, fam.degree + 1, [d_ce(c) for c in fam.comps]
    )


def b1_family(delta: GaugeParameter) -> OmegaFamily:
    pair, algebra = delta.pair, delta.algebra
    comps = [
        b1_der(pair, d) if not d.is_zero() else OmegaElement.zero(pair, 1)
        for d in delta.comps
    ]
    return OmegaFamily(pair, algebra, 1, comps)


def mc_residual(xi: MCElement) -> OmegaFamily:
    """Exact residual d xi + (1/2)[xi,xi]_2 + (1/6)[xi,xi,xi]_3 in Omega^2 tensor m."""
    pair, algebra = xi.pair, xi.algebra
    res = d_family(xi)
    q = _lift2(pair, algebra, bracket2, xi.comps, xi.comps, 2)
    res = res + q.scale(Fraction(1, 2))
    c = _lift3(pair, algebra, bracket3, xi.comps, xi.comps, xi.comps, 2)
    res = res + c.scale(Fraction(1, 6))
    return res


def is_mc(xi: MCElement) -> bool:
    if xi._verified is None:
        xi._verified = mc_residual(xi).is_zero()
    return xi._verified


def _require_mc(xi):
    if not is_mc(xi):
        raise NotVerified("element does not satisfy the Maurer-Cartan equation")


def gauge_exp_terms(delta: GaugeParameter, xi: MCElement, kmax=None):
    """The recursion terms e^k for k = 0..kmax (kmax defaults to the nilpotency order).

    Each e^k lies in Omega^1 tensor m^k, so any kmax at or above the algebra's
    nilpotency order gives the exact full list.
    """
    _require_mc(xi)
    if delta.pair != xi.pair or delta.algebra != xi.algebra:
        raise MCError("gauge parameter and element live on different data")
    pair, algebra = xi.pair, xi.algebra
    if kmax is None:
        kmax = algebra.nilpotency_order
    terms = [-OmegaFamily(pair, algebra, 1, xi.comps)]
    if kmax == 0:
        return terms
    dcomps = delta.comps
    e1 = b1_family(delta)
    e1 = e1 - _lift2(pair, algebra, lambda d, x: b2_der(pair, d, x), dcomps, xi.comps, 1)
    e1 = e1 + _lift3(
        pair, algebra, lambda d, x, y: b3_der(pair, d, x, y), dcomps, xi.comps, xi.comps, 1
    ).scale(Fraction(1, 2))
    terms.append(e1)
    for k in range(1, kmax):
        prev = terms[k]
        nxt = _lift2(pair, algebra, lambda d, x: b2_der(pair, d, x), dcomps, prev.comps, 1)
        nxt = nxt - _lift3(
            pair, algebra, lambda d, x, y: b3_der(pair, d, x, y), dcomps, xi.comps, prev.comps, 1
        )
        for k1 in range(1, k):
            k2 = k - k1
            contrib = _lift3(
                pair,
                algebra,
                lambda d, x, y: b3_der(pair, d, x, y),
                dcomps,
                terms[k1].comps,
                terms[k2].comps,
                1,
            )
            nxt = nxt + contrib.scale(Fraction(comb(k, k1), 2))
        terms.append(nxt)
    return terms


def gauge_act(delta: GaugeParameter, xi: MCElement) -> MCElement:
    """exp(delta) * xi = xi - sum_(k>=1) e^k/k!; the result is re-verified MC."""
    _require_mc(xi)
    pair, algebra = xi.pair, xi.algebra
    terms = gauge_exp_terms(delta, xi)
    acc = OmegaFamily(pair, algebra, 1, xi.comps)
    for k in range(1, len(terms)):
        acc = acc - terms[k].scale(Fraction(1, factorial(k)))
    out = MCElement(pair, algebra, acc.comps)
    if not is_mc(out):
        raise InternalInconsistency("gauge action produced a non-MC element")
    return out


@dataclass
class SolveOutcome:
    status: str  # "found" | "not_equivalent" | "not_found_at_order"
    delta: GaugeParameter | None = None
    order: int | None = None

    @property
    def found(self):
        return self.status == "found"


def _mode_basis(pair, mode):
    if mode == "weak":
        basis = derivation_space(pair.lie)
    elif mode == "semistrict":
        basis = inner_derivation_space(pair.lie)
    elif mode == "matched":
        gens = matched_derivation_generators(pair)
        rows = [g.flat() for g in gens if not g.is_zero()]
        if not rows:
            return []
        rr = linalg.rref(rows)[0][: linalg.rank(rows)]
        basis = [Derivation.from_flat(pair.lie, v) for v in rr]
    else:
        raise MCError(f"unknown gauge mode {mode!r}")
    return basis


def gauge_solve(xi: MCElement, eta: MCElement, mode="weak") -> SolveOutcome:
    """Search for delta with gauge_act(delta, xi) == eta, order by order in m.

    At each m-adic order k the unknown component enters only through the
    unary bracket, so the step is a linear solve over the mode's derivation
    space.  Over a square-zero maximal ideal the order-1 step is the whole
    problem and infeasibility is a sound "not equivalent"; at deeper orders
    an infeasible step reports not_found_at_order(k), since kernel choices
    made at lower orders are not backtracked (sound-if-found, incomplete).
    Any returned delta has been re-verified exactly.
    """
    _require_mc(xi)
    _require_mc(eta)
    if xi.pair != eta.pair or xi.algebra != eta.algebra:
        raise MCError("elements live on different data")
    pair, algebra = xi.pair, xi.algebra
    if not algebra.graded_adapted:
        raise MCError("algebra basis is not adapted to the m-adic filtration")
    basis = _mode_basis(pair, mode)
    columns = [b1_der(pair, d).flat() for d in basis]
    matrix = [list(col) for col in zip(*columns)] if columns else []
    n_unknowns = len(basis)

    delta_comps = [Derivation.zero(pair.lie) for _ in range(algebra.dim)]
    nilp = algebra.nilpotency_order
    for order in range(1, nilp + 1):
        current = GaugeParameter(pair, algebra, delta_comps, mode=mode, check=False)
        gap = OmegaFamily(pair, algebra, 1, gauge_act(current, xi).comps) - OmegaFamily(
            pair, algebra, 1, eta.comps
        )
        for m_idx in range(1, algebra.dim):
            if algebra.mdegrees[m_idx] != order:
                continue
            rhs = gap.comps[m_idx].flat()
            if linalg.is_zero_vec(rhs):
                continue
            if not n_unknowns:
                sol = None
            else:
                sol = linalg.solve(matrix, rhs)
            if sol is None:
                if nilp == 1:
                    return SolveOutcome("not_equivalent")
                return SolveOutcome("not_found_at_order", order=order)
            d = Derivation.zero(pair.lie)
            for c, b in zip(sol, basis):
                if c:
                    d = d + b.scale(c)
            delta_comps[m_idx] = delta_comps[m_idx] + d
    delta = GaugeParameter(pair, algebra, delta_comps, mode=mode, check=False)
    if gauge_act(delta, xi) != eta:
        raise InternalInconsistency("order-by-order gauge solution failed re-verification")
    return SolveOutcome("found", delta=delta)


@dataclass
class ExtendOutcome:
    status: str  # "already_mc" | "extended" | "obstructed"
    element: MCElement | None = None
    order: int | None = None
    obstruction: list | None = None  # (m_index, Omega^2 representative) pairs

    @property
    def extended(self):
        return self.status in ("already_mc", "extended")


def mc_extend(xi: MCElement) -> ExtendOutcome:
    """One order-raising step of the obstruction calculus.

    If xi is MC modulo m^k (k minimal with a nonzero residual component),
    solves d c = -o_k degreewise; on success returns xi + c, which is MC
    modulo m^(k+1).  Otherwise returns the obstructing residual components,
    each an exact Chevalley-Eilenberg cocycle representing a nonzero class.
    """
    pair, algebra = xi.pair, xi.algebra
    if not algebra.graded_adapted:
        raise MCError("algebra basis is not adapted to the m-adic filtration")
    res = mc_residual(xi)
    order = res.min_mdegree()
    if order is None:
        xi._verified = True
        return ExtendOutcome("already_mc", element=xi)
    corrections = [OmegaElement.zero(pair, 1) for _ in range(algebra.dim)]
    blocked = []
    # Matrix of d: Omega^1 -> Omega^2 in flat coordinates.
    dim1 = len(OmegaElement.zero(pair, 1).flat())
    cols = []
    for i in range(dim1):
        flat = [ONE if t == i else ZERO for t in range(dim1)]
        cols.append(d_ce(OmegaElement.from_flat(pair, 1, flat)).flat())
    dmat = [list(row) for row in zip(*cols)] if cols else []
    for m_idx in range(1, algebra.dim):
        if algebra.mdegrees[m_idx] != order:
            continue
        o = res.comps[m_idx]
        if o.is_zero():
            continue
        if not d_ce(o).is_zero():
            raise InternalInconsistency("obstruction component is not a cocycle")
        sol = linalg.solve(dmat, [-v for v in o.flat()]) if dmat else None
        if sol is None:
            blocked.append((m_idx, o))
        else:
            corrections[m_idx] = OmegaElement.from_flat(pair, 1, sol)
    if blocked:
        return ExtendOutcome("obstructed", order=order, obstruction=blocked)
    out = MCElement(
        pair, algebra, [a + b for a, b in zip(xi.comps, corrections)]
    )
    new_res = mc_residual(out)
    new_order = new_res.min_mdegree()
    if new_order is not None and new_order <= order:
        raise InternalInconsistency("extension step did not raise the residual order")
    if new_order is None:
        out._verified = True
    return ExtendOutcome("extended", element=out, order=order)


def mc_push(theta: ArtinMorphism, xi: MCElement) -> MCElement:
    """Push a Maurer-Cartan element through a coefficient-algebra morphism."""
    _require_mc(xi)
    if theta.source != xi.algebra:
        raise MCError("morphism source does not match the element's algebra")
    pair = xi.pair
    target = theta.target
    comps = [OmegaElement.zero(pair, 1) for _ in range(target.dim)]
    for a, comp in enumerate(xi.comps):
        if comp.is_zero():
            continue
        for b in range(target.dim):
            c = theta.matrix[b][a]
            if c:
                comps[b] = comps[b] + comp.scale(c)
    out = MCElement(pair, target, comps)
    if not is_mc(out):
        raise InternalInconsistency("morphism push-forward broke the MC equation")
    return out


def push_gauge(theta: ArtinMorphism, delta: GaugeParameter) -> GaugeParameter:
    """Push a gauge parameter through a coefficient-algebra morphism."""
    if theta.source != delta.algebra:
        raise MCError("morphism source does not match the parameter's algebra")
    target = theta.target
    comps = [Derivation.zero(delta.pair.lie) for _ in range(target.dim)]
    for a, comp in enumerate(delta.comps):
        if comp.is_zero():
            continue
        for b in range(target.dim):
            c = theta.matrix[b][a]
            if c:
                comps[b] = comps[b] + comp.scale(c)
    return GaugeParameter(delta.pair, target, comps, mode=delta.mode, check=False)
