"""Local Artinian coefficient algebras with exact multiplication tables.

An algebra is given by an ordered basis whose index 0 is the unit and a
table ``c[i][j]`` with basis_i * basis_j = sum_k c[i][j][k] basis_k.  The
span m of the non-unit basis vectors must be a nilpotent ideal; that forces
the algebra to be local and makes every element with nonzero unit
coefficient invertible by a finite Neumann series.

The stored nilpotency order N satisfies m^N != 0 and m^(N+1) == 0 (so the
dual numbers have N = 1).  Validation also assigns each non-unit basis
vector its m-adic degree, the largest k with the vector inside m^k; the
order-by-order solvers elsewhere filter coefficients by this degree and
require the basis to be adapted to the filtration (every m^k spanned by
basis vectors of degree >= k), which holds for all built-in algebras.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .scalars import ONE, ZERO


class ArtinError(ValueError):
    pass


class NotAUnit(ArtinError):
    pass


@dataclass
class AxiomCheck:
    name: str
    ok: bool
    witness: tuple = ()


@dataclass
class ValidationReport:
    ok: bool
    checks: list = field(default_factory=list)
    nilpotency_order: int | None = None
    mdegrees: list | None = None
    graded_adapted: bool | None = None

    def first_failure(self):
        for c in self.checks:
            if not c.ok:
                return c
        return None


def _as_table(raw):
    n = len(raw)
    table = []
    for i in range(n):
        if len(raw[i]) != n:
            raise ArtinError("multiplication table is not square")
        row = []
        for j in range(n):
            vec = raw[i][j]
            if len(vec) != n:
                raise ArtinError("table entry has wrong length")
            row.append([x if isinstance(x, Fraction) else Fraction(x) for x in vec])
        table.append(row)
    return table


def validate_artin(raw_table):
    """Check the local-Artinian axioms on a raw table; never raises.

    Reports one entry per axiom (commutative, unital, associative, m ideal,
    m nilpotent) with a witness index tuple on the first violation, plus the
    nilpotency order and m-adic basis degrees on success.
    """
    table = _as_table(raw_table)
    n = len(table)
    checks = []

    comm_witness = None
    for i in range(n):
        for j in range(i + 1, n):
            if table[i][j] != table[j][i]:
                comm_witness = (i, j)
                break
        if comm_witness:
            break
    checks.append(AxiomCheck("commutative", comm_witness is None, comm_witness or ()))

    unit_witness = None
    for i in range(n):
        expected = [ONE if k == i else ZERO for k in range(n)]
        if table[0][i] != expected:
            unit_witness = (0, i)
            break
    checks.append(AxiomCheck("unital", unit_witness is None, unit_witness or ()))

    assoc_witness = None
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = [ZERO] * n
                for m, c in enumerate(table[i][j]):
                    if c:
                        left = linalg.vec_add(left, linalg.vec_scale(c, table[m][k]))
                right = [ZERO] * n
                for m, c in enumerate(table[j][k]):
                    if c:
                        right = linalg.vec_add(right, linalg.vec_scale(c, table[i][m]))
                if left != right:
                    assoc_witness = (i, j, k)
                    break
            if assoc_witness:
                break
        if assoc_witness:
            break
    checks.append(AxiomCheck("associative", assoc_witness is None, assoc_witness or ()))

    ideal_witness = None
    for i in range(1, n):
        for j in range(1, n):
            if table[i][j][0]:
                ideal_witness = (i, j)
                break
        if ideal_witness:
            break
    checks.append(AxiomCheck("maximal_ideal", ideal_witness is None, ideal_witness or ()))

    # Powers of m by iterated products until the span stabilizes.
    nilpotent = True
    order = None
    mdegrees = None
    adapted = None
    if all(c.ok for c in checks):
        powers = []  # powers[k-1] = RREF basis of m^k
        current = [[ONE if c == i else ZERO for c in range(n)] for i in range(1, n)]
        current = linalg.rref(current)[0][: linalg.rank(current)]
        k = 1
        while current:
            powers.append(current)
            nxt = []
            for v in current:
                for j in range(1, n):
                    prod = [ZERO] * n
                    for m, c in enumerate(v):
                        if c:
                            prod = linalg.vec_add(prod, linalg.vec_scale(c, table[m][j]))
                    if not linalg.is_zero_vec(prod):
                        nxt.append(prod)
            nxt = linalg.rref(nxt)[0][: linalg.rank(nxt)] if nxt else []
            if nxt and len(nxt) == len(current):
                nilpotent = False
                break
            current = nxt
            k += 1
            if k > n + 1:
                nilpotent = False
                break
        if nilpotent:
            order = len(powers)
            mdegrees = [0] * n
            for a in range(1, n):
                e = [ONE if c == a else ZERO for c in range(n)]
                deg = 1  # every non-unit basis vector lies in m^1 by construction
                for kk, basis in enumerate(powers, start=1):
                    if linalg.row_space_contains(basis, e):
                        deg = kk
                mdegrees[a] = deg
            adapted = True
            for kk, basis in enumerate(powers, start=1):
                spanned = [
                    [ONE if c == a else ZERO for c in range(n)]
                    for a in range(1, n)
                    if mdegrees[a] >= kk
                ]
                if linalg.rank(spanned) != len(basis):
                    adapted = False
                    break
    checks.append(AxiomCheck("m_nilpotent", nilpotent, ()))

    ok = all(c.ok for c in checks)
    return ValidationReport(
        ok=ok,
        checks=checks,
        nilpotency_order=order if ok else None,
        mdegrees=mdegrees if ok else None,
        graded_adapted=adapted if ok else None,
    )


class ArtinAlgebra:
    """A validated local Artinian algebra, immutable after construction."""

    def __init__(self, raw_table, basis=None, name=None):
        report = validate_artin(raw_table)
        if not report.ok:
            bad = report.first_failure()
            raise ArtinError(f"not a local Artinian algebra: {bad.name} fails at {bad.witness}")
        self.table = _as_table(raw_table)
        self.dim = len(self.table)
        self.basis = list(basis) if basis else ["1"] + [f"m{i}" for i in range(1, self.dim)]
        if len(self.basis) != self.dim:
            raise ArtinError("basis label count does not match dimension")
        self.name = name
        self.nilpotency_order = report.nilpotency_order
        self.mdegrees = report.mdegrees
        self.graded_adapted = report.graded_adapted

    def __repr__(self):
        return f"ArtinAlgebra({self.name or self.basis}, dim={self.dim})"

    def __eq__(self, other):
        return isinstance(other, ArtinAlgebra) and self.table == other.table

    def mul_coeffs(self, x, y):
        """Product of two coefficient vectors through the table."""
        out = [ZERO] * self.dim
        for i, ci in enumerate(x):
            if not ci:
                continue
            for j, cj in enumerate(y):
                if not cj:
                    continue
                c = ci * cj
                for k, t in enumerate(self.table[i][j]):
                    if t:
                        out[k] += c * t
        return out

    def element(self, coeffs):
        return ArtinElement(self, coeffs)

    def zero(self):
        return ArtinElement(self, [ZERO] * self.dim)

    def one(self):
        return ArtinElement(self, [ONE] + [ZERO] * (self.dim - 1))

    def basis_element(self, i):
        return ArtinElement(self, [ONE if k == i else ZERO for k in range(self.dim)])


class ArtinElement:
    __slots__ = ("algebra", "coeffs")

    def __init__(self, algebra, coeffs):
        if len(coeffs) != algebra.dim:
            raise ArtinError("coefficient list length does not match algebra dimension")
        self.algebra = algebra
        self.coeffs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]

    def _same(self, other):
        if not isinstance(other, ArtinElement) or other.algebra is not self.algebra:
            raise ArtinError("elements belong to different algebras")

    def __add__(self, other):
        self._same(other)
        return ArtinElement(self.algebra, linalg.vec_add(self.coeffs, other.coeffs))

    def __sub__(self, other):
        self._same(other)
        return ArtinElement(self.algebra, linalg.vec_sub(self.coeffs, other.coeffs))

    def __neg__(self):
        return ArtinElement(self.algebra, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, ArtinElement):
            self._same(other)
            return ArtinElement(self.algebra, self.algebra.mul_coeffs(self.coeffs, other.coeffs))
        return ArtinElement(self.algebra, [Fraction(other) * c for c in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, ArtinElement)
            and other.algebra == self.algebra
            and other.coeffs == self.coeffs
        )

    def __repr__(self):
        terms = [
            f"{c}*{b}" for c, b in zip(self.coeffs, self.algebra.basis) if c
        ]
        return " + ".join(terms) if terms else "0"

    def ev(self):
        """Evaluation at the maximal ideal: the unit-basis coefficient."""
        return self.coeffs[0]

    def is_unit(self):
        return bool(self.coeffs[0])

    def inverse(self):
        """Exact inverse via the finite Neumann series; requires ev != 0."""
        c = self.ev()
        if not c:
            raise NotAUnit("element has zero evaluation, not invertible")
        # a = c(1 + m) with m nilpotent; a^-1 = (1/c) sum (-m)^k.
        m = ArtinElement(self.algebra, [x / c for x in self.coeffs]) - self.algebra.one()
        neg_m = -m
        acc = self.algebra.one()
        term = self.algebra.one()
        for _ in range(self.algebra.nilpotency_order):
            term = term * neg_m
            if linalg.is_zero_vec(term.coeffs):
                break
            acc = acc + term
        return ArtinElement(self.algebra, [x / c for x in acc.coeffs])


class ArtinMorphism:
    """Unital multiplicative map between Artinian algebras sending m into m'."""

    def __init__(self, source, target, matrix):
        self.source = source
        self.target = target
        if len(matrix) != target.dim or any(len(r) != source.dim for r in matrix):
            raise ArtinError("morphism matrix has wrong shape")
        self.matrix = [[Fraction(x) for x in row] for row in matrix]
        self._validate()

    def _validate(self):
        unit_img = [row[0] for row in self.matrix]
        if unit_img != [ONE] + [ZERO] * (self.target.dim - 1):
            raise ArtinError("morphism does not map unit to unit")
        for j in range(1, self.source.dim):
            if self.matrix[0][j]:
                raise ArtinError("morphism does not map the maximal ideal into m'")
        for i in range(self.source.dim):
            for j in range(self.source.dim):
                prod_then_map = self.apply_coeffs(self.source.table[i][j])
                a = self.apply_coeffs(
                    [ONE if k == i else ZERO for k in range(self.source.dim)]
                )
                b = self.apply_coeffs(
                    [ONE if k == j else ZERO for k in range(self.source.dim)]
                )
                map_then_prod = self.target.mul_coeffs(a, b)
                if prod_then_map != map_then_prod:
                    raise ArtinError(f"morphism not multiplicative at basis pair ({i},{j})")

    def apply_coeffs(self, coeffs):
        return linalg.mat_vec(self.matrix, coeffs)

    def apply(self, el):
        if el.algebra != self.source:
            raise ArtinError("element not in the morphism source algebra")
        return ArtinElement(self.target, self.apply_coeffs(el.coeffs))

    @classmethod
    def identity(cls, algebra):
        return cls(algebra, algebra, linalg.identity(algebra.dim))

    @classmethod
    def evaluation(cls, algebra):
        """The quotient map onto the 1-dimensional algebra K."""
        k = ArtinAlgebra([[[ONE]]], basis=["1"], name="K")
        return cls(algebra, k, [[ONE] + [ZERO] * (algebra.dim - 1)])


def _monomials_below(r, d):
    """Exponent tuples of total degree < d in degree-then-lex order."""
    out = []
    for total in range(d):
        out.extend(
            sorted(
                [e for e in itertools.product(range(total + 1), repeat=r) if sum(e) == total],
                reverse=True,
            )
        )
    return out


def _monomial_label(expo):
    if sum(expo) == 0:
        return "1"
    parts = []
    for i, e in enumerate(expo):
        if not e:
            continue
        var = "t" if len(expo) == 1 else f"t{i + 1}"
        parts.append(var if e == 1 else f"{var}^{e}")
    return "*".join(parts)


def build_truncated(r, d, name=None):
    """K[t1..tr]/(t1..tr)^d with the monomial basis of degree < d.

    The maximal-ideal nilpotency order is d - 1; r = 1, d = 2 gives the
    dual numbers.
    """
    if r < 1:
        raise ArtinError("need at least one variable")
    if d < 2:
        raise ArtinError("truncation degree below 2 is not a proper thickening")
    monos = _monomials_below(r, d)
    index = {m: i for i, m in enumerate(monos)}
    n = len(monos)
    table = [[[ZERO] * n for _ in range(n)] for _ in range(n)]
    for i, mi in enumerate(monos):
        for j, mj in enumerate(monos):
            prod = tuple(a + b for a, b in zip(mi, mj))
            if sum(prod) < d:
                table[i][j][index[prod]] = ONE
    return ArtinAlgebra(table, basis=[_monomial_label(m) for m in monos], name=name)


def dual_numbers():
    return build_truncated(1, 2, name="dual")


def square_zero(r, name=None):
    """K + m with dim m = r and m^2 = 0."""
    return build_truncated(r, 2, name=name)

