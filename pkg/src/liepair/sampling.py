"""Seeded random generators shared by the verify harness and the test suite.

Every generator takes an explicit random.Random so campaigns are
reproducible bit for bit from a seed, which the CLI exposes.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .artin import ArtinAlgebra, ArtinElement
from .cohomology import kernel_basis
from .liealg import Derivation, LiePair
from .mc import GaugeParameter, MCElement, _mode_basis, gauge_act, is_mc, mc_extend
from .omega import OmegaElement


def random_scalar(rng, lo=-3, hi=3):
    return Fraction(rng.randint(lo, hi))


def random_omega(pair: LiePair, degree: int, rng) -> OmegaElement:
    el = OmegaElement(pair, degree)
    el.rows = [[random_scalar(rng) for _ in range(pair.q)] for _ in el.rows]
    return el


def random_cocycle(pair: LiePair, rng) -> OmegaElement:
    """Random element of ker(d: Omega^1 -> Omega^2)."""
    basis = kernel_basis(pair, 1)
    dim1 = len(OmegaElement.zero(pair, 1).flat())
    flat = [Fraction(0)] * dim1
    for v in basis:
        c = random_scalar(rng, -2, 2)
        if c:
            flat = linalg.vec_add(flat, linalg.vec_scale(c, v))
    return OmegaElement.from_flat(pair, 1, flat)


def random_derivation(pair: LiePair, rng, mode="weak") -> Derivation:
    basis = _mode_basis(pair, mode)
    d = Derivation.zero(pair.lie)
    for b in basis:
        c = random_scalar(rng, -2, 2)
        if c:
            d = d + b.scale(c)
    return d


def random_gauge(pair: LiePair, algebra: ArtinAlgebra, rng, mode="weak") -> GaugeParameter:
    comps = [Derivation.zero(pair.lie)]
    for _ in range(1, algebra.dim):
        comps.append(random_derivation(pair, rng, mode))
    return GaugeParameter(pair, algebra, comps, mode=mode, check=False)


def random_mc(pair: LiePair, algebra: ArtinAlgebra, rng, attempts=6) -> MCElement:
    """A verified random Maurer-Cartan element.

    Tries order-by-order extensions of random degree-1 cocycles; whatever
    base point comes out (zero if every try is obstructed) is then moved by
    a random gauge transformation, which keeps the equation exact and
    spreads the sample across the orbit.
    """
    base = MCElement.zero(pair, algebra)
    for _ in range(attempts):
        seed = MCElement.from_terms(pair, algebra, [(1, random_cocycle(pair, rng))])
        cur, ok = seed, True
        for _ in range(algebra.nilpotency_order + 1):
            out = mc_extend(cur)
            if out.status == "obstructed":
                ok = False
                break
            cur = out.element
            if is_mc(cur):
                break
        if ok and is_mc(cur):
            base = cur
            break
    return gauge_act(random_gauge(pair, algebra, rng), base)


def random_element(algebra: ArtinAlgebra, rng) -> ArtinElement:
    return algebra.element([random_scalar(rng) for _ in range(algebra.dim)])


def random_unit(algebra: ArtinAlgebra, rng) -> ArtinElement:
    coeffs = [random_scalar(rng) for _ in range(algebra.dim)]
    while not coeffs[0]:
        coeffs[0] = random_scalar(rng)
    return algebra.element(coeffs)
