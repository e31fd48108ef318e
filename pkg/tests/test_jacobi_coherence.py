"""Generic graded Jacobi coherence of the implemented bracket family.

Assembles the n-Jacobi sum

    sum_i (-1)^i sum_(sigma in Sh(i, n-i)) chi(sigma)
        [[x_sigma(1) .. x_sigma(i)]_i, x_sigma(i+1) .. x_sigma(n)]_(n-i+1)

from scratch -- Koszul signs included -- and dispatches every inner and
outer bracket to the library's implementations (derivations in degree 0,
Omega^k in degree k; brackets of arity >= 4 and ternary brackets with two
derivation slots vanish; basic 2- and 3-brackets exist on degree-1 inputs
only).  For every argument profile expressible inside that family the sum
must vanish identically; profiles that would need a basic bracket with a
degree >= 2 argument are reported unexpressible, pinning down the boundary
of the implemented calculus.

This is a sign oracle fully independent of the hand-derived identities in
test_omega.py: it re-derives them and extends the coverage to arity 4.
"""

import itertools
import random
from fractions import Fraction

import pytest

from liepair.catalog import get_pair
from liepair.liealg import Derivation, commutator
from liepair.omega import OmegaElement, b1_der, b2_der, b3_der, bracket2, bracket3, d_ce
from liepair.sampling import random_derivation, random_omega

F = Fraction

PAIRS = ["b3", "sl2_borel", "aff1", "heis3_center", "gl2_diag", "abelian_4_2"]


def _deg(x):
    return 0 if isinstance(x, Derivation) else x.degree


def _ders_first(args):
    """Stable-sort derivations to the front, tracking the graded swap sign."""
    items = list(args)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(items) - 1):
            a, b = items[i], items[i + 1]
            if not isinstance(a, Derivation) and isinstance(b, Derivation):
                items[i], items[i + 1] = b, a
                sign *= -1 * (-1) ** (_deg(a) * _deg(b))
                changed = True
    return items, sign


class OutOfScope(Exception):
    """The requested bracket needs formulas outside the implemented family."""


def graded_bracket(pair, *args):
    """The k-bracket on mixed arguments, via the library implementations.

    Returns a Derivation, an OmegaElement, or None for brackets that vanish
    by the family's conventions; raises OutOfScope where no formula exists.
    """
    items, sign = _ders_first(args)
    ders = [x for x in items if isinstance(x, Derivation)]
    oms = [x for x in items if not isinstance(x, Derivation)]
    k = len(args)
    if k == 1:
        val = b1_der(pair, ders[0]) if ders else d_ce(oms[0])
        return val, sign
    if k == 2:
        if len(ders) == 2:
            return commutator(ders[0], ders[1]), sign
        if len(ders) == 1:
            return b2_der(pair, ders[0], oms[0]), sign
        if all(o.degree == 1 for o in oms):
            return bracket2(oms[0], oms[1]), sign
        raise OutOfScope("basic 2-bracket with a degree != 1 argument")
    if k == 3:
        if len(ders) >= 2:
            return None, sign
        if len(ders) == 1:
            if any(o.degree < 1 for o in oms):
                raise OutOfScope("ternary derivation bracket with a degree-0 argument")
            return b3_der(pair, ders[0], oms[0], oms[1]), sign
        if all(o.degree == 1 for o in oms):
            return bracket3(oms[0], oms[1], oms[2]), sign
        raise OutOfScope("basic 3-bracket with a degree != 1 argument")
    return None, sign  # arity >= 4 vanishes in a cubic family


def _chi(perm, degs):
    """Permutation sign times the Koszul sign for the given input degrees."""
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign *= -1 * (-1) ** (degs[perm[j]] * degs[perm[i]])
    return sign


def _accumulate(total, value, coeff):
    if value is None:
        return total
    scaled = value.scale(F(coeff))
    return scaled if total is None else total + scaled


def n_jacobi_residual(pair, args):
    """The full n-Jacobi sum; raises OutOfScope when not expressible."""
    n = len(args)
    degs = [_deg(a) for a in args]
    total = None
    for i in range(1, n + 1):
        for first in itertools.combinations(range(n), i):
            second = tuple(t for t in range(n) if t not in first)
            perm = first + second
            chi = _chi(perm, degs)
            inner, s_in = graded_bracket(pair, *[args[t] for t in first])
            if inner is None:
                continue
            outer, s_out = graded_bracket(pair, inner, *[args[t] for t in second])
            if outer is None:
                continue
            total = _accumulate(total, outer, ((-1) ** i) * chi * s_in * s_out)
    return total


def _is_zero(residual):
    return residual is None or residual.is_zero()


def _profiles(pair, rng):
    d1, d2, d3 = (random_derivation(pair, rng) for _ in range(3))
    xi, eta, zeta = (random_omega(pair, 1, rng) for _ in range(3))
    out = {
        "unary derivation": [d1],
        "unary element": [xi],
        "two derivations": [d1, d2],
        "derivation and element": [d1, xi],
        "three derivations": [d1, d2, d3],
        "two derivations and an element": [d1, d2, xi],
        "derivation and two elements": [d1, xi, eta],
        "derivation and three elements": [d1, xi, eta, zeta],
    }
    if pair.rank >= 2:
        x2 = random_omega(pair, 2, rng)
        out["two derivations and a 2-form"] = [d1, d2, x2]
    return out


@pytest.mark.parametrize("name", PAIRS)
def test_jacobi_sums_vanish_on_expressible_profiles(name):
    rng = random.Random(hash(name) % 10000)
    pair = get_pair(name)
    for _ in range(3):
        for label, args in _profiles(pair, rng).items():
            residual = n_jacobi_residual(pair, args)
            assert _is_zero(residual), f"{name}: Jacobi sum fails on {label}"


def test_out_of_scope_profiles_are_flagged():
    pair = get_pair("b3")
    rng = random.Random(0)
    d = random_derivation(pair, rng)
    x2 = random_omega(pair, 2, rng)
    xi = random_omega(pair, 1, rng)
    with pytest.raises(OutOfScope):
        n_jacobi_residual(pair, [d, x2])  # needs basic 2-bracket on a 2-form
    with pytest.raises(OutOfScope):
        n_jacobi_residual(pair, [d, xi, x2])  # needs basic brackets on a 2-form
    with pytest.raises(OutOfScope):
        n_jacobi_residual(pair, [xi, eta := random_omega(pair, 1, rng), x2])


def test_quartic_identity_exercises_every_bracket():
    """The arity-4 sum touches all five bracket implementations at once."""
    pair = get_pair("gl2_diag")  # complement not closed: cubic terms nonzero
    rng = random.Random(3)
    d = random_derivation(pair, rng)
    xi, eta, zeta = (random_omega(pair, 1, rng) for _ in range(3))
    # the individual contributions are nonzero here, so the vanishing total
    # is a genuine cancellation across all sign conventions
    assert not bracket3(xi, eta, zeta).is_zero()
    assert not b2_der(pair, d, xi).is_zero() or not b2_der(pair, d, eta).is_zero()
    residual = n_jacobi_residual(pair, [d, xi, eta, zeta])
    assert _is_zero(residual)
