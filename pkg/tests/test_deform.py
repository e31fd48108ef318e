import random
from fractions import Fraction

import pytest

from liepair import linalg
from liepair.catalog import get_algebra, get_pair
from liepair.cohomology import classes_equal
from liepair.deform import (
    AMap,
    DeformError,
    InducedBracket,
    act_on_standard,
    avec_basis,
    equiv_decide,
    exp_derivation,
    induced_bracket,
    log_automorphism,
    standard_inclusion,
    standard_realization,
    std_check,
    xy_identity_check,
    xy_sequences,
)
from liepair.mc import GaugeParameter, MCElement, gauge_act, is_mc
from liepair.sampling import random_cocycle, random_gauge, random_mc, random_omega

F = Fraction


def test_standard_inclusion_shape():
    b3, dual = get_pair("b3"), get_algebra("dual")
    xi0 = MCElement.zero(b3, dual)
    imap = standard_inclusion(xi0)
    # the zero element gives the plain coefficient extension of the inclusion
    assert imap.blocks[0] == [[F(1) if i == j else F(0) for j in range(3)] for i in range(6)]
    assert linalg.is_zero_matrix(imap.blocks[1])

    rng = random.Random(1)
    xi = random_mc(b3, dual, rng)
    imap = standard_inclusion(xi)
    # center is always the inclusion; the m-block is j composed with the element
    assert imap.blocks[0] == [[F(1) if i == j else F(0) for j in range(3)] for i in range(6)]
    for a in range(3):
        col = [imap.blocks[1][r][a] for r in range(6)]
        assert col[:3] == [F(0)] * 3
        assert col[3:] == xi.comps[1].value((a,))


def test_std_check_agrees_with_mc_test():
    rng = random.Random(2)
    t3 = get_algebra("t^3")
    for name in ["b3", "sl2_borel", "aff1", "heis3_center", "gl2_diag"]:
        pair = get_pair(name)
        assert std_check(MCElement.zero(pair, t3))
        for _ in range(100):
            xi = MCElement.from_terms(
                pair, t3, [(1, random_omega(pair, 1, rng)), (2, random_omega(pair, 1, rng))]
            )
            assert std_check(xi) == is_mc(xi)


def test_std_check_matched_cocycle_over_dual():
    rng = random.Random(3)
    pair = get_pair("sl2_borel")
    dual = get_algebra("dual")
    xi = MCElement.from_terms(pair, dual, [(1, random_cocycle(pair, rng))])
    assert std_check(xi)


def test_induced_bracket_properties():
    rng = random.Random(4)
    b3, t3 = get_pair("b3"), get_algebra("t^3")
    xi0 = MCElement.zero(b3, t3)
    br0 = induced_bracket(xi0)
    for i in range(3):
        for j in range(3):
            assert br0.table[i][j][0] == b3.pr_a(b3.lie.bracket_basis(i, j))
            assert all(linalg.is_zero_vec(v) for v in br0.table[i][j][1:])

    xi = random_mc(b3, t3, rng)
    br = induced_bracket(xi)
    assert br.antisymmetric_ok()
    assert br.jacobi_ok()
    assert br.center_table() == [
        [b3.pr_a(b3.lie.bracket_basis(i, j)) for j in range(3)] for i in range(3)
    ]


def test_induced_bracket_refuses_and_jacobi_breaks_without_mc():
    rng = random.Random(5)
    b3, t3 = get_pair("b3"), get_algebra("t^3")
    violation_seen = False
    for _ in range(30):
        xi = MCElement.from_terms(
            b3, t3, [(1, random_omega(b3, 1, rng)), (2, random_omega(b3, 1, rng))]
        )
        if is_mc(xi):
            continue
        with pytest.raises(DeformError):
            induced_bracket(xi)
        raw = InducedBracket(xi, check=False)
        if not raw.jacobi_ok():
            violation_seen = True
            break
    assert violation_seen


def test_exp_derivation_examples():
    rng = random.Random(6)
    b3 = get_pair("b3")
    dual, t3 = get_algebra("dual"), get_algebra("t^3")

    zero = GaugeParameter.zero(b3, dual)
    assert exp_derivation(zero) == AMap.identity(dual, 6)
    assert log_automorphism(exp_derivation(zero)) == zero

    delta = random_gauge(b3, dual, rng)
    pi = exp_derivation(delta)
    assert pi.blocks[1] == delta.comps[1].matrix  # exp = id + delta at t^2 = 0

    delta3 = random_gauge(b3, t3, rng)
    pi3 = exp_derivation(delta3)
    d1 = delta3.comps[1].matrix
    expected_t2 = linalg.mat_add(
        delta3.comps[2].matrix, linalg.mat_scale(F(1, 2), linalg.mat_mul(d1, d1))
    )
    assert pi3.blocks[1] == d1
    assert pi3.blocks[2] == expected_t2
    assert log_automorphism(pi3) == delta3


def test_exp_log_roundtrip_campaign():
    rng = random.Random(7)
    for name in ["b3", "sl2_borel", "gl2_diag"]:
        pair = get_pair(name)
        for aname in ["dual", "t^3", "t^4"]:
            alg = get_algebra(aname)
            for _ in range(10):
                delta = random_gauge(pair, alg, rng)
                pi = exp_derivation(delta)
                assert pi.preserves_bracket()
                assert log_automorphism(pi) == delta
                assert exp_derivation(log_automorphism(pi)) == pi


def test_act_on_standard_examples():
    rng = random.Random(8)
    b3, t3 = get_pair("b3"), get_algebra("t^3")
    xi = random_mc(b3, t3, rng)
    from liepair.deform import SmallAutomorphism

    ident = SmallAutomorphism(b3, t3, AMap.identity(t3, 6).blocks, check=False)
    assert act_on_standard(ident, xi) == xi

    delta = random_gauge(b3, t3, rng)
    assert act_on_standard(exp_derivation(delta), xi) == gauge_act(delta, xi)


def test_act_square_zero_linear_formula():
    rng = random.Random(9)
    b3, dual = get_pair("b3"), get_algebra("dual")
    xi = random_mc(b3, dual, rng)
    delta = random_gauge(b3, dual, rng)
    pi = exp_derivation(delta)
    moved = act_on_standard(pi, xi)
    _, _, _, beta = b3.derivation_blocks(delta.comps[1])
    # at t^2 = 0 the action adds pr_B(delta(i -)) to the t layer
    expected = [
        linalg.vec_add(xi.comps[1].value((a,)), [beta[b][a] for b in range(3)])
        for a in range(3)
    ]
    assert [moved.comps[1].value((a,)) for a in range(3)] == expected


def test_action_composition_law():
    rng = random.Random(10)
    b3, t3 = get_pair("b3"), get_algebra("t^3")
    for _ in range(10):
        xi = random_mc(b3, t3, rng)
        p1 = exp_derivation(random_gauge(b3, t3, rng))
        p2 = exp_derivation(random_gauge(b3, t3, rng))
        assert act_on_standard(p1.compose_small(p2), xi) == act_on_standard(
            p1, act_on_standard(p2, xi)
        )


def test_standard_realization_examples():
    rng = random.Random(11)
    b3, t3 = get_pair("b3"), get_algebra("t^3")
    xi = random_mc(b3, t3, rng)
    br = induced_bracket(xi)

    assert standard_realization(standard_inclusion(xi), br, b3, t3) == xi

    pi = exp_derivation(random_gauge(b3, t3, rng))
    recovered = standard_realization(pi.compose(standard_inclusion(xi)), br, b3, t3)
    assert recovered == act_on_standard(pi, xi)


def test_standard_realization_with_nontrivial_iota_a():
    from types import SimpleNamespace

    rng = random.Random(12)
    b3, t3 = get_pair("b3"), get_algebra("t^3")
    xi = random_mc(b3, t3, rng)
    br = induced_bracket(xi)

    # precompose with a center-identity map Psi; the inclusion then intertwines
    # the pulled-back bracket, and the Neumann inverse must undo Psi exactly
    psi = AMap.identity(t3, 3)
    psi.blocks[1] = [[F(rng.randint(-2, 2)) for _ in range(3)] for _ in range(3)]
    psi_inv = psi.neumann_inverse()
    pulled = [
        [
            psi_inv.apply(br.apply(psi.apply(avec_basis(t3, 3, i)), psi.apply(avec_basis(t3, 3, j))))
            for j in range(3)
        ]
        for i in range(3)
    ]
    recovered = standard_realization(
        standard_inclusion(xi).compose(psi), SimpleNamespace(table=pulled), b3, t3
    )
    assert recovered == xi

    # wrong center is rejected outright
    bad = AMap.from_center(t3, [[F(1), F(0), F(0)], [F(0), F(1), F(0)]])
    with pytest.raises(DeformError):
        standard_realization(bad, br, b3, t3)


def test_xy_sequences_and_identity():
    rng = random.Random(13)
    b3, t5 = get_pair("b3"), get_algebra("t^5")
    xi = random_mc(b3, t5, rng)
    delta = random_gauge(b3, t5, rng)

    xs, ys = xy_sequences(delta, xi, 4)
    # k = 0: x^0 = identity extension, y^0 = the element itself as a map
    assert xs[0] == AMap.identity(t5, 3).compose(AMap.identity(t5, 3))
    from liepair.deform import family_to_amap
    from liepair.mc import OmegaFamily

    assert ys[0] == family_to_amap(OmegaFamily(b3, t5, 1, xi.comps))

    zero = GaugeParameter.zero(b3, t5)
    xs0, ys0 = xy_sequences(zero, xi, 3)
    assert all(x.is_zero() for x in xs0[1:])
    assert all(y.is_zero() for y in ys0[1:])

    assert xy_identity_check(delta, xi, 4)
    for name in ["sl2_borel", "aff1"]:
        pair = get_pair(name)
        assert xy_identity_check(random_gauge(pair, t5, rng), random_mc(pair, t5, rng), 4)


def test_equiv_decide_examples():
    rng = random.Random(14)
    b3, dual = get_pair("b3"), get_algebra("dual")
    xi = random_mc(b3, dual, rng)
    out = equiv_decide(xi, xi, "weak")
    assert out.equivalent

    for mode in ["weak", "semistrict", "matched"]:
        delta0 = random_gauge(b3, dual, rng, mode=mode)
        eta = gauge_act(delta0, xi)
        out = equiv_decide(xi, eta, mode)
        assert out.equivalent
        assert act_on_standard(out.witness, xi) == eta


def test_equiv_decide_matches_tangent_classes_over_dual():
    rng = random.Random(15)
    dual = get_algebra("dual")
    for name in ["b3", "heis3_center"]:
        pair = get_pair(name)
        for _ in range(25):
            x, y = random_cocycle(pair, rng), random_cocycle(pair, rng)
            xi = MCElement.from_terms(pair, dual, [(1, x)])
            eta = MCElement.from_terms(pair, dual, [(1, y)])
            weak = equiv_decide(xi, eta, "weak")
            assert weak.status in ("equivalent", "not_equivalent")
            assert weak.equivalent == classes_equal(pair, "H_ext", x, y)
            semi = equiv_decide(xi, eta, "semistrict")
            assert semi.equivalent == classes_equal(pair, "H0_ext", x, y)


def test_matched_mode_tangent_matches_ce_classes_over_dual():
    # on a matched pair the complement-direction gauge group sees exactly the
    # Chevalley-Eilenberg classes: its degree-0 image is the full differential image
    rng = random.Random(16)
    dual = get_algebra("dual")
    for name in ["b3", "sl2_borel", "aff1"]:
        pair = get_pair(name)
        assert pair.is_matched()
        for _ in range(15):
            x, y = random_cocycle(pair, rng), random_cocycle(pair, rng)
            xi = MCElement.from_terms(pair, dual, [(1, x)])
            eta = MCElement.from_terms(pair, dual, [(1, y)])
            out = equiv_decide(xi, eta, "matched")
            assert out.status in ("equivalent", "not_equivalent")
            assert out.equivalent == classes_equal(pair, "CE", x, y)
