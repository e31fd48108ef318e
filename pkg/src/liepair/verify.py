"""Property-verification campaigns behind ``liepair verify`` and the acceptance tests.

Each suite runs exact randomized and exhaustive checks of the structural
identities the library is built on, against independent oracles where one
exists (matrix realization vs. bracket recursion, brute-force shuffle
enumeration vs. the combination-based one, cohomology class equality vs.
the gauge solver).  Campaign sizes default to the acceptance thresholds;
everything is deterministic in the seed.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .artin import ArtinMorphism
from .catalog import algebra_names, get_algebra, get_pair
from .cohomology import classes_equal, h1_semistrict, h1_weak, h_ce
from .liealg import Derivation, commutator, derivation_space, inner_derivation, inner_derivation_space
from .mc import (
    GaugeParameter,
    MCElement,
    OmegaFamily,
    b1_family,
    gauge_act,
    gauge_exp_terms,
    gauge_solve,
    is_mc,
    mc_push,
)
from .deform import (
    act_on_standard,
    exp_derivation,
    log_automorphism,
    std_check,
    xy_identity_check,
)
from .omega import OmegaElement, b1_der, b2_der, b3_der, bracket2, bracket3, d_ce
from .sampling import (
    random_cocycle,
    random_derivation,
    random_element,
    random_gauge,
    random_mc,
    random_omega,
    random_unit,
)
from .scalars import ONE, ZERO

PAIR_NAMES = ["b3", "sl2_borel", "aff1", "heis3_center", "gl2_diag", "abelian_4_2"]
SUITE_NAMES = ["axioms", "brackets", "gauge-bridge", "appendix", "cohomology"]


@dataclass
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _result(suite, name, ok, detail=""):
    return CheckResult(suite, name, bool(ok), detail)


# -- axioms -------------------------------------------------------------------

def suite_axioms(seed=0):
    rng = random.Random(seed)
    out = []

    def _times_m(alg, vectors):
        n = alg.dim
        nxt = []
        for v in vectors:
            for j in range(1, n):
                w = [ZERO] * n
                for m, c in enumerate(v):
                    if c:
                        w = linalg.vec_add(w, linalg.vec_scale(c, alg.table[m][j]))
                if not linalg.is_zero_vec(w):
                    nxt.append(w)
        return nxt

    for name in algebra_names():
        alg = get_algebra(name)
        # recompute powers of m from scratch: m^N != 0 while m^(N+1) == 0
        cur = [[ONE if c == i else ZERO for c in range(alg.dim)] for i in range(1, alg.dim)]
        for _ in range(alg.nilpotency_order - 1):
            cur = _times_m(alg, cur)
        ok = bool(cur) and linalg.rank(cur) > 0 and not _times_m(alg, cur)
        out.append(_result("axioms", f"nilpotency order of {name}", ok,
                           f"m^{alg.nilpotency_order} != 0 and m^{alg.nilpotency_order + 1} = 0"))
        ev_ok = True
        for _ in range(50):
            a, b = random_element(alg, rng), random_element(alg, rng)
            if (a * b).ev() != a.ev() * b.ev() or (a + b).ev() != a.ev() + b.ev():
                ev_ok = False
        out.append(_result("axioms", f"ev is an algebra morphism on {name}", ev_ok, "50 random pairs"))
        inv_ok = True
        for _ in range(200):
            u = random_unit(alg, rng)
            if u.inverse() * u != alg.one():
                inv_ok = False
        out.append(_result("axioms", f"unit inversion on {name}", inv_ok, "200 random units"))

    # quotient morphisms respect products
    t4, t3 = get_algebra("t^4"), get_algebra("t^3")
    theta = ArtinMorphism(t4, t3, [[ONE if j == i else ZERO for j in range(4)] for i in range(3)])
    morph_ok = True
    for _ in range(50):
        a, b = random_element(t4, rng), random_element(t4, rng)
        if theta.apply(a * b) != theta.apply(a) * theta.apply(b):
            morph_ok = False
    out.append(_result("axioms", "quotient morphism multiplicative", morph_ok, "t^4 -> t^3, 50 pairs"))

    for name in PAIR_NAMES:
        pair = get_pair(name)
        out.append(_result("axioms", f"Bott connection flat on {name}", pair.bott_flat_ok()))
        ders = derivation_space(pair.lie)
        leib_ok = all(d._leibniz_ok() for d in ders)
        out.append(_result("axioms", f"derivation basis satisfies Leibniz on {name}", leib_ok,
                           f"dim Der = {len(ders)}"))
        der_rows = [d.flat() for d in ders]
        inner_ok = all(
            linalg.row_space_contains(der_rows, inner_derivation(pair.lie, pair.lie.basis_vector(i)).flat())
            for i in range(pair.lie.dim)
        )
        out.append(_result("axioms", f"inner derivations inside Der on {name}", inner_ok))

    sl2 = get_pair("sl2_borel")
    ders = derivation_space(sl2.lie)
    iders = inner_derivation_space(sl2.lie)
    rows = [d.flat() for d in iders]
    semisimple_ok = len(ders) == len(iders) == 3 and all(
        linalg.row_space_contains(rows, d.flat()) for d in ders
    )
    out.append(_result("axioms", "semisimple rigidity: Der(sl2) = IDer(sl2)", semisimple_ok,
                       "dimension 3, spaces coincide"))
    return out


# -- brackets -----------------------------------------------------------------

def _b3_der_shuffle_oracle(pair, delta, x, y):
    """Brute-force shuffle enumerator for the ternary derivation bracket.

    Enumerates all permutations and filters block-increasing ones instead of
    generating combinations; an independent code path used only as an oracle.
    """
    p, q = x.degree, y.degree
    _, _, R, _ = pair.derivation_blocks(delta)
    out = OmegaElement(pair, p + q - 1)

    def perm_sign(seq):
        s = 1
        for i in range(len(seq)):
            for j in range(i + 1, len(seq)):
                if seq[i] > seq[j]:
                    s = -s
        return s

    for t_idx, combo in enumerate(out.combos):
        total = len(combo)
        acc = [ZERO] * pair.q
        for perm in itertools.permutations(range(total)):
            first, second = perm[:p], perm[p:]
            if all(first[i] < first[i + 1] for i in range(p - 1)) and all(
                second[i] < second[i + 1] for i in range(q - 2)
            ):
                sgn = perm_sign(perm) * ((-1) ** (p + 1))
                xv = x.value(tuple(combo[i] for i in first))
                term = y.value_insert(linalg.mat_vec(R, xv), tuple(combo[i] for i in second))
                acc = linalg.vec_add(acc, linalg.vec_scale(Fraction(sgn), term))
        for perm in itertools.permutations(range(total)):
            first, second = perm[: p - 1], perm[p - 1 :]
            if all(first[i] < first[i + 1] for i in range(p - 2)) and all(
                second[i] < second[i + 1] for i in range(q - 1)
            ):
                sgn = perm_sign(perm)
                yv = y.value(tuple(combo[i] for i in second))
                term = x.value_insert(linalg.mat_vec(R, yv), tuple(combo[i] for i in first))
                acc = linalg.vec_add(acc, linalg.vec_scale(Fraction(sgn), term))
        out.rows[t_idx] = acc
    return out


def _preserving_derivation(pair, rng):
    """Random derivation keeping the subalgebra invariant (pr_B d i = 0)."""
    basis = derivation_space(pair.lie)
    if not basis:
        return Derivation.zero(pair.lie)
    rows = []
    for d in basis:
        _, _, _, beta = pair.derivation_blocks(d)
        rows.append([x for r in beta for x in r])
    constraint = [list(col) for col in zip(*rows)] if rows and rows[0] else []
    coeffs_space = (
        linalg.nullspace(constraint, n_cols=len(basis)) if constraint else linalg.identity(len(basis))
    )
    d = Derivation.zero(pair.lie)
    for v in coeffs_space:
        c = Fraction(rng.randint(-2, 2))
        if c:
            for coeff, b in zip(v, basis):
                if coeff:
                    d = d + b.scale(c * coeff)
    return d


def suite_brackets(seed=0, matched_samples=100):
    rng = random.Random(seed)
    out = []
    for name in PAIR_NAMES:
        pair = get_pair(name)
        dd_ok = all(
            d_ce(d_ce(random_omega(pair, k, rng))).is_zero()
            for k in range(pair.rank + 1)
            for _ in range(5)
        )
        out.append(_result("brackets", f"d o d = 0 on {name}", dd_ok, "5 random elements per degree"))
        b1_ok = all(d_ce(b1_der(pair, random_derivation(pair, rng))).is_zero() for _ in range(10))
        out.append(_result("brackets", f"unary derivation bracket lands in cocycles on {name}", b1_ok))

        jac2_ok = True
        for _ in range(10):
            d = random_derivation(pair, rng)
            x = random_omega(pair, 1, rng)
            lhs = d_ce(b2_der(pair, d, x))
            rhs = bracket2(b1_der(pair, d), x) + b2_der(pair, d, d_ce(x))
            if not (lhs - rhs).is_zero():
                jac2_ok = False
        out.append(_result("brackets", f"degree-(0,1) Jacobi instance on {name}", jac2_ok))

        act_ok = True
        for deg in (1, 2):
            if deg > pair.rank:
                continue
            for _ in range(10):
                d1, d2 = random_derivation(pair, rng), random_derivation(pair, rng)
                x = random_omega(pair, deg, rng)
                lhs = b2_der(pair, commutator(d1, d2), x)
                rhs = b2_der(pair, d1, b2_der(pair, d2, x)) - b2_der(pair, d2, b2_der(pair, d1, x))
                corr = b3_der(pair, d1, b1_der(pair, d2), x) - b3_der(pair, d2, b1_der(pair, d1), x)
                if not (lhs - rhs - corr).is_zero():
                    act_ok = False
        out.append(_result("brackets", f"derivation action law (ternary-corrected) on {name}", act_ok,
                           "commutator bracket against nested actions plus unary corrections"))

        plain_ok = True
        for _ in range(10):
            d1, d2 = _preserving_derivation(pair, rng), _preserving_derivation(pair, rng)
            x = random_omega(pair, 1, rng)
            lhs = b2_der(pair, commutator(d1, d2), x)
            rhs = b2_der(pair, d1, b2_der(pair, d2, x)) - b2_der(pair, d2, b2_der(pair, d1, x))
            if not (lhs - rhs).is_zero():
                plain_ok = False
        out.append(_result("brackets", f"plain action law for subalgebra-preserving derivations on {name}",
                           plain_ok))

        pol_ok = True
        for _ in range(5):
            xi, eta, zeta = (random_omega(pair, 1, rng) for _ in range(3))
            lhs = bracket2(xi, eta)
            rhs = (bracket2(xi + eta, xi + eta) - bracket2(xi, xi) - bracket2(eta, eta)).scale(
                Fraction(1, 2)
            )
            if not (lhs - rhs).is_zero():
                pol_ok = False
            def cub(a):
                return bracket3(a, a, a)
            s = xi + eta + zeta
            pol3 = (
                cub(s) - cub(xi + eta) - cub(eta + zeta) - cub(xi + zeta)
                + cub(xi) + cub(eta) + cub(zeta)
            )
            if not (bracket3(xi, eta, zeta).scale(Fraction(6)) - pol3).is_zero():
                pol_ok = False
        out.append(_result("brackets", f"polarization consistency on {name}", pol_ok))

        diag_ok = True
        for _ in range(5):
            xi = random_omega(pair, 1, rng)
            quad = OmegaElement(pair, 2)
            cubic = OmegaElement(pair, 2)
            from .omega import _aj_bracket, _j_bracket
            for t, (a1, a2) in enumerate(quad.combos):
                x1, x2 = xi.value((a1,)), xi.value((a2,))
                v = pair.pr_b(_j_bracket(pair, x1, x2))
                v = linalg.vec_sub(v, xi.value_insert(pair.pr_a(_aj_bracket(pair, a1, x2)), ()))
                v = linalg.vec_add(v, xi.value_insert(pair.pr_a(_aj_bracket(pair, a2, x1)), ()))
                quad.rows[t] = [2 * c for c in v]
                cubic.rows[t] = [
                    -6 * c
                    for c in xi.value_insert(pair.pr_a(_j_bracket(pair, x1, x2)), ())
                ]
            if not (bracket2(xi, xi) - quad).is_zero():
                diag_ok = False
            if not (bracket3(xi, xi, xi) - cubic).is_zero():
                diag_ok = False
        out.append(_result("brackets", f"diagonal formulas reproduced on {name}", diag_ok))

        oracle_ok = True
        for degs in ((1, 1), (1, 2), (2, 1)):
            if max(degs) > pair.rank or sum(degs) - 1 > pair.rank:
                continue
            for _ in range(4):
                d = random_derivation(pair, rng)
                x = random_omega(pair, degs[0], rng)
                y = random_omega(pair, degs[1], rng)
                if b3_der(pair, d, x, y) != _b3_der_shuffle_oracle(pair, d, x, y):
                    oracle_ok = False
        out.append(_result("brackets", f"ternary bracket matches brute-force shuffle oracle on {name}",
                           oracle_ok))

    for name in PAIR_NAMES:
        pair = get_pair(name)
        if not pair.is_matched():
            continue
        deg_ok = all(
            bracket3(x, x, x).is_zero()
            for x in (random_omega(pair, 1, rng) for _ in range(matched_samples))
        )
        jb_ok = True
        for m in range(pair.q):
            jb = pair.include_b([ONE if i == m else ZERO for i in range(pair.q)])
            dj = inner_derivation(pair.lie, jb)
            for _ in range(5):
                if not b3_der(pair, dj, random_omega(pair, 1, rng), random_omega(pair, 1, rng)).is_zero():
                    jb_ok = False
        out.append(_result("brackets", f"matched degeneration on {name}", deg_ok and jb_ok,
                           f"{matched_samples} random elements, all complement directions"))
    return out


# -- gauge bridge --------------------------------------------------------------

BRIDGE_ALGEBRAS = ["dual", "t^3", "t^4", "m2x2"]


def suite_gauge_bridge(seed=0, bridge_instances=300, exp_log_instances=200, mc_std_instances=100):
    rng = random.Random(seed)
    out = []

    agree = 0
    checked = 0
    for name in ["b3", "sl2_borel", "aff1", "heis3_center", "gl2_diag"]:
        pair = get_pair(name)
        alg = get_algebra("t^3")
        for _ in range(mc_std_instances):
            xi = MCElement.from_terms(
                pair, alg, [(1, random_omega(pair, 1, rng)), (2, random_omega(pair, 1, rng))]
            )
            checked += 1
            if std_check(xi) == is_mc(xi):
                agree += 1
    out.append(_result("gauge-bridge", "closure equation agrees with Maurer-Cartan test",
                       agree == checked, f"{agree}/{checked} random elements over t^3"))

    bridge_ok = 0
    combos = [(p, a) for p in ["b3", "sl2_borel", "aff1", "gl2_diag"] for a in BRIDGE_ALGEBRAS]
    per = max(1, bridge_instances // len(combos))
    total = 0
    for pname, aname in combos:
        pair, alg = get_pair(pname), get_algebra(aname)
        for _ in range(per):
            xi = random_mc(pair, alg, rng)
            delta = random_gauge(pair, alg, rng)
            total += 1
            if act_on_standard(exp_derivation(delta), xi) == gauge_act(delta, xi):
                bridge_ok += 1
    out.append(_result("gauge-bridge", "matrix action equals bracket recursion",
                       bridge_ok == total, f"{bridge_ok}/{total} random (pair, algebra, delta, xi)"))

    pair = get_pair("b3")
    explog_ok = 0
    total_el = 0
    for aname in ["dual", "t^3", "t^4"]:
        alg = get_algebra(aname)
        for _ in range(max(1, exp_log_instances // 3)):
            delta = random_gauge(pair, alg, rng)
            pi = exp_derivation(delta)
            total_el += 1
            back = log_automorphism(pi)
            if back == delta and exp_derivation(back) == pi:
                explog_ok += 1
    out.append(_result("gauge-bridge", "exponential and logarithm invert each other",
                       explog_ok == total_el, f"{explog_ok}/{total_el} random parameters"))

    comp_ok = True
    alg = get_algebra("t^3")
    for _ in range(20):
        xi = random_mc(pair, alg, rng)
        p1 = exp_derivation(random_gauge(pair, alg, rng))
        p2 = exp_derivation(random_gauge(pair, alg, rng))
        if act_on_standard(p1.compose_small(p2), xi) != act_on_standard(p1, act_on_standard(p2, xi)):
            comp_ok = False
    out.append(_result("gauge-bridge", "action respects automorphism composition", comp_ok, "20 instances"))

    deg_ok = True
    alg4 = get_algebra("t^4")
    for _ in range(10):
        xi = random_mc(pair, alg4, rng)
        delta = random_gauge(pair, alg4, rng)
        terms = gauge_exp_terms(delta, xi)
        if not all(t.supported_in_power(k) for k, t in enumerate(terms) if k >= 1):
            deg_ok = False
        if gauge_act(GaugeParameter.zero(pair, alg4), xi) != xi:
            deg_ok = False
    out.append(_result("gauge-bridge", "recursion terms filtered by m-adic degree", deg_ok, "10 instances"))

    sq_ok = True
    for aname in ["dual", "m2x2"]:
        alg = get_algebra(aname)
        for _ in range(10):
            xi = random_mc(pair, alg, rng)
            delta = random_gauge(pair, alg, rng)
            moved = gauge_act(delta, xi)
            expected = OmegaFamily(pair, alg, 1, xi.comps) - b1_family(delta)
            if OmegaFamily(pair, alg, 1, moved.comps) != expected:
                sq_ok = False
    out.append(_result("gauge-bridge", "square-zero action is subtraction of the unary bracket",
                       sq_ok, "dual and m2x2"))

    push_ok = True
    t3, dual = get_algebra("t^3"), get_algebra("dual")
    theta = ArtinMorphism(t3, dual, [[ONE, ZERO, ZERO], [ZERO, ONE, ZERO]])
    for _ in range(10):
        xi = random_mc(pair, t3, rng)
        if not is_mc(mc_push(theta, xi)):
            push_ok = False
    out.append(_result("gauge-bridge", "morphism push-forward preserves the equation", push_ok))
    return out


# -- appendix identity ----------------------------------------------------------

def suite_appendix(seed=0, instances=100, kmax=4):
    rng = random.Random(seed)
    out = []
    names = ["b3", "sl2_borel", "aff1"]
    alg = get_algebra("t^5")
    per = max(1, instances // len(names))
    ok = 0
    total = 0
    for name in names:
        pair = get_pair(name)
        for _ in range(per):
            xi = random_mc(pair, alg, rng)
            delta = random_gauge(pair, alg, rng)
            total += 1
            if xy_identity_check(delta, xi, kmax):
                ok += 1
    out.append(_result("appendix", "binomial identity between projection powers and recursion terms",
                       ok == total, f"{ok}/{total} instances over t^5, k <= {kmax}"))
    return out


# -- cohomology -----------------------------------------------------------------

def suite_cohomology(seed=0, class_samples=100):
    rng = random.Random(seed)
    out = []

    b3 = get_pair("b3")
    ce = h_ce(b3, 1, "b3")
    weak = h1_weak(b3, "b3")
    out.append(_result("cohomology", "golden dimensions on b3",
                       ce.dimension == 3 and weak.dimension == 2,
                       f"CE degree 1 = {ce.dimension}, weak tangent = {weak.dimension}"))

    for name in PAIR_NAMES:
        pair = get_pair(name)
        ce1 = h_ce(pair, 1, name)
        weak = h1_weak(pair, name)
        semi = h1_semistrict(pair, name)
        chain_ok = weak.dimension <= semi.dimension <= ce1.dimension
        eq_ok = semi.dimension == ce1.dimension and semi.image_dim == ce1.image_dim
        reps_ok = all(d_ce(r).is_zero() for rep in (ce1, weak, semi) for r in rep.representatives)
        out.append(_result("cohomology", f"tangent dimension chain on {name}", chain_ok,
                           f"weak {weak.dimension} <= semistrict {semi.dimension} <= CE {ce1.dimension}"))
        out.append(_result("cohomology", f"semistrict tangent equals CE cohomology on {name}", eq_ok))
        out.append(_result("cohomology", f"representatives are cocycles on {name}", reps_ok))

    dual = get_algebra("dual")
    for name in ["b3", "sl2_borel", "heis3_center"]:
        pair = get_pair(name)
        agree = 0
        for _ in range(class_samples):
            x, y = random_cocycle(pair, rng), random_cocycle(pair, rng)
            xi = MCElement.from_terms(pair, dual, [(1, x)])
            eta = MCElement.from_terms(pair, dual, [(1, y)])
            solver_eq = gauge_solve(xi, eta, "weak").found
            class_eq = classes_equal(pair, "H_ext", x, y)
            if solver_eq == class_eq:
                agree += 1
        out.append(_result("cohomology", f"dual-number solver agrees with weak class equality on {name}",
                           agree == class_samples, f"{agree}/{class_samples} random cocycle pairs"))
    return out


SUITES = {
    "axioms": suite_axioms,
    "brackets": suite_brackets,
    "gauge-bridge": suite_gauge_bridge,
    "appendix": suite_appendix,
    "cohomology": suite_cohomology,
}


def run_suites(names, seed=0):
    results = []
    for n in names:
        if n not in SUITES:
            raise KeyError(f"unknown suite {n!r}")
        results.extend(SUITES[n](seed=seed))
    return all(r.ok for r in results), results
