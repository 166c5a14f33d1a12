import math
import random
from fractions import Fraction

import pytest

from cycleforge.model import (
    InvalidParameters,
    ModelParams,
    ReducedParams,
    ThreeEqParams,
    classify_interior,
    classify_layout,
    classify_model,
    d_e,
    discriminants,
    f1_via_fbar,
    fbar1,
    fig11_params,
    interior_equilibria,
    jacobian_interior,
    model_rhs,
    normalize,
    origin_analysis,
    origin_char_function,
    psi_coeffs,
    quintic_system,
    reduced_equilibria,
    simultaneous_hopf,
    thresholds,
    three_eq_condition,
    three_eq_reparam,
)

F = Fraction


def rand_lambda_point(rng):
    """Rational (K, a, b) with K > 1, a > 0, b > -2 sqrt(a), d > 0, e > 0."""
    while True:
        K = F(rng.randint(11, 300), 10)
        a = F(rng.randint(1, 400), 20)
        b = F(rng.randint(-400, 400), 40)
        if b <= 0 and b * b >= 4 * a:
            continue
        d, e = d_e(K, a, b)
        if d > 0 and e > 0:
            return K, a, b


def test_fig11_equilibria_exact():
    roots = interior_equilibria(fig11_params())
    assert [r.x for r in roots] == [1, 2, 4]
    assert all(r.exact and r.multiplicity == 1 for r in roots)


def test_fig11_rhs_vanishes_at_equilibria():
    f = model_rhs(fig11_params())
    for x in (1.0, 2.0, 4.0):
        fx, fy = f(0.0, [x, x])
        assert abs(fx) < 1e-12 and abs(fy) < 1e-12


def test_fig11_classification():
    reps = classify_model(fig11_params())
    assert [r.tag for r in reps] == ["StableFocus", "HyperbolicSaddle", "StableFocus"]
    assert reps[0].thresholds["s_star"] == F(11, 40)
    assert reps[2].thresholds["s_star"] == F(47, 120) == F(141, 360)
    assert classify_layout(10, F(5, 4), F(-33, 20)).equilibria == [1, 2, 4]


def test_normalization_reduced_params():
    p = fig11_params()
    assert normalize(p, 2) == ReducedParams(F(2, 5), 5, 5, F(-33, 10))
    assert normalize(p, 4) == ReducedParams(F(2, 5), F(5, 2), 20, F(-33, 5))
    with pytest.raises(InvalidParameters):
        normalize(p, 3)


def test_normalization_preserves_equilibria():
    # build models with a known root set by choosing the reduced form, then rescale
    rng = random.Random(5)
    checked = 0
    while checked < 25:
        K, a, b = rand_lambda_point(rng)
        q = ReducedParams(F(1, 2), K, a, b)
        xs = [r.x for r in reduced_equilibria(q)]
        if not all(isinstance(x, Fraction) for x in xs):
            continue
        scale = F(rng.randint(1, 9), rng.randint(1, 4))
        g = a + b + 1
        m = g * (K - 1) / K / (scale * scale)
        p = ModelParams(1, K * scale, m, a / (scale * scale), F(1, 2), 1, b / scale)
        assert [r.x for r in interior_equilibria(p)] == [x * scale for x in xs]
        for x in xs:
            q2 = normalize(p, x * scale)
            assert [r.x for r in reduced_equilibria(q2)] == [y / x for y in xs]
        checked += 1


def test_jacobian_matches_hand_derivatives():
    # trace and det of the rational reduced field at (1, 1), times the positive
    # factor K (a + b + 1) coming from clearing denominators
    rng = random.Random(7)
    for _ in range(50):
        K, a, b = rand_lambda_point(rng)
        s = F(rng.randint(1, 50), 10)
        g = a + b + 1
        c = g * (K - 1) / K
        j11 = 1 - 2 / K - c * (2 * g - (2 * a + b)) / (g * g)
        j12 = -c / g
        j21, j22 = s, -s
        tr, det, d, e = jacobian_interior(ReducedParams(s, K, a, b))
        assert tr == K * g * (j11 + j22)
        assert det == (K * g) ** 2 * (j11 * j22 - j12 * j21)
        P, Q = quintic_system(ReducedParams(s, K, a, b))
        pt = {"x": 1, "y": 1}
        assert tr == P.derivative("x").eval(pt) + Q.derivative("y").eval(pt)


def test_psi_at_s_star_and_discriminant_identity():
    rng = random.Random(8)
    for _ in range(100):
        K, a, b = rand_lambda_point(rng)
        d, e = d_e(K, a, b)
        mu2, mu1, mu0 = psi_coeffs(K, a, b)
        s_star = thresholds(K, a, b)["s_star"]
        assert (mu2 * s_star + mu1) * s_star + mu0 == -4 * e * d
        g = a + b + 1
        dt = discriminants(ReducedParams(1, K, a, b)).DeltaTilde
        assert dt == 16 * K * K * g**3 * (K - 1) * d


def test_discriminant_fig11_value():
    bundle = discriminants(ReducedParams(F(2, 5), 10, F(5, 4), F(-33, 20)), fig11_params())
    assert bundle.DeltaTilde == 11664
    assert bundle.DeltaBar == F(25, 4)


def test_trace_zero_at_s_star():
    q = ReducedParams(F(11, 40), 10, F(5, 4), F(-33, 20))
    rep = classify_interior(q)
    assert rep.trace == 0
    assert rep.tag == "WeakFocusOrCenter"
    assert classify_interior(q.with_s(F(1, 2))).tag == "StableFocus"
    assert classify_interior(q.with_s(F(1, 10))).tag == "UnstableFocus"


def test_node_focus_thresholds():
    K, a, b = F(10), F(5, 4), F(-33, 20)
    th = thresholds(K, a, b)
    assert th["s2"] < th["s_star"] < th["s3"]
    assert classify_interior(ReducedParams(F(1, 100), K, a, b)).tag == "UnstableNode"
    assert classify_interior(ReducedParams(4, K, a, b)).tag == "StableNode"


def test_layout_cases():
    assert classify_layout(2, 2, F(-5, 2)).layout == "UniqueDegenerate"
    assert classify_layout(2, 1, 0).layout == "UniqueAntiSaddle"
    rep = classify_layout(10, F(5, 4), F(-33, 20))
    assert (rep.layout, rep.case) == ("ThreeDistinct", "c2")


def test_invalid_parameters_rejected():
    with pytest.raises(InvalidParameters):
        ReducedParams(1, 10, 1, -2)  # b = -2 sqrt(a)
    with pytest.raises(InvalidParameters):
        ReducedParams(1, 1, 1, 0)
    with pytest.raises(InvalidParameters):
        ModelParams(1, 10, 1, 1, 0, 1, 0)


def test_origin_cases():
    dirs, case = origin_analysis(F(1, 2))
    assert case == 1 and dirs == [0.0, math.pi / 2]
    assert origin_analysis(1)[1] == 2
    dirs, case = origin_analysis(2)
    assert case == 3
    assert dirs[1] == pytest.approx(math.atan(0.5))
    for th in dirs:
        assert abs(origin_char_function(th, 2, 10)) < 1e-12


def test_three_eq_reparam_roots():
    rng = random.Random(9)
    done = 0
    while done < 20:
        K = F(rng.randint(30, 200), 10)
        al = F(rng.randint(11, 100), 10)
        be = F(rng.randint(11, 100), 10)
        if not (1 < al < be < K) or not three_eq_condition(K, al, be):
            continue
        q, (P, Q) = three_eq_reparam(ThreeEqParams(K, al, be, 1))
        assert [r.x for r in reduced_equilibria(q)] == [1, al, be]
        for x in (1, al, be):
            assert P.eval({"x": x, "y": x}) == 0 and Q.eval({"x": x, "y": x}) == 0
        done += 1


def test_simultaneous_hopf_reference_point():
    hp = simultaneous_hopf(10, 4)
    assert hp.s0 == F(19, 50) and hp.alpha0 == F(85, 46)
    assert hp.v1 == (0, 0)
    assert hp.v3_signs == (1, 1)
    assert hp.valid


def test_fbar_positive_coefficients():
    for K in (F(11, 10), 2, 10, 100):
        _, coeffs = fbar1(F(K), 1)
        assert all(c > 0 for c in coeffs)
    value, sign = f1_via_fbar(10, 4)
    assert sign == 1
    eps = F(6, 3)
    assert value == 9**6 * fbar1(F(10), eps)[0] / (eps + 1) ** 6
