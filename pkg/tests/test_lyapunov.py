import random
from fractions import Fraction

import pytest

from cycleforge.data import load_phi, paper_box
from cycleforge.isolate import Sign
from cycleforge.lyapunov import (
    PHI_SIGN,
    NotAWeakFocus,
    PlanarPolySystem,
    canonicalize_weak_focus,
    closed_form_signs,
    closed_form_values,
    jacobian_rank_certificate,
    lyapunov_constants,
    order_two_at_bstar,
    reduced_focus_constants,
    weak_focus_order,
)
from cycleforge.model import ReducedParams, thresholds
from cycleforge.ratpoly import MultiPoly, poly_parse
from oracles import gh_first_coefficient, rand_frac
from test_model import rand_lambda_point

F = Fraction
XY = ("x", "y")
x = MultiPoly.var("x", XY)
y = MultiPoly.var("y", XY)


def system(P, Q, point=(0, 0)):
    return PlanarPolySystem(poly_parse(P, XY) if isinstance(P, str) else P,
                            poly_parse(Q, XY) if isinstance(Q, str) else Q, point)


def test_radial_cubic():
    # r' = r^3
    seq = lyapunov_constants(system("-y + x^3 + x*y^2", "x + x^2*y + y^3"), 3)
    assert seq.values == [0, 2, 0]


def test_radial_quintic_damped():
    # r' = -r^5
    r4 = (x * x + y * y) ** 2
    seq = lyapunov_constants(system(-y - x * r4, x - y * r4), 3)
    assert seq.values == [0, 0, -2]
    assert seq.order == 2


def test_reversible_center_has_no_focal_values():
    # invariant under (x, y, t) -> (x, -y, -t)
    seq = lyapunov_constants(system("-y + x*y", "x + x^2 - y^2"), 5)
    assert seq.values == [0, 0, 0, 0, 0]
    assert seq.order is None


def test_hamiltonian_center():
    # H = (x^2 + y^2)/2 + x^3/3 - x*y^2
    seq = lyapunov_constants(system("-y + 2*x*y", "x + x^2 - y^2"), 4)
    assert seq.values[1:] == [0, 0, 0]


def test_matches_textbook_coefficient():
    rng = random.Random(21)
    for _ in range(60):
        w = F(rng.randint(1, 6), rng.randint(1, 3))
        f = g = MultiPoly({}, XY)
        for i in range(2, 4):
            for j in range(i + 1):
                f = f + rand_frac(rng) * x ** j * y ** (i - j)
                g = g + rand_frac(rng) * x ** j * y ** (i - j)
        seq = lyapunov_constants(PlanarPolySystem(-w * y + f, w * x + g), 2)
        assert seq.values[0] == 0
        assert seq.values[1] == 2 * gh_first_coefficient(f, g, w)


def test_orientation_does_not_change_sign():
    ccw = lyapunov_constants(system("-y + x^3", "x"), 2)
    # reflect y -> -y: clockwise rotation with the same dynamics of |r|
    cw = lyapunov_constants(system("y + x^3", "-x"), 2)
    assert ccw.values[1] > 0 and cw.values[1] > 0
    assert canonicalize_weak_focus(system("y + x^3", "-x"))["rotation"] == "clockwise"


def test_time_scaling_covariance():
    base = system("-y + x^2 - x*y^2 + 3*x^3", "x + y^2 + x^2*y")
    for c in (F(2), F(1, 3)):
        a = lyapunov_constants(base, 3).values
        b = lyapunov_constants(base.scaled(c), 3).values
        assert b == [c * v for v in a]


def test_translation_to_focus():
    # the same field moved to (2, -1)
    sys0 = system("-y + x^3", "x + y^3")
    P = poly_parse("-y - 1 + x^3 - 6*x^2 + 12*x - 8", XY)
    Q = poly_parse("x - 2 + y^3 + 3*y^2 + 3*y + 1", XY)
    sys1 = PlanarPolySystem(P, Q, (2, -1))
    assert lyapunov_constants(sys0, 3).values == lyapunov_constants(sys1, 3).values


def test_nonzero_trace_returns_only_l1():
    seq = lyapunov_constants(system("x - y", "x"), 3)
    assert seq.values == [1]
    assert seq.notes


def test_saddle_rejected():
    with pytest.raises(NotAWeakFocus):
        lyapunov_constants(system("x", "-y"), 2)
    with pytest.raises(NotAWeakFocus):
        lyapunov_constants(system("x + 1", "y"), 2)


def test_sign_l3_matches_minus_phi1():
    phi1 = load_phi(1)
    rng = random.Random(2024)
    for _ in range(100):
        K, a, b = rand_lambda_point(rng)
        s = thresholds(K, a, b)["s_star"]
        L = reduced_focus_constants(ReducedParams(s, K, a, b), 2).values
        f = phi1.eval({"K": K, "a": a, "b": b})
        assert L[0] == 0
        assert (L[1] > 0) - (L[1] < 0) == -((f > 0) - (f < 0))
        v3 = closed_form_values(K, a, b)["V3"]
        assert (v3 > 0) == (L[1] > 0)


def test_fig11_focus_values():
    q = ReducedParams(F(11, 40), 10, F(5, 4), F(-33, 20))
    rep = weak_focus_order(q, n=3)
    assert rep.exact and rep.order == 1
    assert rep.values[:2] == [0, F(7411, 768)]
    assert closed_form_signs((10, F(5, 4), F(-33, 20))) == {"V3": "+", "V5": "-", "V7": "+", "V9": "-"}


def test_float_input_order():
    q = ReducedParams(11 / 40, 10.0, 1.25, -1.65)
    rep = weak_focus_order(q, n=2)
    assert not rep.exact and rep.order == 1


def test_phi_sign_table():
    assert PHI_SIGN == {1: -1, 2: 1, 3: -1, 4: 1}


def test_order_four_box_signs():
    signs = closed_form_signs(paper_box("K2", "a4", "b2"))
    assert signs["V9"] == "-"
    assert signs["V3"] == signs["V5"] == signs["V7"] == "?"


def test_rank_certificate_negative():
    cert = jacobian_rank_certificate()
    assert cert.status is Sign.NEGATIVE
    assert cert.upper_bound < 0


def test_order_two_at_bstar():
    rep = order_two_at_bstar()
    assert rep["order"] == 2
    assert rep["L3_sign_change"]
    assert rep["V5_sign"] == -1
    assert all(e["L1"] == 0 for e in rep["endpoints"])
