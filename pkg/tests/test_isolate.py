from fractions import Fraction

from cycleforge.isolate import (
    Box,
    Interval,
    Membership,
    Sign,
    box_sign,
    isolate_triangular,
    isolate_univariate,
    range_bounds,
    region_membership,
)
from cycleforge.ratpoly import MultiPoly, poly_parse


def test_isolate_sqrt2():
    p = poly_parse("x^2 - 2", ("x",))
    roots = isolate_univariate(p, (0, 2), Fraction(1, 2**40))
    assert len(roots) == 1
    r = roots[0]
    assert r.lo**2 < 2 < r.hi**2 or r.lo**2 == 2
    assert r.width <= Fraction(1, 2**40)


def test_isolate_all_real_roots_disjoint():
    x = MultiPoly.var("x")
    p = (x - 1) * (x - Fraction(1001, 1000)) * (x + 5) * (x * x + 3)
    roots = isolate_univariate(p, None, Fraction(1, 2**30))
    assert len(roots) == 3
    for a, b in zip(roots, roots[1:]):
        assert a.hi < b.lo
    assert any(r.lo <= 1 <= r.hi for r in roots)


def test_isolate_exact_rational_root():
    p = poly_parse("3*x - 1", ("x",))
    (r,) = isolate_univariate(p, None, Fraction(1, 2**20))
    assert r.lo <= Fraction(1, 3) <= r.hi


def test_range_bounds_enclose_samples():
    p = poly_parse("x^2*y - 3*x*y + y^3 - 2", ("x", "y"))
    box = Box({"x": Interval(Fraction(-1), Fraction(2)), "y": Interval(Fraction(1, 2), Fraction(3, 2))})
    lo, hi = range_bounds(p, box)
    for i in range(7):
        for j in range(7):
            pt = {"x": Fraction(-1) + Fraction(3 * i, 6), "y": Fraction(1, 2) + Fraction(j, 6)}
            assert lo <= p.eval(pt) <= hi


def test_box_sign_positive_and_unknown():
    p = poly_parse("x^2 + y + 5", ("x", "y"))
    box = Box({"x": Interval(Fraction(0), Fraction(1)), "y": Interval(Fraction(0), Fraction(1))})
    assert box_sign(p, box).status is Sign.POSITIVE
    q = poly_parse("x - y", ("x", "y"))
    assert box_sign(q, box).status is Sign.INDETERMINATE


def test_box_sign_point_is_exact():
    p = poly_parse("x*y - 6", ("x", "y"))
    box = Box.from_point({"x": 2, "y": 3})
    cert = box_sign(p, box)
    assert cert.status is Sign.INDETERMINATE
    assert cert.lower_bound == cert.upper_bound == 0


def test_triangular_system():
    vars_ = ("x", "y")
    f1 = poly_parse("x^2 - 2", vars_)
    f2 = poly_parse("y^2 - x", vars_)
    dom = Box({"x": Interval(Fraction(0), Fraction(2)), "y": Interval(Fraction(0), Fraction(2))})
    sols = isolate_triangular([f1, f2], dom, Fraction(1, 2**20))
    assert len(sols) == 1
    y = sols[0]["y"]
    assert y.lo**4 <= 2 <= y.hi**4


def test_region_membership_point_and_box():
    # (K, a, b) = (10, 5/4, -33/20) sits in the weak-focus region
    pt = {"K": 10, "a": Fraction(5, 4), "b": Fraction(-33, 20)}
    assert region_membership(pt, "Lambda") is Membership.INSIDE
    assert region_membership({"K": Fraction(1, 2), "a": 1, "b": 0}, "Lambda") is Membership.OUTSIDE
    wide = Box({"K": Interval(Fraction(1, 2), Fraction(20)), "a": Interval(Fraction(1), Fraction(2)),
                "b": Interval(Fraction(-1), Fraction(0))})
    assert region_membership(wide, "Lambda") is Membership.UNDETERMINED
