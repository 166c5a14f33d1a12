"""Randomized algebra property suites; each returns the list of failing cases."""
from __future__ import annotations

import random

from cycleforge.ratpoly import MultiPoly, pseudo_division, resultant, sturm_count
from oracles import brute_eval, poly_from_roots, rand_frac, rand_poly, sylvester_det

V3 = ("x", "y", "z")
V2 = ("x", "y")


def ring_axioms(n=1000, seed=11) -> list:
    rng = random.Random(seed)
    bad = []
    zero = MultiPoly({}, V3)
    one = MultiPoly.const(1, V3)
    for i in range(n):
        a, b, c = (rand_poly(rng, V3) for _ in range(3))
        pt = {v: rand_frac(rng) for v in V3}
        checks = [
            a + b == b + a,
            (a + b) + c == a + (b + c),
            a * b == b * a,
            (a * b) * c == a * (b * c),
            a * (b + c) == a * b + a * c,
            a + zero == a,
            a * one == a,
            a - a == zero,
            (a * b).eval(pt) == brute_eval(a, pt) * brute_eval(b, pt),
        ]
        if not all(checks):
            bad.append((i, checks))
    return bad


def pseudo_division_identity(n=1000, seed=12) -> list:
    rng = random.Random(seed)
    bad = []
    for i in range(n):
        A = rand_poly(rng, V2, 5, 7)
        B = rand_poly(rng, V2, 3, 4)
        if B.degree("x") < 1:
            B = B + MultiPoly.var("x", V2) * (rand_frac(rng) or 1)
        m, Q, R = pseudo_division(A, B, "x")
        lc = B.coeffs_in("x")[B.degree("x")]
        ok = lc**m * A == Q * B + R and (R.is_zero() or R.degree("x") < B.degree("x"))
        if not ok:
            bad.append(i)
    return bad


def _pos_deg(rng, vars, var, deg, terms):
    while True:
        p = rand_poly(rng, vars, deg, terms)
        if p.degree(var) >= 1:
            return p


def resultant_multiplicativity(n=1000, seed=13) -> list:
    rng = random.Random(seed)
    bad = []
    for i in range(n):
        A1 = _pos_deg(rng, V2, "x", 2, 3)
        A2 = _pos_deg(rng, V2, "x", 2, 3)
        B = _pos_deg(rng, V2, "x", 2, 3)
        lhs = resultant(A1 * A2, B, "x")
        rhs = resultant(A1, B, "x") * resultant(A2, B, "x")
        if lhs != rhs or resultant(A1, B, "x") != sylvester_det(A1, B, "x"):
            bad.append(i)
    return bad


def resultant_specialization(n=1000, seed=14) -> list:
    rng = random.Random(seed)
    bad = []
    done = 0
    while done < n:
        A = _pos_deg(rng, V2, "x", 3, 4)
        B = _pos_deg(rng, V2, "x", 3, 4)
        y0 = rand_frac(rng)
        la = A.coeffs_in("x")[A.degree("x")].eval({"y": y0})
        lb = B.coeffs_in("x")[B.degree("x")].eval({"y": y0})
        if la == 0 or lb == 0:
            continue
        Ay, By = A.subs({"y": y0}), B.subs({"y": y0})
        if Ay.degree("x") < 1 or By.degree("x") < 1:
            continue
        done += 1
        r_full = resultant(A, B, "x").subs({"y": y0})
        r_spec = resultant(Ay, By, "x")
        if r_full != r_spec:
            bad.append(done)
    return bad


def sturm_vs_oracle(n=1000, seed=15) -> list:
    rng = random.Random(seed)
    bad = []
    for i in range(n):
        k = rng.randint(0, 5)
        roots = sorted({rand_frac(rng, 12, 3) for _ in range(k)})
        # a repeated root exercises the squarefree reduction
        mult = list(roots) + (roots[:1] if roots and rng.random() < 0.3 else [])
        p = poly_from_roots(rng, mult, rng.randint(0, 2))
        lo, hi = sorted((rand_frac(rng, 15, 2), rand_frac(rng, 15, 2)))
        if rng.random() < 0.2 and roots:
            hi = rng.choice(roots)  # root on the closed end
        if rng.random() < 0.2 and roots:
            lo = rng.choice(roots)  # root on the open end
        expected = sum(1 for r in roots if lo < r <= hi)
        if lo >= hi:
            continue
        if sturm_count(p, (lo, hi)) != expected or sturm_count(p) != len(roots):
            bad.append(i)
    return bad


SUITES = {
    "ring axioms": ring_axioms,
    "pseudo-division identity": pseudo_division_identity,
    "resultant multiplicativity": resultant_multiplicativity,
    "resultant specialization": resultant_specialization,
    "Sturm vs oracle": sturm_vs_oracle,
}
