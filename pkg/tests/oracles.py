"""Independent reference implementations used only by the tests.

Nothing here calls the elimination or isolation code under test: the
Sylvester determinant is built and expanded from scratch, root counts come
from polynomials assembled out of known roots, and the first focal value
uses the textbook third-derivative formula.
"""
from __future__ import annotations

import random
from fractions import Fraction

from cycleforge.ratpoly import MultiPoly


def rand_frac(rng: random.Random, num=9, den=4) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def rand_poly(rng: random.Random, vars, max_deg=3, max_terms=5, num=9, den=4) -> MultiPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(0, max_deg) for _ in vars)
        if sum(e) <= max_deg:
            terms[e] = rand_frac(rng, num, den)
    return MultiPoly(terms, vars)


def coeffs_in(p: MultiPoly, var: str) -> list[MultiPoly]:
    """Coefficients of ``p`` in ``var`` (ascending), rebuilt from the term map."""
    i = p.vars.index(var)
    deg = max((e[i] for e in p.terms), default=-1)
    out = [dict() for _ in range(deg + 1)]
    for e, c in p.terms.items():
        ne = e[:i] + (0,) + e[i + 1:]
        out[e[i]][ne] = c
    return [MultiPoly(t, p.vars) for t in out]


def det(M):
    """Laplace expansion along the first row; fine for the small sizes used here."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def sylvester_det(A: MultiPoly, B: MultiPoly, var: str):
    ca, cb = coeffs_in(A, var), coeffs_in(B, var)
    m, n = len(ca) - 1, len(cb) - 1
    zero = MultiPoly({}, A.vars)
    size = m + n
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(ca)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(cb)):
            row[i + j] = c
        rows.append(row)
    return det(rows)


def poly_from_roots(rng: random.Random, roots, extra_quadratics=0, var="x") -> MultiPoly:
    """prod (x - r) times positive-definite quadratics and a random nonzero scale."""
    x = MultiPoly.var(var)
    p = MultiPoly.const(rand_frac(rng, 5, 3) or Fraction(1), (var,))
    for r in roots:
        p = p * (x - r)
    for _ in range(extra_quadratics):
        c = Fraction(rng.randint(1, 9), rng.randint(1, 4))
        s = rand_frac(rng, 5, 3)
        p = p * ((x - s) * (x - s) + c)
    return p


def gh_first_coefficient(f: MultiPoly, g: MultiPoly, w) -> Fraction:
    """Textbook first Lyapunov coefficient of x' = -w y + f, y' = w x + g at the origin."""
    o = {"x": 0, "y": 0}

    def d(p, *vs):
        for v in vs:
            p = p.derivative(v)
        return p.eval(o)

    return ((d(f, "x", "x", "x") + d(f, "x", "y", "y") + d(g, "x", "x", "y") + d(g, "y", "y", "y")) / 16
            + (d(f, "x", "y") * (d(f, "x", "x") + d(f, "y", "y")) - d(g, "x", "y") * (d(g, "x", "x") + d(g, "y", "y"))
               - d(f, "x", "x") * d(g, "x", "x") + d(f, "y", "y") * d(g, "y", "y")) / (16 * w))


def brute_eval(p: MultiPoly, point: dict):
    total = Fraction(0)
    for e, c in p.terms.items():
        t = Fraction(c)
        for v, k in zip(p.vars, e):
            t *= Fraction(point[v]) ** k
        total += t
    return total


def floquet_by_divergence(rhs, start, period, h=1e-6):
    """Planar return-map derivative exp(integral of div f) along one period.

    The divergence comes from central differences of ``rhs``; the integral is
    carried as a third state so it uses the same adaptive steps.
    """
    import math

    from scipy.integrate import solve_ivp

    def div(z):
        x, y = z
        fx1 = rhs(0.0, [x + h, y])[0] - rhs(0.0, [x - h, y])[0]
        fy1 = rhs(0.0, [x, y + h])[1] - rhs(0.0, [x, y - h])[1]
        return (fx1 + fy1) / (2 * h)

    def aug(t, z):
        dx, dy = rhs(t, z[:2])
        return [dx, dy, div(z[:2])]

    sol = solve_ivp(aug, (0.0, period), [start[0], start[1], 0.0], method="LSODA", rtol=1e-11, atol=1e-12)
    return math.exp(sol.y[2, -1])
