"""Leslie-type predator-prey model with generalized Holling III response.

Original system, with prey ``x`` and predator ``y``::

    x' = r x (1 - x/K) - m x^2 y / (a x^2 + b x + 1)
    y' = s y (1 - y / (h x))

Scaling an interior equilibrium to (1, 1) leaves four parameters
``(s, K, a, b)``; multiplying the field by ``K x (a x^2 + b x + 1)`` (positive
on x > 0) gives the quintic polynomial system used for all local analysis::

    x' = (a x^2 + b x + 1)(K - x) x^2 - (K - 1)(a + b + 1) x^3 y
    y' = K s y (x - y)(a x^2 + b x + 1)

Exact inputs (``int``/``Fraction``/decimal strings) give exact outputs; floats
are accepted on every path and treated numerically.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Sequence

import numpy as np

from .ratpoly import MultiPoly, _squarefree_dense, _ueval, _uderiv, sturm_count, upoly_gcd
from .isolate import isolate_univariate

Number = Fraction | float


def num(x) -> Number:
    """Coerce to Fraction when exact (int, Fraction, numeric string), else float."""
    if isinstance(x, bool):
        raise TypeError("bool is not a number here")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x)
    return float(x)


def is_exact(*xs) -> bool:
    return all(isinstance(x, Fraction) for x in xs)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def _above_minus_two_sqrt(b, a) -> bool:
    """``b > -2*sqrt(a)`` without square roots."""
    return b >= 0 or b * b < 4 * a


class InvalidParameters(ValueError):
    pass


# ---------------------------------------------------------------------------
# parameter types


@dataclass(frozen=True)
class ModelParams:
    r: Number
    K: Number
    m: Number
    a: Number
    s: Number
    h: Number
    b: Number

    def __post_init__(self):
        for f in ("r", "K", "m", "a", "s", "h", "b"):
            object.__setattr__(self, f, num(getattr(self, f)))
        for f in ("r", "K", "m", "a", "s", "h"):
            if not getattr(self, f) > 0:
                raise InvalidParameters(f"{f} must be positive, got {getattr(self, f)}")
        if not _above_minus_two_sqrt(self.b, self.a):
            raise InvalidParameters(f"need b > -2*sqrt(a); got b={self.b}, a={self.a}")

    @property
    def exact(self) -> bool:
        return is_exact(self.r, self.K, self.m, self.a, self.s, self.h, self.b)

    def as_dict(self) -> dict:
        return {k: _jsonable(getattr(self, k)) for k in ("r", "K", "m", "a", "s", "h", "b")}


@dataclass(frozen=True)
class ReducedParams:
    s: Number
    K: Number
    a: Number
    b: Number

    def __post_init__(self):
        for f in ("s", "K", "a", "b"):
            object.__setattr__(self, f, num(getattr(self, f)))
        if not self.s > 0:
            raise InvalidParameters("s must be positive")
        if not self.K > 1:
            raise InvalidParameters("K must exceed 1")
        if not self.a > 0:
            raise InvalidParameters("a must be positive")
        if not _above_minus_two_sqrt(self.b, self.a):
            raise InvalidParameters(f"need b > -2*sqrt(a); got b={self.b}, a={self.a}")

    @property
    def exact(self) -> bool:
        return is_exact(self.s, self.K, self.a, self.b)

    def with_s(self, s) -> "ReducedParams":
        return ReducedParams(s, self.K, self.a, self.b)

    def as_dict(self) -> dict:
        return {k: _jsonable(getattr(self, k)) for k in ("s", "K", "a", "b")}


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    return x


# ---------------------------------------------------------------------------
# equilibria


@dataclass
class RootInfo:
    x: Number
    multiplicity: int
    exact: bool
    interval: tuple | None = None

    def as_dict(self) -> dict:
        d = {"x": _jsonable(self.x) if self.exact else float(self.x), "multiplicity": self.multiplicity,
             "exact": self.exact}
        return d


def equilibrium_cubic(p: ModelParams) -> list:
    """Coefficients (low to high) of a x^3 + (Kmh/r + b - Ka) x^2 + (1 - Kb) x - K."""
    return [-p.K, 1 - p.K * p.b, p.K * p.m * p.h / p.r + p.b - p.K * p.a, p.a]


def _exact_roots(dense: list, lo, hi) -> list[RootInfo]:
    sq = _squarefree_dense(dense)
    out = []
    for iv in isolate_univariate(sq, (lo, hi), Fraction(1, 2**80)):
        # rational roots are recovered exactly from a tight enclosure
        guess = iv.mid.limit_denominator(10**12)
        if _ueval(sq, guess) == 0:
            x, exact = guess, True
        elif iv.lo == iv.hi:
            x, exact = iv.lo, True
        else:
            x, exact = float(iv.mid), False
        out.append(RootInfo(x, _multiplicity(dense, iv), exact, (iv.lo, iv.hi)))
    return out


def _multiplicity(dense: list, iv) -> int:
    k, g = 1, list(dense)
    while True:
        g = upoly_gcd(g, _uderiv(g))
        if len(g) <= 1:
            return k
        lo = iv.lo - Fraction(1, 2**200) if iv.lo == iv.hi else iv.lo
        if sturm_count(_squarefree_dense(g), (lo, iv.hi)) == 0:
            return k
        k += 1


def _numeric_roots(coeffs: Sequence[float], lo: float, hi: float, sep_tol=1e-9) -> list[RootInfo]:
    rts = np.roots([float(c) for c in reversed(coeffs)])
    scale = max(1.0, max(abs(r) for r in rts))
    reals = sorted(float(r.real) for r in rts if abs(r.imag) <= 1e-7 * scale)
    reals = [x for x in reals if lo < x < hi]
    out: list[RootInfo] = []
    for x in reals:
        if out and abs(x - float(out[-1].x)) <= sep_tol * max(1.0, abs(x)) * 1e3:
            out[-1].multiplicity += 1
            continue
        out.append(RootInfo(x, 1, False))
    return out


def interior_equilibria(p: ModelParams) -> list[RootInfo]:
    """Prey coordinates of interior equilibria (roots of the cubic in (0, K)), ascending."""
    c = equilibrium_cubic(p)
    if p.exact:
        return _exact_roots(c, Fraction(0), p.K)
    return _numeric_roots(c, 0.0, float(p.K))


def reduced_equilibria(q_or_K, a=None, b=None) -> list[RootInfo]:
    """Roots in (0, K) of (x - 1)(a x^2 + (Kb + K - 1) x + K) for the reduced form."""
    if isinstance(q_or_K, ReducedParams):
        K, a, b = q_or_K.K, q_or_K.a, q_or_K.b
    else:
        K, a, b = num(q_or_K), num(a), num(b)
    quad = [K, K * b + K - 1, a]
    cubic = [-quad[0], quad[0] - quad[1], quad[1] - quad[2], quad[2]]
    if is_exact(K, a, b):
        return _exact_roots(cubic, Fraction(0), K)
    return _numeric_roots(cubic, 0.0, float(K))


def normalize(p: ModelParams, x_star) -> ReducedParams:
    """Rescale the equilibrium at prey level ``x_star`` to (1, 1)."""
    x = num(x_star)
    if not 0 < x < p.K:
        raise InvalidParameters("x_star must lie in (0, K)")
    q = ReducedParams(p.s / p.r, p.K / x, p.a * x * x, p.b * x)
    # side conditions: equilibrium at (1, 1) with h = 1
    y = p.h * x
    m_red = p.m * x * y / p.r
    target = (q.a + q.b + 1) * (1 - 1 / q.K)
    if q.exact and isinstance(m_red, Fraction):
        if m_red != target:
            raise InvalidParameters("x_star is not an equilibrium")
    elif abs(float(m_red) - float(target)) > 1e-8 * max(1.0, abs(float(target))):
        raise InvalidParameters("x_star is not an equilibrium (numerically)")
    return q


# ---------------------------------------------------------------------------
# Jacobian and classification at E*(1, 1)


def d_e(K, a, b):
    return K * b + 2 * K + a - 1, K * a - K - 2 * a - b


def jacobian_interior(q: ReducedParams):
    """(trace, det, d, e) of the quintic system at (1, 1)."""
    d, e = d_e(q.K, q.a, q.b)
    g = q.a + q.b + 1
    return e - q.K * q.s * g, q.K * q.s * g * d, d, e


@dataclass(frozen=True)
class DiscriminantBundle:
    Delta: Number | None
    DeltaBar: Number
    psi_coeffs: tuple
    DeltaTilde: Number

    def as_dict(self) -> dict:
        return {
            "Delta": None if self.Delta is None else _fmt(self.Delta),
            "DeltaBar": _fmt(self.DeltaBar),
            "psi_coeffs": [_fmt(c) for c in self.psi_coeffs],
            "DeltaTilde": _fmt(self.DeltaTilde),
        }


def _fmt(x):
    if isinstance(x, int):
        return x
    return _jsonable(x) if isinstance(x, Fraction) else float(x)


def psi_coeffs(K, a, b) -> tuple:
    g = a + b + 1
    mu2 = K * K * g * g
    mu1 = -2 * K * g * (K * a + 2 * K * b + 3 * K - b - 2)
    mu0 = (K * a - K - 2 * a - b) ** 2
    return mu2, mu1, mu0


def discriminants(q: ReducedParams, p: ModelParams | None = None) -> DiscriminantBundle:
    mu = psi_coeffs(q.K, q.a, q.b)
    delta = None
    if p is not None:
        A = (p.K * p.m * p.h / p.r + p.b - p.K * p.a) ** 2 + 3 * p.a * (p.K * p.b - 1)
        B = (p.K * p.m * p.h / p.r + p.b - p.K * p.a) * (1 - p.K * p.b) + 9 * p.a * p.K
        C = (1 - p.K * p.b) ** 2 - 3 * (p.K * p.m * p.h / p.r + p.b - p.K * p.a) * p.K
        delta = B * B - 4 * A * C
    dbar = (q.K * q.b + q.K - 1) ** 2 - 4 * q.a * q.K
    return DiscriminantBundle(delta, dbar, mu, mu[1] ** 2 - 4 * mu[2] * mu[0])


TAGS = ("HyperbolicSaddle", "Degenerate", "StableNode", "StableFocus", "UnstableNode",
        "UnstableFocus", "WeakFocusOrCenter")


@dataclass
class EquilibriumReport:
    x_star: Number
    y_star: Number
    trace: Number
    det: Number
    tag: str
    subtag: str = ""
    thresholds: dict = field(default_factory=dict)
    reduced: ReducedParams | None = None

    def as_dict(self) -> dict:
        d = {
            "x_star": _fmt(self.x_star),
            "y_star": _fmt(self.y_star),
            "trace": _fmt(self.trace),
            "det": _fmt(self.det),
            "tag": self.tag,
            "thresholds": {k: _fmt(v) for k, v in self.thresholds.items()},
        }
        if self.subtag:
            d["subtag"] = self.subtag
        if self.reduced is not None:
            d["reduced"] = self.reduced.as_dict()
        return d


def _sqrt(x) -> float:
    return math.sqrt(float(x)) if x >= 0 else float("nan")


def thresholds(K, a, b) -> dict:
    """s-thresholds: s1 (e = 0), s2 < s3 (node/focus switches), s* (trace zero)."""
    d, e = d_e(K, a, b)
    g = a + b + 1
    c = K * a + 2 * K * b + 3 * K - b - 2
    out = {}
    if d > 0 and c > 0:
        if e == 0:
            mu2, mu1, _ = psi_coeffs(K, a, b)
            out["s1"] = -mu1 / mu2
        else:
            root = _sqrt((K - 1) * g * d)
            out["s2"] = (float(c) - 2 * root) / float(K * g)
            out["s3"] = (float(c) + 2 * root) / float(K * g)
    if e > 0:
        out["s_star"] = e / (K * g)
    return out


def classify_interior(q: ReducedParams) -> EquilibriumReport:
    """Type and stability of E*(1, 1); total on the reduced parameter domain."""
    tr, det, d, e = jacobian_interior(q)
    th = thresholds(q.K, q.a, q.b)
    subtag = ""
    if d < 0:
        tag = "HyperbolicSaddle"
    elif d == 0:
        tag = "Degenerate"
    else:
        mu2, mu1, mu0 = psi_coeffs(q.K, q.a, q.b)
        psi = (mu2 * q.s + mu1) * q.s + mu0
        st = _sign(tr)
        if st == 0:
            tag = "WeakFocusOrCenter"
        else:
            kind = "Focus" if psi < 0 else "Node"
            tag = ("Stable" if st < 0 else "Unstable") + kind
            if psi == 0:
                subtag = "NodeFocusBoundary"
    return EquilibriumReport(1, 1, tr, det, tag, subtag, th, q)


def classify_model(p: ModelParams) -> list[EquilibriumReport]:
    """Classify every interior equilibrium of the original system."""
    out = []
    for root in interior_equilibria(p):
        x = root.x
        if root.multiplicity > 1:
            out.append(EquilibriumReport(x, p.h * x, 0, 0, "Degenerate", "multiple root"))
            continue
        q = normalize(p, x)
        rep = classify_interior(q)
        rep.x_star, rep.y_star = x, p.h * x
        out.append(rep)
    return out


# ---------------------------------------------------------------------------
# equilibrium layout


LAYOUTS = ("UniqueAntiSaddle", "UniqueDegenerate", "TwoEquilibria", "ThreeDistinct")


@dataclass
class LayoutReport:
    layout: str
    case: str
    equilibria: list
    degenerate: list

    def as_dict(self) -> dict:
        return {"layout": self.layout, "case": self.case,
                "equilibria": [_fmt(x) if not isinstance(x, str) else x for x in self.equilibria],
                "degenerate": [_fmt(x) if not isinstance(x, str) else x for x in self.degenerate]}


def classify_layout(K, a, b) -> LayoutReport:
    """Number and kind of interior equilibria of the reduced system."""
    K, a, b = num(K), num(a), num(b)
    if not (K > 1 and a > 0 and _above_minus_two_sqrt(b, a)):
        raise InvalidParameters("need K > 1, a > 0, b > -2*sqrt(a)")
    t = K * b + K - 1
    dbar = t * t - 4 * a * K
    # b vs 1/K - 1 - 2 sqrt(a/K)  <=>  t vs -2 sqrt(aK)
    if t >= 0 or dbar < 0:
        return LayoutReport("UniqueAntiSaddle", "a", [1], [])
    if dbar == 0:
        if a == K:
            return LayoutReport("UniqueDegenerate", "b1", [1], [1])
        x2 = (K / a) ** 0.5 if not is_exact(K, a) else _exact_sqrt_or_float(K / a)
        return LayoutReport("TwoEquilibria", "b2", sorted([1, x2], key=float), [x2])
    d, _ = d_e(K, a, b)
    roots = [x for x in _quadratic_roots(a, t, K)]
    if d == 0:
        other = K / a
        return LayoutReport("TwoEquilibria", "c1", sorted([1, other], key=float), [1])
    return LayoutReport("ThreeDistinct", "c2", sorted([1] + roots, key=float), [])


def _exact_sqrt_or_float(x: Fraction):
    n, dd = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(dd)
    if rn * rn == n and rd * rd == dd:
        return Fraction(rn, rd)
    return math.sqrt(float(x))


def _quadratic_roots(a, t, K):
    disc = t * t - 4 * a * K
    if is_exact(a, t, K) and isinstance(disc, Fraction):
        r = _exact_sqrt_or_float(disc)
        if isinstance(r, Fraction):
            return [(-t - r) / (2 * a), (-t + r) / (2 * a)]
    r = math.sqrt(float(disc))
    return [(-float(t) - r) / (2 * float(a)), (-float(t) + r) / (2 * float(a))]


# ---------------------------------------------------------------------------
# origin


def origin_analysis(s) -> tuple[list[float], int]:
    """Zeros in [0, pi/2] of K sin cos [(s-1) cos - s sin] and the case index.

    Case 1 for s < 1, case 2 for s = 1 (the extra direction collapses onto
    theta = 0), case 3 for s > 1 with extra direction arctan(1 - 1/s).
    """
    s = num(s)
    if not s > 0:
        raise InvalidParameters("s must be positive")
    dirs = [0.0, math.pi / 2]
    if s > 1:
        dirs.insert(1, math.atan(1 - 1 / float(s)))
        return dirs, 3
    return dirs, 2 if s == 1 else 1


def origin_char_function(theta: float, s, K=1.0) -> float:
    s = float(s)
    return float(K) * math.sin(theta) * math.cos(theta) * ((s - 1) * math.cos(theta) - s * math.sin(theta))


# ---------------------------------------------------------------------------
# polynomial systems

XY = ("x", "y")


def quintic_system(q: ReducedParams) -> tuple[MultiPoly, MultiPoly]:
    x = MultiPoly.var("x", XY)
    y = MultiPoly.var("y", XY)
    K, a, b, s = q.K, q.a, q.b, q.s
    w = a * x * x + b * x + 1
    P = w * (K - x) * x * x - (K - 1) * (a + b + 1) * x**3 * y
    Q = K * s * y * (x - y) * w
    return P, Q


def reduced_rhs(q: ReducedParams):
    """Right-hand side of the rational reduced system as a numpy-friendly callable."""
    s, K, a, b = (float(v) for v in (q.s, q.K, q.a, q.b))
    c = (a + b + 1) * (K - 1) / K

    def f(t, z):
        x, y = z
        return [x * (1 - x / K) - c * x * x * y / (a * x * x + b * x + 1), s * y * (1 - y / x)]

    return f


def model_rhs(p: ModelParams):
    r, K, m, a, s, h, b = (float(v) for v in (p.r, p.K, p.m, p.a, p.s, p.h, p.b))

    def f(t, z):
        x, y = z
        return [r * x * (1 - x / K) - m * x * x * y / (a * x * x + b * x + 1), s * y * (1 - y / (h * x))]

    return f


# ---------------------------------------------------------------------------
# three-equilibrium parametrization


@dataclass(frozen=True)
class ThreeEqParams:
    K: Number
    alpha: Number
    beta: Number
    s: Number = Fraction(1)

    def __post_init__(self):
        for f in ("K", "alpha", "beta", "s"):
            object.__setattr__(self, f, num(getattr(self, f)))
        if not (1 < self.alpha < self.beta < self.K):
            raise InvalidParameters("need 1 < alpha < beta < K")
        if not self.s > 0:
            raise InvalidParameters("s must be positive")
        if not three_eq_condition(self.K, self.alpha, self.beta):
            raise InvalidParameters("alpha*beta - K*alpha - K*beta - K*alpha*beta + 2K sqrt(K alpha beta) <= 0")


def three_eq_condition(K, al, be) -> bool:
    """alpha beta - K alpha - K beta - K alpha beta + 2 K sqrt(K alpha beta) > 0."""
    A = K * al + K * be + K * al * be - al * be
    return A < 0 or 4 * K**3 * al * be > A * A


def three_eq_reparam(t: ThreeEqParams) -> tuple[ReducedParams, tuple[MultiPoly, MultiPoly]]:
    K, al, be = t.K, t.alpha, t.beta
    a = K / (al * be)
    b = 1 / K - 1 / al - 1 / be - 1
    q = ReducedParams(t.s, K, a, b)
    return q, reparam_system(K, al, be, t.s)


def reparam_bracket(K, al, be) -> MultiPoly:
    x = MultiPoly.var("x", XY)
    return K * K * x * x - (K * al * be + K * al + K * be - al * be) * x + K * al * be


def reparam_system(K, al, be, s) -> tuple[MultiPoly, MultiPoly]:
    """The quintic system scaled by K alpha beta, written in (K, alpha, beta)."""
    x = MultiPoly.var("x", XY)
    y = MultiPoly.var("y", XY)
    w = reparam_bracket(K, al, be)
    P = x * x * (K - x) * w - (K - 1) * (K - al) * (K - be) * x**3 * y
    Q = K * s * y * (x - y) * w
    return P, Q


def v1_traces(K, al, be, s) -> tuple:
    v11 = (-K * K * al * be + K**3 + K * al * be - 2 * K * K + K * al + K * be - al * be
           - s * K * (K - al) * (K - be))
    v13 = ((K**3 * be - 2 * K * K * be * be + K * al * be * be - K * K * al + K * al * be
            + K * be * be - al * be * be) * be * be - s * K * be**3 * (K - 1) * (K - al))
    return v11, v13


def s0_alpha0(K, be) -> tuple:
    K, be = num(K), num(be)
    s0 = ((K**3 * be - 2 * K * K * be * be + K**3 - 2 * K * K * be + 3 * K * be * be - 2 * K * K
           + 3 * K * be - 2 * be * be)
          / (K * ((be + 1) * K * K - 4 * be * K + be * be + be)))
    al0 = K * be * (3 * K * K - 2 * K * be - 2 * K + be) / ((K * be + K - be) * (K * K - be))
    return s0, al0


@dataclass
class HopfPair:
    K: Number
    beta: Number
    s0: Number
    alpha0: Number
    v1: tuple
    v3_signs: tuple | None = None
    valid: bool = True

    def as_dict(self) -> dict:
        d = {"K": _fmt(self.K), "beta": _fmt(self.beta), "s0": _fmt(self.s0), "alpha0": _fmt(self.alpha0),
             "V1": [_fmt(v) for v in self.v1], "valid": self.valid}
        if self.v3_signs is not None:
            d["V3_signs"] = list(self.v3_signs)
        return d


def simultaneous_hopf(K, beta, with_v3: bool = True) -> HopfPair:
    """s0, alpha0 making both anti-saddles weak foci; checks V1 at both vanish."""
    K, beta = num(K), num(beta)
    if not (1 < beta < K):
        raise InvalidParameters("need 1 < beta < K")
    s0, al0 = s0_alpha0(K, beta)
    v1 = v1_traces(K, al0, beta, s0)
    # the generic Jacobian trace of the system must agree with the closed forms
    P, Q = reparam_system(K, al0, beta, s0)
    tr1 = _trace_at(P, Q, 1, 1)
    tr3 = _trace_at(P, Q, beta, beta)
    if is_exact(K, beta) and (tr1 != v1[0] or tr3 != v1[1]):
        raise AssertionError("closed-form traces disagree with the Jacobian")
    valid = s0 > 0 and 1 < al0 < beta and three_eq_condition(K, al0, beta)
    signs = None
    # outside the valid set the outer equilibria need not be anti-saddles
    if with_v3 and valid:
        from .lyapunov import PlanarPolySystem, lyapunov_constants

        sg = []
        for pt in ((1, 1), (beta, beta)):
            seq = lyapunov_constants(PlanarPolySystem(P, Q, pt), 2)
            sg.append(_sign(seq.values[1]))
        signs = tuple(sg)
    return HopfPair(K, beta, s0, al0, v1, signs, valid)


def _trace_at(P: MultiPoly, Q: MultiPoly, x, y):
    pt = {"x": x, "y": y}
    return P.derivative("x").eval(pt) + Q.derivative("y").eval(pt)


def fbar1(K, eps):
    """The printed seven-coefficient polynomial in eps with K-polynomial coefficients."""
    c = [
        K**5,
        11 * K**5 - 4 * K**4 + 2 * K**3,
        29 * K**5 + 7 * K**4 - 9 * K**3 + 6 * K**2,
        33 * K**5 + 42 * K**4 - 18 * K**3 + 3 * K**2 + 6 * K,
        6 * K**5 + 75 * K**4 - 4 * K**3 - 11 * K**2 + 12 * K + 2,
        24 * K**4 + 45 * K**3 - 21 * K**2 + 7 * K + 5,
        24 * K**3 - 4 * K + 4,
    ]
    return sum(ci * eps**i for i, ci in enumerate(c)), c


def f1_via_fbar(K, beta) -> tuple:
    """F1 = (K-1)^6 Fbar1 / (eps+1)^6 with eps = (K-beta)/(beta-1); returns (value, sign)."""
    K, beta = num(K), num(beta)
    if beta == 1:
        raise InvalidParameters("beta = 1 leaves eps undefined")
    if not (1 < beta < K):
        raise InvalidParameters("need 1 < beta < K")
    eps = (K - beta) / (beta - 1)
    fb, _ = fbar1(K, eps)
    val = (K - 1) ** 6 * fb / (eps + 1) ** 6
    return val, _sign(val)


def fig11_params() -> ModelParams:
    return ModelParams(1, 10, Fraction("0.54"), Fraction("1.25"), Fraction("0.4"), 1, Fraction("-1.65"))
