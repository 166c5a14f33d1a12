"""Lyapunov constants of planar polynomial weak foci.

The focus is moved to the origin and the linear part ``[[p, q], [r, -p]]``
(``q != 0`` whenever the determinant ``W`` is positive) is brought to
``X' = Y, Y' = -W X`` by ``X = u, Y = p u + q v``.  A formal integral

    F = G + F_3 + F_4 + ...,     G = X^2 + Y^2 / W

is built degree by degree so that ``dF/dt = sum_k L_{2k+1} G^(k+1)``.  Every
step is a linear solve over the coefficient field of the input, so rational
inputs give exact rational constants and no square root of ``W`` is needed.

``L_{2k+1} > 0`` means the focus repels at that order.  The constants are
defined up to a positive factor once the lower ones vanish, which is all that
sign and order statements use.  ``L_1`` is reported as the trace.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .isolate import Box, Interval, Sign, SignCert, box_sign, range_bounds
from .ratpoly import MultiPoly

Hom = dict  # {(i, j): coeff} for X^i Y^j, all of one degree


NORMALIZATION = "formal-integral/G=X^2+Y^2/W; positive means repelling; orientation-free"


class NotAWeakFocus(ValueError):
    pass


@dataclass
class PlanarPolySystem:
    """``x' = P(x, y), y' = Q(x, y)`` with an equilibrium at ``point``."""

    P: MultiPoly
    Q: MultiPoly
    point: tuple = (0, 0)
    vars: tuple = ("x", "y")

    def __post_init__(self):
        self.point = tuple(Fraction(c) if isinstance(c, (int, Fraction)) else c for c in self.point)

    def translated(self) -> tuple[MultiPoly, MultiPoly]:
        """P, Q in variables (u, v) centred at ``point``."""
        x, y = self.vars
        u = MultiPoly.var("u", ("u", "v"))
        v = MultiPoly.var("v", ("u", "v"))
        m = {x: u + self.point[0], y: v + self.point[1]}
        return self.P.compose(m).with_vars(("u", "v")), self.Q.compose(m).with_vars(("u", "v"))

    def scaled(self, c) -> "PlanarPolySystem":
        return PlanarPolySystem(self.P * c, self.Q * c, self.point, self.vars)


@dataclass
class LyapunovSequence:
    values: list
    exact: bool
    trace: object
    det: object
    notes: list = field(default_factory=list)
    normalization_note: str = NORMALIZATION

    @property
    def order(self) -> int | None:
        return _order(self.values, 0)

    def as_dict(self) -> dict:
        return {
            "values": [_out(v) for v in self.values],
            "labels": [f"L{2 * i + 1}" for i in range(len(self.values))],
            "exact": self.exact,
            "det": _out(self.det),
            "notes": list(self.notes),
            "normalization_note": self.normalization_note,
        }


def _out(v):
    if isinstance(v, Fraction):
        return str(v) if v.denominator != 1 else int(v)
    return float(v)


def _order(values, tol) -> int | None:
    if abs(values[0]) > tol * _scale(values[0]):
        return 0
    for k, v in enumerate(values[1:], start=1):
        if abs(v) > tol * _scale(v):
            return k
    return None


def _scale(v) -> float:
    return 0 if isinstance(v, Fraction) else 1.0


# ---------------------------------------------------------------------------
# homogeneous polynomial helpers


def _homog_parts(p: MultiPoly) -> dict[int, Hom]:
    parts: dict[int, Hom] = {}
    for (i, j), c in p.terms.items():
        parts.setdefault(i + j, {})[(i, j)] = c
    return parts


def _hmul(a: Hom, b: Hom) -> Hom:
    out: Hom = {}
    for (i1, j1), c1 in a.items():
        for (i2, j2), c2 in b.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, 0) + c1 * c2
    return out


def _hadd(a: Hom, b: Hom, c=1) -> Hom:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + c * v
    return out


def _dX(a: Hom) -> Hom:
    return {(i - 1, j): c * i for (i, j), c in a.items() if i}


def _dY(a: Hom) -> Hom:
    return {(i, j - 1): c * j for (i, j), c in a.items() if j}


def _solve(A: list[list], rhs: list) -> list:
    """Gaussian elimination; exact over Fraction, partial pivoting for floats."""
    n = len(A)
    M = [row[:] + [rhs[i]] for i, row in enumerate(A)]
    cols = len(A[0])
    r = 0
    piv_cols = []
    for c in range(cols):
        best = max(range(r, n), key=lambda i: abs(M[i][c]), default=None)
        if best is None or M[best][c] == 0:
            continue
        M[r], M[best] = M[best], M[r]
        pv = M[r][c]
        for i in range(n):
            if i != r and M[i][c] != 0:
                f = M[i][c] / pv
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv_cols.append((r, c))
        r += 1
        if r == n:
            break
    if len(piv_cols) < cols:
        raise ArithmeticError("singular system in the normal-form solve")
    x = [0] * cols
    for r, c in piv_cols:
        x[c] = M[r][-1] / M[r][c]
    return x


# ---------------------------------------------------------------------------
# core computation


def lyapunov_constants(sys: PlanarPolySystem, n: int = 3) -> LyapunovSequence:
    """First ``n`` constants ``L1, L3, ..., L_{2n-1}`` at ``sys.point`` (``n <= 6``).

    ``L1`` is the trace of the Jacobian.  When it is nonzero the higher
    constants are not defined and are omitted.
    """
    if not 1 <= n <= 6:
        raise ValueError("n must be between 1 and 6")
    Pu, Qu = sys.translated()
    exact = all(isinstance(c, Fraction) for c in list(Pu.terms.values()) + list(Qu.terms.values()))
    zero = Fraction(0) if exact else 0.0
    P_parts, Q_parts = _homog_parts(Pu), _homog_parts(Qu)
    if P_parts.get(0) or Q_parts.get(0):
        raise NotAWeakFocus("point is not an equilibrium")
    lin_P, lin_Q = P_parts.get(1, {}), Q_parts.get(1, {})
    a11, a12 = lin_P.get((1, 0), zero), lin_P.get((0, 1), zero)
    a21, a22 = lin_Q.get((1, 0), zero), lin_Q.get((0, 1), zero)
    trace = a11 + a22
    W = a11 * a22 - a12 * a21
    if not W > 0:
        raise NotAWeakFocus(f"Jacobian determinant {W} is not positive")
    if not exact and _negligible_trace(trace, a11, a12, a21, a22):
        trace = 0.0
    seq = LyapunovSequence([trace], exact, trace, W)
    if trace != 0:
        seq.notes.append("trace nonzero; higher constants undefined")
        return seq
    if n == 1:
        return seq
    canon = canonicalize_weak_focus(sys)
    f_parts = _homog_parts(canon["f"])
    g_parts = _homog_parts(canon["g"])
    seq.normalization_note = canon["normalization_note"]
    top = 2 * n
    G: Hom = {(2, 0): zero + 1, (0, 2): (zero + 1) / W}
    Gpow = {0: {(0, 0): zero + 1}}
    for k in range(1, n + 1):
        Gpow[k] = _hmul(Gpow[k - 1], G)
    F: dict[int, Hom] = {2: G}
    for deg in range(3, top + 1):
        R: Hom = {}
        for m in range(2, deg):
            k = deg - m + 1
            Fm = F[m]
            if k in f_parts:
                R = _hadd(R, _hmul(_dX(Fm), f_parts[k]))
            if k in g_parts:
                R = _hadd(R, _hmul(_dY(Fm), g_parts[k]))
        even = deg % 2 == 0
        # unknowns c_i for X^i Y^(deg-i); for even degree c_deg = 0 and L is added
        unknowns = list(range(deg)) if even else list(range(deg + 1))
        rows = deg + 1
        A = [[zero] * (len(unknowns) + (1 if even else 0)) for _ in range(rows)]
        for col, i in enumerate(unknowns):
            j = deg - i
            # D(X^i Y^j) = i X^(i-1) Y^(j+1) - W j X^(i+1) Y^(j-1)
            if i:
                A[i - 1][col] += i
            if j:
                A[i + 1][col] -= W * j
        rhs = [-R.get((i, deg - i), zero) for i in range(rows)]
        if even:
            Gk = Gpow[deg // 2]
            for i in range(rows):
                A[i][-1] = -Gk.get((i, deg - i), zero)
        sol = _solve(A, rhs)
        F[deg] = {(i, deg - i): sol[col] for col, i in enumerate(unknowns) if sol[col] != 0}
        if even:
            seq.values.append(sol[-1])
    return seq


def _negligible_trace(trace, *entries, rel=1e-12) -> bool:
    """Float traces at roundoff level relative to the Jacobian entries count as zero."""
    return abs(trace) <= rel * max(abs(float(e)) for e in entries)


def canonicalize_weak_focus(sys: PlanarPolySystem) -> dict:
    """Focus moved to the origin with linear part ``X' = Y, Y' = -W X``.

    Returns the transformed right-hand sides ``f`` (for X') and ``g`` (for
    Y'), ``W`` and the rotation sense of the input.  A clockwise input only
    changes the recorded orientation: the sign convention for the constants
    (positive means repelling) is orientation-free.
    """
    Pu, Qu = sys.translated()
    lp, lq = _homog_parts(Pu).get(1, {}), _homog_parts(Qu).get(1, {})
    a11, a12 = lp.get((1, 0), 0), lp.get((0, 1), 0)
    a21, a22 = lq.get((1, 0), 0), lq.get((0, 1), 0)
    W = a11 * a22 - a12 * a21
    exact = isinstance(a12, Fraction)
    if a11 + a22 != 0 and (exact or not _negligible_trace(a11 + a22, a11, a12, a21, a22)):
        raise NotAWeakFocus("trace is nonzero")
    if not W > 0:
        raise NotAWeakFocus("determinant is not positive")
    XY = ("X", "Y")
    X = MultiPoly.var("X", XY)
    Y = MultiPoly.var("Y", XY)
    inv_q = Fraction(1) / a12 if exact else 1.0 / a12
    sub = {"u": X, "v": (Y - a11 * X) * inv_q}
    Pn = Pu.compose(sub).with_vars(XY)
    Qn = Qu.compose(sub).with_vars(XY)
    return {
        "f": Pn,
        "g": Pn * a11 + Qn * a12,
        "W": W,
        "rotation": "counterclockwise" if a21 > 0 else "clockwise",
        "normalization_note": NORMALIZATION + ("; input clockwise" if a21 < 0 else ""),
    }


# ---------------------------------------------------------------------------
# weak-focus order for the reduced model


@dataclass
class OrderReport:
    order: int | None
    values: list
    exact: bool
    method: str
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"order": self.order, "values": [_out(v) for v in self.values], "exact": self.exact,
                "method": self.method, "detail": self.detail}


def reduced_focus_constants(q, n: int = 3) -> LyapunovSequence:
    from .model import quintic_system

    P, Q = quintic_system(q)
    return lyapunov_constants(PlanarPolySystem(P, Q, (1, 1)), n)


def weak_focus_order(q, tol: float = 1e-10, n: int = 5) -> OrderReport:
    """Order of E*(1, 1) for reduced parameters ``q``.

    Exact inputs decide each constant exactly.  Float inputs treat a constant
    as zero when it is below ``tol`` relative to the largest term feeding it.
    """
    seq = reduced_focus_constants(q, n)
    if seq.exact:
        order = _order(seq.values, 0)
    else:
        order = _order_float(seq.values, tol)
    return OrderReport(order, seq.values, seq.exact, "normal-form", {"det": _out(seq.det)})


def _order_float(values, tol) -> int | None:
    ref = max(1.0, max(abs(float(v)) for v in values))
    for k, v in enumerate(values):
        if abs(float(v)) > tol * ref:
            return k
    return None


# ---------------------------------------------------------------------------
# closed-form focal values


def _phis():
    from .data import load_phis

    return load_phis()


def closed_form_values(K, a, b) -> dict:
    """V3, V5, V7, V9 at an exact point of the weak-focus region."""
    phis = _phis()
    K, a, b = Fraction(K), Fraction(a), Fraction(b)
    d = K * b + 2 * K + a - 1
    e = K * a - K - 2 * a - b
    pt = {"K": K, "a": a, "b": b}
    f = [phis[i].eval(pt) for i in range(1, 5)]
    return {
        "V3": -(K - 1) ** 2 * f[0] / (4 * d),
        "V5": (K - 1) ** 3 * f[1] / (48 * d**3 * e),
        "V7": -(K - 1) ** 4 * f[2] / (9216 * d**5 * e**2),
        "V9": (K - 1) ** 5 * f[3] / (1105920 * d**7 * e**3),
    }


# sign of V_{2k+1} relative to sign of phi_k, valid when K > 1, d > 0, e > 0
PHI_SIGN = {1: -1, 2: 1, 3: -1, 4: 1}


def closed_form_signs(where) -> dict:
    """Certified signs of V3..V9 at a point or over a box inside the weak-focus region."""
    phis = _phis()
    if isinstance(where, Box):
        box = where
    else:
        pt = where if isinstance(where, dict) else dict(zip(("K", "a", "b"), where))
        box = Box.from_point(pt)
    out = {}
    for i in range(1, 5):
        v = box_sign(phis[i], box).sign * PHI_SIGN[i]
        out[f"V{2 * i + 1}"] = "+" if v > 0 else "-" if v < 0 else "?"
    return out


# ---------------------------------------------------------------------------
# interval 3x3 determinant


def _imul(x: Interval, y: Interval) -> Interval:
    ps = [x.lo * y.lo, x.lo * y.hi, x.hi * y.lo, x.hi * y.hi]
    return Interval(min(ps), max(ps))


def _iadd(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo + y.lo, x.hi + y.hi)


def _isub(x: Interval, y: Interval) -> Interval:
    return Interval(x.lo - y.hi, x.hi - y.lo)


def interval_det3(M: Sequence[Sequence[Interval]]) -> Interval:
    t1 = _imul(M[0][0], _isub(_imul(M[1][1], M[2][2]), _imul(M[1][2], M[2][1])))
    t2 = _imul(M[0][1], _isub(_imul(M[1][0], M[2][2]), _imul(M[1][2], M[2][0])))
    t3 = _imul(M[0][2], _isub(_imul(M[1][0], M[2][1]), _imul(M[1][1], M[2][0])))
    return _iadd(_isub(t1, t2), t3)


def jacobian_rank_certificate(box: Box | None = None) -> SignCert:
    """Sign of det d(phi1, phi2, phi3)/d(K, a, b) over ``box`` (default: the order-4 box).

    A certified nonzero sign shows the three focal polynomials are independent
    there, so their common zero is transversal.
    """
    if box is None:
        from .data import paper_box

        box = paper_box("K2", "a4", "b2")
    phis = _phis()
    M = []
    for i in (1, 2, 3):
        row = []
        for v in ("K", "a", "b"):
            lo, hi = range_bounds(phis[i].derivative(v), box)
            row.append(Interval(lo, hi))
        M.append(row)
    det = interval_det3(M)
    if det.lo > 0:
        status = Sign.POSITIVE
    elif det.hi < 0:
        status = Sign.NEGATIVE
    else:
        status = Sign.INDETERMINATE
    return SignCert(status, det.lo, det.hi)


# ---------------------------------------------------------------------------
# order two at an irrational b


def order_two_at_bstar(K=100, a=60) -> dict:
    """Order of the weak focus at the irrational root b* of phi1(K, a, .) in its box.

    At both rational endpoints of the published box ``s = s*(b)`` makes L1
    vanish exactly.  L3 changes sign across the box (so it vanishes at b*),
    and phi2 has a certified sign over the whole box, which fixes the sign of
    the next constant at b* itself.  The normal-form L5 at both endpoints is
    reported as a cross-check.
    """
    from .data import paper_interval
    from .model import ReducedParams

    K, a = Fraction(K), Fraction(a)
    iv = paper_interval("bstar")
    phis = _phis()
    ends = []
    for b in (iv.lo, iv.hi):
        e = K * a - K - 2 * a - b
        s = e / (K * (a + b + 1))
        seq = reduced_focus_constants(ReducedParams(s, K, a, b), 3)
        ends.append({"b": b, "s": s, "L1": seq.values[0], "L3": seq.values[1], "L5": seq.values[2],
                     "phi1": phis[1].eval({"K": K, "a": a, "b": b})})
    l3_change = (ends[0]["L3"] > 0) != (ends[1]["L3"] > 0) and ends[0]["L3"] != 0 and ends[1]["L3"] != 0
    phi2 = box_sign(phis[2], Box({"K": Interval.point(K), "a": Interval.point(a), "b": iv}))
    v5_sign = phi2.sign * PHI_SIGN[2]
    l5_neg = all(x["L5"] < 0 for x in ends)
    ok = l3_change and v5_sign < 0 and l5_neg and all(x["L1"] == 0 for x in ends)
    return {
        "order": 2 if ok else None,
        "stable": ok,
        "endpoints": [{k: _out(v) for k, v in x.items()} for x in ends],
        "L3_sign_change": l3_change,
        "phi2_box": phi2.as_dict(),
        "V5_sign": v5_sign,
        "L5_negative_at_endpoints": l5_neg,
    }
