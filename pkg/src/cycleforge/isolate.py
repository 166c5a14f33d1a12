"""Certified real-root isolation and sign determination over rational boxes.

Range enclosures use the signed-corner rule: on a box inside the positive
orthant a polynomial is bounded below by its positive-coefficient part at the
lower corner plus its negative-coefficient part at the upper corner (and
symmetrically above).  Variables on the negative half-line are reflected
(x -> -x) first; variables straddling zero are split at zero.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .ratpoly import (
    MultiPoly,
    _squarefree_dense,
    _to_dense,
    _ueval,
    sturm_sequence,
    sturm_count,
)

DEFAULT_WIDTH = Fraction(1, 2**64)


@dataclass(frozen=True, order=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "Interval":
        return cls(x, x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def intersects(self, other: "Interval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __str__(self) -> str:
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]"


class Box:
    """Product of intervals keyed by variable name, in a fixed variable order."""

    __slots__ = ("vars", "intervals")

    def __init__(self, items: Mapping[str, Interval] | Sequence[tuple[str, Interval]]):
        pairs = list(items.items()) if isinstance(items, Mapping) else list(items)
        object.__setattr__(self, "vars", tuple(v for v, _ in pairs))
        object.__setattr__(
            self,
            "intervals",
            tuple(iv if isinstance(iv, Interval) else _as_interval(iv) for _, iv in pairs),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Box is immutable")

    @classmethod
    def from_point(cls, point: Mapping[str, object]) -> "Box":
        return cls({v: Interval.point(Fraction(x)) for v, x in point.items()})

    def __getitem__(self, var: str) -> Interval:
        return self.intervals[self.vars.index(var)]

    def __contains__(self, var: str) -> bool:
        return var in self.vars

    def items(self):
        return zip(self.vars, self.intervals)

    def replace(self, var: str, iv: Interval) -> "Box":
        if var in self.vars:
            return Box([(v, iv if v == var else i) for v, i in self.items()])
        return Box(list(self.items()) + [(var, iv)])

    def restrict(self, vars: Iterable[str]) -> "Box":
        keep = set(vars)
        return Box([(v, i) for v, i in self.items() if v in keep])

    @property
    def is_point(self) -> bool:
        return all(i.lo == i.hi for i in self.intervals)

    def midpoint(self) -> dict[str, Fraction]:
        return {v: i.mid for v, i in self.items()}

    def widest(self) -> str:
        return max(self.items(), key=lambda vi: vi[1].width)[0]

    def bisect(self, var: str | None = None) -> tuple["Box", "Box"]:
        var = var or self.widest()
        iv = self[var]
        m = iv.mid
        return self.replace(var, Interval(iv.lo, m)), self.replace(var, Interval(m, iv.hi))

    def __repr__(self) -> str:
        return "Box(" + ", ".join(f"{v}={i}" for v, i in self.items()) + ")"


def _as_interval(x) -> Interval:
    if isinstance(x, Interval):
        return x
    if isinstance(x, (tuple, list)):
        return Interval(Fraction(x[0]), Fraction(x[1]))
    return Interval.point(Fraction(x))


class Sign(enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    INDETERMINATE = "Indeterminate"


@dataclass(frozen=True)
class SignCert:
    status: Sign
    lower_bound: Fraction
    upper_bound: Fraction

    def __post_init__(self):
        if self.status is Sign.POSITIVE:
            assert self.lower_bound > 0
        elif self.status is Sign.NEGATIVE:
            assert self.upper_bound < 0

    @property
    def sign(self) -> int:
        return {Sign.POSITIVE: 1, Sign.NEGATIVE: -1, Sign.INDETERMINATE: 0}[self.status]

    def as_dict(self) -> dict:
        return {
            "status": self.status.value,
            "lower_bound": float(self.lower_bound),
            "upper_bound": float(self.upper_bound),
        }


# ---------------------------------------------------------------------------
# range enclosure


def _corner_bounds_positive(p: MultiPoly, lo: list, hi: list):
    pos, neg = p.split_signs()
    lower = pos._eval_powers(lo) + neg._eval_powers(hi)
    upper = pos._eval_powers(hi) + neg._eval_powers(lo)
    return Fraction(lower), Fraction(upper)


def reflect(p: MultiPoly, var: str) -> MultiPoly:
    """``p`` with ``var`` replaced by ``-var``."""
    if var not in p.vars:
        return p
    i = p.vars.index(var)
    return MultiPoly({e: (-c if e[i] % 2 else c) for e, c in p.terms.items()}, p.vars)


def range_bounds(p: MultiPoly, box: Box) -> tuple[Fraction, Fraction]:
    """Rigorous ``(lower, upper)`` enclosure of ``p`` over ``box``."""
    missing = [v for v in p.free_vars() if v not in box]
    if missing:
        raise KeyError(f"box does not bind {missing}")
    q = p.with_vars(tuple(v for v in box.vars if v in p.vars or True))
    q = p.with_vars(box.vars) if set(p.free_vars()) <= set(box.vars) else p
    pieces = [[]]
    for v, iv in box.items():
        if iv.lo >= 0:
            opts = [(False, iv)]
        elif iv.hi <= 0:
            opts = [(True, -iv)]
        else:
            opts = [(True, Interval(0, -iv.lo)), (False, Interval(0, iv.hi))]
        pieces = [pc + [o] for pc in pieces for o in opts]
    lower = upper = None
    for pc in pieces:
        r = q
        for (flip, _), v in zip(pc, box.vars):
            if flip:
                r = reflect(r, v)
        lo = [iv.lo for _, iv in pc]
        hi = [iv.hi for _, iv in pc]
        l, u = _corner_bounds_positive(r, lo, hi)
        lower = l if lower is None else min(lower, l)
        upper = u if upper is None else max(upper, u)
    return lower, upper


def box_sign(p: MultiPoly, box: Box) -> SignCert:
    lo, hi = range_bounds(p, box)
    if lo > 0:
        status = Sign.POSITIVE
    elif hi < 0:
        status = Sign.NEGATIVE
    else:
        status = Sign.INDETERMINATE
    return SignCert(status, lo, hi)


def refine_sign(p: MultiPoly, box: Box, max_depth: int = 12) -> SignCert:
    """Bisect ``box`` until every piece has a certified sign of the same kind.

    Returns the first certificate whose status is uniform over all pieces, or
    an Indeterminate certificate with the hull of the piece bounds.
    """
    cert = box_sign(p, box)
    if cert.status is not Sign.INDETERMINATE or max_depth == 0 or box.is_point:
        return cert
    left, right = box.bisect()
    a = refine_sign(p, left, max_depth - 1)
    b = refine_sign(p, right, max_depth - 1)
    lo, hi = min(a.lower_bound, b.lower_bound), max(a.upper_bound, b.upper_bound)
    if a.status is b.status and a.status is not Sign.INDETERMINATE:
        return SignCert(a.status, lo, hi)
    return SignCert(Sign.INDETERMINATE, lo, hi)


# ---------------------------------------------------------------------------
# univariate isolation


def cauchy_bound(dense: list) -> Fraction:
    lead = abs(dense[-1])
    return 1 + max((abs(c) / lead for c in dense[:-1]), default=Fraction(0))


def _dyadic_ceiling(x: Fraction) -> Fraction:
    k = Fraction(1)
    while k < x:
        k *= 2
    return k


def _univariate_dense(p, var: str | None = None) -> list:
    if isinstance(p, MultiPoly):
        fv = p.free_vars()
        if var is not None and fv and fv != (var,):
            raise ValueError(f"polynomial is not univariate in {var!r}")
    return _to_dense(p)


def isolate_univariate(p, domain=None, width=DEFAULT_WIDTH) -> list[Interval]:
    """Disjoint intervals of width <= ``width``, each holding exactly one real root.

    ``domain`` is ``(lo, hi)`` (``None`` for an infinite end) read as the
    half-open ``(lo, hi]``.
    """
    dense = _univariate_dense(p)
    if not dense:
        raise ValueError("zero polynomial")
    width = Fraction(width)
    if width <= 0:
        raise ValueError("width must be positive")
    if len(dense) == 1:
        return []
    sq = _squarefree_dense(dense)
    seq = sturm_sequence(sq)
    if isinstance(domain, Interval):
        lo, hi = domain.lo, domain.hi
    elif domain is None:
        lo = hi = None
    else:
        lo, hi = domain
    bound = _dyadic_ceiling(cauchy_bound(sq))
    lo = -bound if lo is None else Fraction(lo)
    hi = bound if hi is None else Fraction(hi)
    if lo > hi:
        raise ValueError("empty domain")
    if lo == hi:
        return [Interval.point(lo)] if _ueval(sq, lo) == 0 else []
    out: list[Interval] = []
    stack = [(lo, hi, sturm_count(sq, (lo, hi), seq))]
    while stack:
        l, h, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(_refine_single(sq, seq, l, h, width))
            continue
        m = (l + h) / 2
        nl = sturm_count(sq, (l, m), seq)
        stack.append((m, h, n - nl))
        stack.append((l, m, nl))
    out.sort()
    return out


def _refine_single(sq, seq, l, h, width) -> Interval:
    """Shrink ``(l, h]`` holding one root of ``sq`` to width <= ``width``."""
    fh = _ueval(sq, h)
    if fh == 0:
        return Interval.point(h)
    fl = _ueval(sq, l)
    while h - l > width:
        m = (l + h) / 2
        fm = _ueval(sq, m)
        if fm == 0:
            return Interval.point(m)
        if fl != 0 and (fm > 0) != (fl > 0):
            h, fh = m, fm
        elif fl != 0:
            l, fl = m, fm
        elif sturm_count(sq, (l, m), seq):
            h, fh = m, fm
        else:
            l, fl = m, fm
    return Interval(l, h)


# ---------------------------------------------------------------------------
# lifting over a box


def bound_polys(p: MultiPoly, outer: Box, var: str) -> tuple[list, list]:
    """Minimal and maximal polynomials of ``p`` in ``var`` over ``outer``.

    For ``var >= 0`` and any point of ``outer``:
    ``minimal(var) <= p <= maximal(var)``.
    """
    lows, highs = [], []
    for c in p.coeffs_in(var):
        lo, hi = range_bounds(c, outer) if not c.is_zero() else (Fraction(0), Fraction(0))
        lows.append(lo)
        highs.append(hi)
    return lows, highs


@dataclass
class LiftedRoot:
    interval: Interval
    certified: bool
    note: str = ""


def _roots_in(dense: list, lo: Fraction, hi: Fraction, width: Fraction) -> list[Interval]:
    while dense and dense[-1] == 0:
        dense = dense[:-1]
    if len(dense) <= 1:
        return []
    return isolate_univariate(dense, (lo, hi), width)


def _lift_nonneg(p: MultiPoly, outer: Box, var: str, lo: Fraction, hi: Fraction, width: Fraction):
    """Candidate root components of ``p`` in ``var`` on ``[lo, hi]`` with ``lo >= 0``."""
    low, high = bound_polys(p, outer, var)
    cuts = []
    for dense in (low, high):
        for iv in _roots_in(list(dense), lo, hi, width):
            cuts.append(iv)
        if _ueval(dense, lo) == 0:
            cuts.append(Interval.point(lo))
    cuts.sort()
    # sample points between consecutive cuts decide exclusion
    marks = sorted({lo, hi} | {c.lo for c in cuts} | {c.hi for c in cuts})
    pieces = []
    for a, b in zip(marks, marks[1:]):
        pieces.append(Interval(a, b))
    comps: list[Interval] = []

    def possible(x):
        return _ueval(low, x) <= 0 <= _ueval(high, x)

    for piece in pieces:
        inside_cut = any(c.intersects(piece) and c.lo <= piece.mid <= c.hi for c in cuts)
        if inside_cut or possible(piece.mid):
            if comps and comps[-1].hi == piece.lo:
                comps[-1] = comps[-1].hull(piece)
            else:
                comps.append(piece)
    isolated_points = [m for m in marks if possible(m) and not any(c.lo <= m <= c.hi for c in comps)]
    for m in isolated_points:
        comps.append(Interval.point(m))
    comps.sort()
    return comps


def lift_roots(p: MultiPoly, outer: Box, var: str, domain: Interval, width=DEFAULT_WIDTH) -> list[LiftedRoot]:
    """Real roots in ``var`` of ``p`` for all points of ``outer``.

    Each returned interval is a connected region outside of which ``p`` cannot
    vanish.  ``certified`` means a sign change across the interval and a
    nonvanishing derivative inside were proved over the whole outer box, so
    the interval holds exactly one root for every outer point.
    """
    width = Fraction(width)
    found: list[Interval] = []
    if domain.hi >= 0:
        found += _lift_nonneg(p, outer, var, max(domain.lo, Fraction(0)), domain.hi, width)
    if domain.lo < 0:
        q = reflect(p, var)
        neg_hi = min(domain.hi, Fraction(0))
        for iv in _lift_nonneg(q, outer, var, -neg_hi, -domain.lo, width):
            found.append(-iv)
    found = _merge(sorted(found))
    dp = p.derivative(var)
    results = []
    for iv in found:
        results.append(_certify(p, dp, outer, var, iv))
    return results


def _merge(ivs: list[Interval]) -> list[Interval]:
    out: list[Interval] = []
    for iv in ivs:
        if out and out[-1].hi >= iv.lo:
            out[-1] = out[-1].hull(iv)
        else:
            out.append(iv)
    return out


def _certify(p, dp, outer: Box, var: str, iv: Interval) -> LiftedRoot:
    if iv.lo == iv.hi:
        at = box_sign(p, outer.replace(var, iv))
        ok = at.lower_bound == at.upper_bound == 0
        return LiftedRoot(iv, ok, "exact point root" if ok else "degenerate")
    left = box_sign(p, outer.replace(var, Interval.point(iv.lo)))
    right = box_sign(p, outer.replace(var, Interval.point(iv.hi)))
    slope = refine_sign(dp, outer.replace(var, iv), max_depth=4)
    opposite = left.sign * right.sign == -1
    monotone = slope.status is not Sign.INDETERMINATE
    return LiftedRoot(iv, opposite and monotone,
                      "sign change with monotone slope" if opposite and monotone else "unresolved")


def isolate_triangular(system: Sequence[MultiPoly], domain: Box, width=DEFAULT_WIDTH,
                       max_rounds: int = 8) -> list[Box]:
    """Isolate real solutions of a triangular system inside ``domain``.

    ``system[i]`` involves only ``domain.vars[:i+1]`` and has positive degree
    in ``domain.vars[i]``.  Returns disjoint boxes each holding exactly one
    solution, every side no wider than ``width``.
    """
    vars = domain.vars
    if len(system) != len(vars):
        raise ValueError("system size must match the box dimension")
    for i, f in enumerate(system):
        used = set(f.free_vars())
        if not used <= set(vars[: i + 1]) or vars[i] not in used:
            raise ValueError(f"equation {i} is not triangular in {vars}")
    width = Fraction(width)
    prec = min(width, Fraction(1, 2**10)) / 2**len(vars)
    for _ in range(max_rounds):
        boxes, ok = _lift_all(system, domain, prec)
        if ok and all(iv.width <= width for b in boxes for iv in b.intervals):
            return boxes
        prec /= 2**16
    raise RuntimeError("triangular isolation did not certify within the refinement budget")


def _lift_all(system, domain: Box, prec: Fraction):
    vars = domain.vars
    first = system[0].with_vars((vars[0],)) if system[0].free_vars() else system[0]
    level = [Box([(vars[0], iv)]) for iv in isolate_univariate(first, domain[vars[0]], prec)]
    ok = True
    for i in range(1, len(vars)):
        nxt = []
        for b in level:
            for root in lift_roots(system[i], b, vars[i], domain[vars[i]], prec):
                if not root.certified:
                    ok = False
                nxt.append(b.replace(vars[i], root.interval))
        level = nxt
    return level, ok


# ---------------------------------------------------------------------------
# semi-algebraic region membership


class Membership(enum.Enum):
    INSIDE = "Inside"
    OUTSIDE = "Outside"
    UNDETERMINED = "Undetermined"


def _tri(value: bool | None) -> Membership:
    if value is None:
        return Membership.UNDETERMINED
    return Membership.INSIDE if value else Membership.OUTSIDE


@dataclass(frozen=True)
class Pred:
    """Polynomial sign condition: ``kind`` is one of '>0', '>=0', '!=0'."""

    poly: MultiPoly
    kind: str
    label: str = ""

    def decide(self, where) -> bool | None:
        if isinstance(where, Box):
            lo, hi = range_bounds(self.poly, where)
        else:
            v = self.poly.eval(where)
            lo = hi = v
        if self.kind == ">0":
            return True if lo > 0 else False if hi <= 0 else None
        if self.kind == ">=0":
            return True if lo >= 0 else False if hi < 0 else None
        if self.kind == "!=0":
            return True if (lo > 0 or hi < 0) else False if lo == hi == 0 else None
        raise ValueError(self.kind)


@dataclass(frozen=True)
class AllOf:
    parts: tuple
    label: str = ""

    def decide(self, where) -> bool | None:
        seen_none = False
        for p in self.parts:
            r = p.decide(where)
            if r is False:
                return False
            if r is None:
                seen_none = True
        return None if seen_none else True


@dataclass(frozen=True)
class AnyOf:
    parts: tuple
    label: str = ""

    def decide(self, where) -> bool | None:
        seen_none = False
        for p in self.parts:
            r = p.decide(where)
            if r is True:
                return True
            if r is None:
                seen_none = True
        return None if seen_none else False


def _region_polys():
    K = MultiPoly.var("K", ("K", "a", "b"))
    a = MultiPoly.var("a", ("K", "a", "b"))
    b = MultiPoly.var("b", ("K", "a", "b"))
    t = K * b + K - 1
    d = K * b + 2 * K + a - 1
    e = K * a - K - 2 * a - b
    k_gt_1 = Pred(K - 1, ">0", "K>1")
    a_pos = Pred(a, ">0", "a>0")
    above_sqrt_a = AnyOf((Pred(b, ">=0"), Pred(4 * a - b * b, ">0")), "b>-2*sqrt(a)")
    above_threshold = AnyOf((Pred(t, ">=0"), Pred(4 * a * K - t * t, ">0")), "b>1/K-1-2*sqrt(a/K)")
    below_threshold = AllOf((Pred(-t, ">0"), Pred(t * t - 4 * a * K, ">0")), "b<1/K-1-2*sqrt(a/K)")
    d_pos = Pred(d, ">0", "K*b+2*K+a-1>0")
    e_pos = Pred(e, ">0", "K*a-K-2*a-b>0")
    return {
        "Lambda": AllOf((k_gt_1, a_pos, d_pos, above_sqrt_a, e_pos), "Lambda"),
        "Sigma1": AllOf((k_gt_1, a_pos, above_threshold, above_sqrt_a, e_pos), "Sigma1"),
        "Sigma2": AllOf((k_gt_1, a_pos, above_sqrt_a, below_threshold, Pred(d, "!=0", "b!=1/K-2-a/K")), "Sigma2"),
        "Sigma3": AllOf((d_pos, Pred(-(K * b + K + 2 * a - 1), ">0", "K*b+K+2*a-1<0")), "Sigma3"),
    }


REGIONS = _region_polys()


def region_membership(where, region) -> Membership:
    """Tri-state membership of a point (mapping) or a :class:`Box`.

    ``region`` is a name from :data:`REGIONS`, a predicate object, or a list
    of either (intersection).
    """
    if isinstance(region, str):
        region = REGIONS[region]
    elif isinstance(region, (list, tuple)):
        region = AllOf(tuple(REGIONS[r] if isinstance(r, str) else r for r in region))
    if not isinstance(where, Box):
        where = {k: (Fraction(v) if isinstance(v, (int, Fraction)) else v) for k, v in where.items()}
    return _tri(region.decide(where))


def failing_predicates(where, region) -> list[str]:
    """Labels of top-level predicates certified False at ``where``."""
    if isinstance(region, str):
        region = REGIONS[region]
    return [p.label for p in region.parts if p.decide(where) is False]
