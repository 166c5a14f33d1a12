"""Numerical phase-plane work: trajectories, return maps, limit cycles.

Integration uses scipy's DOP853 with dense output.  Backward time integrates
``-f``.  Sections are vertical rays ``x = x0, y > y0`` anchored at a focus;
a crossing counts only with the same orientation as the flow on the ray.
"""
from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

import numpy as np
from matplotlib.path import Path as MplPath
from scipy.integrate import solve_ivp

from .model import (
    InvalidParameters,
    ModelParams,
    ReducedParams,
    classify_interior,
    classify_model,
    d_e,
    model_rhs,
    reduced_equilibria,
    reduced_rhs,
    v1_traces,
)

CYCLE_TOL = 1e-8
FORWARD, BACKWARD = "forward", "backward"


class DynamicsError(RuntimeError):
    pass


class NoCrossing(DynamicsError):
    pass


class LeftDomain(DynamicsError):
    pass


class ConvergedToEquilibrium(DynamicsError):
    pass


class NotConverged(DynamicsError):
    pass


class BudgetExhausted(DynamicsError):
    pass


def rhs_for(params) -> Callable:
    if isinstance(params, ModelParams):
        return model_rhs(params)
    if isinstance(params, ReducedParams):
        return reduced_rhs(params)
    raise TypeError("params must be ModelParams or ReducedParams")


def carrying_capacity(params) -> float:
    return float(params.K)


def _directed(f, direction: str):
    if direction == FORWARD:
        return f
    if direction == BACKWARD:
        return lambda t, z: [-v for v in f(t, z)]
    raise ValueError("direction must be 'forward' or 'backward'")


def _domain_events(params):
    big = 50.0 * carrying_capacity(params) + 50.0

    def low(t, z):
        return z[0] - 1e-9

    def high(t, z):
        return big - max(z[0], z[1])

    def neg_y(t, z):
        return z[1] + 1e-12

    for ev in (low, high, neg_y):
        ev.terminal = True
    return [low, high, neg_y]


# ---------------------------------------------------------------------------
# trajectories


@dataclass
class Trajectory:
    t: np.ndarray
    x: np.ndarray
    y: np.ndarray
    direction: str
    params: object
    rtol: float
    atol: float
    status: str = "ok"

    @property
    def samples(self) -> list[tuple]:
        return list(zip(self.t.tolist(), self.x.tolist(), self.y.tolist()))

    def to_csv(self) -> str:
        lines = ["t,x,y"]
        lines += [f"{t:.12g},{x:.12g},{y:.12g}" for t, x, y in self.samples]
        return "\n".join(lines) + "\n"


def integrate(params, x0: Sequence[float], t_span: tuple[float, float], direction: str = FORWARD,
              rel_tol: float = 1e-10, abs_tol: float = 1e-12, n_samples: int | None = None,
              max_step: float = np.inf) -> Trajectory:
    """Integrate from ``x0`` over ``t_span`` (time measured in the chosen direction)."""
    x0 = [float(v) for v in x0]
    if not (x0[0] > 0 and x0[1] >= 0):
        raise ValueError("initial state must have x > 0 and y >= 0")
    for tol in (rel_tol, abs_tol):
        if not 0 < tol <= 1e-3:
            raise ValueError("tolerances must lie in (0, 1e-3]")
    f = _directed(rhs_for(params), direction)
    t_eval = None if n_samples is None else np.linspace(t_span[0], t_span[1], n_samples)
    sol = solve_ivp(f, t_span, x0, method="DOP853", rtol=rel_tol, atol=abs_tol, t_eval=t_eval,
                    events=_domain_events(params), max_step=max_step)
    if not sol.success:
        raise DynamicsError(sol.message)
    status = "ok"
    if sol.status == 1:
        status = "left-domain"
    return Trajectory(sol.t, sol.y[0], sol.y[1], direction, params, rel_tol, abs_tol, status)


# ---------------------------------------------------------------------------
# sections and return maps


@dataclass(frozen=True)
class SectionSpec:
    """Ray ``x = anchor_x, y > anchor_y``; ``orientation`` is the sign of x' at crossings."""

    anchor: tuple
    orientation: int

    def point(self, xi: float) -> tuple[float, float]:
        return (self.anchor[0], self.anchor[1] + xi)

    def coord(self, z) -> float:
        return float(z[1]) - self.anchor[1]


def default_section(params, focus: tuple, direction: str = FORWARD, probe: float | None = None) -> SectionSpec:
    """Upward ray from ``focus``; orientation read off the field on the ray."""
    f = _directed(rhs_for(params), direction)
    probe = probe if probe is not None else 0.05 * max(1.0, focus[1])
    vx = f(0.0, [focus[0], focus[1] + probe])[0]
    if vx == 0:
        raise DynamicsError("section is not transversal at the probe point")
    return SectionSpec((float(focus[0]), float(focus[1])), 1 if vx > 0 else -1)


@dataclass
class _Opts:
    rtol: float = 1e-12
    atol: float = 1e-13
    t_max: float = 2000.0
    max_hits: int = 50


def return_map(params, section: SectionSpec, xi0: float, direction: str = FORWARD,
               opts: _Opts | None = None, dense: bool = False):
    """Next same-orientation crossing of the ray; returns ``(xi1, flight_time[, sol_segments])``."""
    opts = opts or _Opts()
    f = _directed(rhs_for(params), direction)
    x0 = section.anchor[0]
    z = np.array(section.point(xi0), dtype=float)
    v = f(0.0, z)
    if v[0] * section.orientation <= 0:
        raise DynamicsError("flow is not crossing the section in its orientation at the start point")
    # step off the section before arming the event
    speed = math.hypot(*v)
    t_off = min(1e-3, 1e-4 * max(abs(xi0), 1e-6) / max(speed, 1e-300) * 10)

    def sect(t, zz):
        return zz[0] - x0

    sect.terminal = True
    sect.direction = section.orientation
    segments = []
    sol = solve_ivp(f, (0.0, t_off), z, method="DOP853", rtol=opts.rtol, atol=opts.atol, dense_output=dense)
    if dense:
        segments.append(sol.sol)
    t, z = t_off, sol.y[:, -1]
    for _ in range(opts.max_hits):
        sol = solve_ivp(f, (t, opts.t_max), z, method="DOP853", rtol=opts.rtol, atol=opts.atol,
                        events=[sect] + _domain_events(params), dense_output=dense)
        if dense:
            segments.append(sol.sol)
        if sol.status != 1:
            raise NoCrossing(f"no crossing within t = {opts.t_max}")
        if len(sol.t_events[0]) == 0:
            raise LeftDomain("trajectory left the domain before returning")
        t = float(sol.t_events[0][0])
        z = sol.y_events[0][0]
        if z[1] > section.anchor[1]:
            z = np.array([x0, z[1]])
            if dense:
                return section.coord(z), t, segments
            return section.coord(z), t
        # crossing below the anchor: keep going past it
        sol2 = solve_ivp(f, (t, t + t_off), sol.y_events[0][0], method="DOP853", rtol=opts.rtol, atol=opts.atol,
                         dense_output=dense)
        if dense:
            segments.append(sol2.sol)
        t, z = t + t_off, sol2.y[:, -1]
    raise NoCrossing("too many crossings below the anchor")


def flip(section: SectionSpec) -> SectionSpec:
    return SectionSpec(section.anchor, -section.orientation)


# ---------------------------------------------------------------------------
# cycles


@dataclass
class CycleRecord:
    section_anchor: tuple
    period: float
    multiplier: float
    stability: str
    amplitude: float
    nesting_index: int = 0
    found_direction: str = FORWARD
    displacement: float = 0.0
    x_range: tuple = (0.0, 0.0)
    curve: np.ndarray | None = field(default=None, repr=False)
    direction_multiplier: float = float("nan")
    forward_multiplier_direct: float | None = None
    section: SectionSpec | None = None

    def as_dict(self) -> dict:
        d = {
            "section_anchor": [round(v, 12) for v in self.section_anchor],
            "period": round(self.period, 9),
            "multiplier": float(f"{self.multiplier:.9g}"),
            "stability": self.stability,
            "amplitude": round(self.amplitude, 9),
            "nesting_index": self.nesting_index,
            "found_direction": self.found_direction,
            "displacement": float(f"{self.displacement:.3g}"),
            "x_range": [round(v, 9) for v in self.x_range],
        }
        if self.forward_multiplier_direct is not None:
            d["forward_multiplier_direct"] = float(f"{self.forward_multiplier_direct:.9g}")
        return d


def find_cycle(params, seed: Sequence[float], section: SectionSpec | None = None, direction: str = FORWARD,
               focus: tuple | None = None, cycle_tol: float = CYCLE_TOL, max_iters: int = 400,
               opts: _Opts | None = None, check_duality: bool = True, min_radius: float = 1e-5) -> CycleRecord:
    """Attracting cycle (in the chosen time direction) through the basin holding ``seed``.

    The seed is first carried to the section; then the return map is
    iterated and polished by a damped secant step on ``P(xi) - xi``.
    """
    opts = opts or _Opts()
    if section is None:
        if focus is None:
            raise ValueError("need a section or a focus to anchor one")
        section = default_section(params, focus, direction)
    scale = carrying_capacity(params)
    xi = _to_section(params, section, seed, direction, opts)
    hist: list[tuple[float, float]] = []
    for it in range(max_iters):
        p1, _ = return_map(params, section, xi, direction, opts)
        D = p1 - xi
        hist.append((xi, D))
        if p1 < min_radius * scale:
            raise ConvergedToEquilibrium("return map collapses onto the anchor equilibrium")
        if abs(D) < cycle_tol:
            break
        nxt = p1
        if len(hist) >= 2:
            (xa, Da), (xb, Db) = hist[-2], hist[-1]
            if Db != Da:
                sec = xb - Db * (xb - xa) / (Db - Da)
                # damped: accept only when it moves in the iteration direction and not absurdly far
                if sec > 0 and (sec - xb) * D > 0 and abs(sec - xb) <= 50 * abs(D):
                    nxt = sec
        xi = nxt
    else:
        raise NotConverged(f"return-map displacement still {abs(D):.3g} after {max_iters} returns")
    xi_star = xi
    p_star, period = return_map(params, section, xi_star, direction, opts)
    disp = abs(p_star - xi_star)
    curve = _cycle_curve(params, section, xi_star, direction, period, opts)
    xr = (float(curve[:, 0].min()), float(curve[:, 0].max()))
    amp = xr[1] - xr[0]
    h = 1e-5 * amp
    m_dir = _fd_multiplier(params, section, xi_star, direction, h, opts)
    m_fwd = m_dir if direction == FORWARD else 1.0 / m_dir
    direct = None
    if direction == BACKWARD and check_duality:
        # the forward map expands by 1/m_dir; shrink the step to stay linear
        direct = _fd_multiplier(params, flip(section), xi_star, FORWARD, h * min(1.0, abs(m_dir)), opts)
    return CycleRecord(
        section_anchor=section.point(xi_star),
        period=period,
        multiplier=m_fwd,
        stability="Stable" if abs(m_fwd) < 1 else "Unstable",
        amplitude=amp,
        found_direction=direction,
        displacement=disp,
        x_range=xr,
        curve=curve,
        direction_multiplier=m_dir,
        forward_multiplier_direct=direct,
        section=section,
    )


def _to_section(params, section: SectionSpec, seed, direction, opts: _Opts) -> float:
    if abs(seed[0] - section.anchor[0]) < 1e-14 and seed[1] > section.anchor[1]:
        f = _directed(rhs_for(params), direction)
        if f(0.0, list(seed))[0] * section.orientation > 0:
            return section.coord(seed)
    f = _directed(rhs_for(params), direction)
    x0 = section.anchor[0]

    def sect(t, z):
        return z[0] - x0

    sect.terminal = True
    sect.direction = section.orientation
    t, z = 0.0, np.array(seed, dtype=float)
    for _ in range(opts.max_hits):
        sol = solve_ivp(f, (t, opts.t_max), z, method="DOP853", rtol=opts.rtol, atol=opts.atol,
                        events=[sect] + _domain_events(params))
        if sol.status != 1 or len(sol.t_events[0]) == 0:
            raise NoCrossing("seed never reaches the section")
        t, z = float(sol.t_events[0][0]), sol.y_events[0][0]
        if z[1] > section.anchor[1]:
            return section.coord(z)
        sol2 = solve_ivp(f, (t, t + 1e-3), z, method="DOP853", rtol=opts.rtol, atol=opts.atol)
        t, z = t + 1e-3, sol2.y[:, -1]
    raise NoCrossing("seed crosses only below the anchor")


def _fd_multiplier(params, section, xi, direction, h, opts) -> float:
    pp, _ = return_map(params, section, xi + h, direction, opts)
    pm, _ = return_map(params, section, xi - h, direction, opts)
    return (pp - pm) / (2 * h)


def _cycle_curve(params, section, xi, direction, period, opts, n: int = 600) -> np.ndarray:
    f = _directed(rhs_for(params), direction)
    ts = np.linspace(0.0, period, n)
    sol = solve_ivp(f, (0.0, period), section.point(xi), method="DOP853", rtol=opts.rtol, atol=opts.atol,
                    t_eval=ts)
    return np.column_stack([sol.y[0], sol.y[1]])


# ---------------------------------------------------------------------------
# census


def _contains(outer: CycleRecord, pt) -> bool:
    return MplPath(outer.curve).contains_point(pt)


def _same_cycle(a: CycleRecord, b: CycleRecord, tol: float) -> bool:
    if abs(a.period - b.period) > 1e-4 * max(a.period, b.period):
        return False
    d = np.min(np.hypot(b.curve[:, 0] - a.section_anchor[0], b.curve[:, 1] - a.section_anchor[1]))
    return d < tol


def assign_nesting(cycles: list[CycleRecord]) -> None:
    for c in cycles:
        c.nesting_index = sum(1 for o in cycles if o is not c and _contains(o, c.section_anchor))


def anti_saddles(params) -> list[tuple[tuple, str]]:
    """Interior anti-saddles (point, tag) in the coordinates of ``params``."""
    out = []
    if isinstance(params, ModelParams):
        for rep in classify_model(params):
            if rep.tag not in ("HyperbolicSaddle", "Degenerate"):
                out.append(((float(rep.x_star), float(rep.y_star)), rep.tag))
    else:
        rep = classify_interior(params)
        if rep.tag not in ("HyperbolicSaddle", "Degenerate"):
            out.append(((1.0, 1.0), rep.tag))
        # other interior equilibria sit on the diagonal y = x
        for r in reduced_equilibria(params):
            x = r.x
            if r.multiplicity > 1 or abs(float(x) - 1.0) < 1e-12:
                continue
            rep2 = classify_interior(ReducedParams(params.s, params.K / x, params.a * x * x, params.b * x))
            if rep2.tag not in ("HyperbolicSaddle", "Degenerate"):
                out.append(((float(x), float(x)), rep2.tag))
    return out


@dataclass
class Census:
    cycles: list[CycleRecord]
    attempts: list[dict]
    complete: bool

    def as_dict(self) -> dict:
        return {
            "cycles": [c.as_dict() for c in self.cycles],
            "attempts": self.attempts,
            "complete": self.complete,
            "note": "census reports the cycles found from its seeds; it does not claim completeness",
        }


def census_seeds(params, rng_seed: int = 0, n_random: int = 0) -> list[tuple]:
    """(seed, direction, focus) triples.

    Around each anti-saddle: a backward seed at 20% offset and a forward seed
    at 5% offset.  One forward seed far out to catch an outer attractor.
    Optional extra random seeds are drawn from a seeded generator.
    """
    K = carrying_capacity(params)
    foci = anti_saddles(params)
    seeds = []
    for (fx, fy), _ in foci:
        seeds.append(((fx * 1.2, fy * 1.2), BACKWARD, (fx, fy)))
        seeds.append(((fx * 1.05, fy * 1.05), FORWARD, (fx, fy)))
    if foci:
        fx, fy = foci[0][0]
        seeds.append(((0.9 * K, 0.1 * fy), FORWARD, (fx, fy)))
    rng = np.random.default_rng(rng_seed)
    for _ in range(n_random):
        if not foci:
            break
        k = int(rng.integers(len(foci)))
        fx, fy = foci[k][0]
        r = float(rng.uniform(0.02, 0.6))
        seeds.append(((fx * (1 + r), fy * (1 + r)), BACKWARD if rng.random() < 0.5 else FORWARD, (fx, fy)))
    return seeds


def thread_count() -> int:
    """Worker threads for sweeps, from ``CYCLEFORGE_THREADS`` (default 1)."""
    try:
        return max(1, int(os.environ.get("CYCLEFORGE_THREADS", "1")))
    except ValueError:
        return 1


def _attempt(params, seed, direction, focus, cycle_tol):
    try:
        return find_cycle(params, seed, direction=direction, focus=focus, cycle_tol=cycle_tol)
    except DynamicsError as exc:
        return exc


def cycle_census(params, seeds: list[tuple] | None = None, budget: int = 64, rng_seed: int = 0,
                 n_random: int = 0, cycle_tol: float = CYCLE_TOL, workers: int | None = None) -> Census:
    """Run ``find_cycle`` from each seed and keep the distinct cycles.

    Seeds are tried in parallel when ``workers`` (or ``CYCLEFORGE_THREADS``)
    exceeds one; results are merged in seed order so the report does not
    depend on the thread count.
    """
    seeds = census_seeds(params, rng_seed, n_random) if seeds is None else seeds
    complete = len(seeds) <= budget
    seeds = seeds[:budget]
    workers = workers or thread_count()
    jobs = [(params, seed, direction, focus, cycle_tol) for seed, direction, focus in seeds]
    if workers > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda j: _attempt(*j), jobs))
    else:
        outcomes = [_attempt(*j) for j in jobs]
    found: list[CycleRecord] = []
    attempts = []
    for (seed, direction, focus), rec in zip(seeds, outcomes):
        entry = {"seed": [round(float(v), 12) for v in seed], "direction": direction,
                 "focus": [round(float(v), 12) for v in focus]}
        if isinstance(rec, DynamicsError):
            entry["result"] = type(rec).__name__
        elif any(_same_cycle(rec, c, 1e-5 * carrying_capacity(params)) for c in found):
            entry["result"] = "duplicate"
        else:
            found.append(rec)
            entry["result"] = "cycle"
        attempts.append(entry)
    found.sort(key=lambda c: (-c.amplitude, c.section_anchor))
    assign_nesting(found)
    return Census(found, attempts, complete)


# ---------------------------------------------------------------------------
# Hopf perturbations


@dataclass
class PerturbStep:
    label: str
    params: dict
    signs: dict

    def as_dict(self) -> dict:
        return {"label": self.label, "params": self.params, "signs": self.signs}


@dataclass
class PerturbPath:
    recipe: str
    steps: list[PerturbStep]
    expected_cycles: int
    pattern_ok: bool
    best_effort: bool = True

    def as_dict(self) -> dict:
        return {"recipe": self.recipe, "steps": [s.as_dict() for s in self.steps],
                "expected_cycles": self.expected_cycles, "pattern_ok": self.pattern_ok,
                "best_effort": self.best_effort}


def _sgn(v) -> int:
    return (v > 0) - (v < 0)


def hopf_perturb(recipe: str, eps=Fraction(1, 1000), **kw) -> PerturbPath:
    """Parameter paths realising the sign patterns that create small cycles.

    ``simultaneous_pair`` (keywords K, beta): s = s0 + eps makes both traces
    negative while V3 > 0 at both foci.  ``order2_two_cycles`` (keywords K, a,
    b_lo, b_hi bracketing a simple root of phi1 with L5 < 0): choose the
    endpoint with L3 > 0 so that L3 L5 < 0 at s = s*, then raise s by eps so
    that L1 L3 < 0.
    """
    from .lyapunov import reduced_focus_constants

    eps = Fraction(eps) if not isinstance(eps, float) else eps
    if recipe == "simultaneous_pair":
        from .model import simultaneous_hopf

        K, beta = Fraction(kw["K"]), Fraction(kw["beta"])
        hp = simultaneous_hopf(K, beta)
        if not hp.valid:
            raise InvalidParameters("(K, beta) gives s0 <= 0 or alpha0 outside the three-equilibrium set")
        s0, al0 = hp.s0, hp.alpha0
        v3 = list(hp.v3_signs)
        steps = [PerturbStep("base", {"K": str(K), "alpha": str(al0), "beta": str(beta), "s": str(s0)},
                             {"V1_1": _sgn(v1_traces(K, al0, beta, s0)[0]),
                              "V1_3": _sgn(v1_traces(K, al0, beta, s0)[1]),
                              "V3_1": v3[0], "V3_3": v3[1]})]
        if eps == 0:
            return PerturbPath(recipe, steps, 0, True)
        s = s0 + eps
        t1, t3 = v1_traces(K, al0, beta, s)
        steps.append(PerturbStep("s = s0 + eps", {"K": str(K), "alpha": str(al0), "beta": str(beta), "s": str(s)},
                                 {"V1_1": _sgn(t1), "V1_3": _sgn(t3), "V3_1": v3[0], "V3_3": v3[1]}))
        ok = eps > 0 and _sgn(t1) < 0 and _sgn(t3) < 0 and v3 == [1, 1]
        return PerturbPath(recipe, steps, 2 if ok else 0, ok)
    if recipe == "order2_two_cycles":
        K, a = Fraction(kw.get("K", 100)), Fraction(kw.get("a", 60))
        if "b_lo" in kw:
            ends = [Fraction(kw["b_lo"]), Fraction(kw["b_hi"])]
        else:
            from .data import paper_interval

            iv = paper_interval("bstar")
            ends = [iv.lo, iv.hi]
        steps = []
        chosen = None
        for b in ends:
            e = d_e(K, a, b)[1]
            s_star = e / (K * (a + b + 1))
            seq = reduced_focus_constants(ReducedParams(s_star, K, a, b), 3)
            L1, L3, L5 = seq.values
            if chosen is None and L3 * L5 < 0:
                chosen = (b, s_star, L3, L5)
        if chosen is None:
            return PerturbPath(recipe, [], 0, False)
        b, s_star, L3, L5 = chosen
        steps.append(PerturbStep("perturb b, s = s*", {"K": str(K), "a": str(a), "b": str(b), "s": str(s_star)},
                                 {"V1": 0, "V3": _sgn(L3), "V5": _sgn(L5)}))
        if eps == 0:
            return PerturbPath(recipe, steps, 1, True)
        # trace = e - K s (a + b + 1): raising s lowers the trace
        s = s_star + eps if L3 > 0 else s_star - eps
        q = ReducedParams(s, K, a, b)
        L1 = reduced_focus_constants(q, 1).values[0]
        steps.append(PerturbStep("perturb s", {"K": str(K), "a": str(a), "b": str(b), "s": str(s)},
                                 {"V1": _sgn(L1), "V3": _sgn(L3), "V5": _sgn(L5)}))
        ok = _sgn(L3) * _sgn(L5) < 0 and _sgn(L1) * _sgn(L3) < 0
        return PerturbPath(recipe, steps, 2 if ok else 1, ok)
    raise ValueError(f"unknown recipe {recipe!r}")


def spiral_radius_change(params, focus: tuple, r0: float, direction: str = FORWARD) -> float:
    """Section radius after one return minus the starting radius."""
    sec = default_section(params, focus, direction)
    p1, _ = return_map(params, sec, r0, direction)
    return p1 - r0


@dataclass
class SmallCycle:
    focus: tuple
    radius: float
    multiplier: float
    stability: str
    period: float

    def as_dict(self) -> dict:
        return {"focus": [round(v, 12) for v in self.focus], "radius": float(f"{self.radius:.9g}"),
                "multiplier": float(f"{self.multiplier:.9g}"), "stability": self.stability,
                "period": round(self.period, 9)}


def small_cycle_hunt(params, focus: tuple, radii: Sequence[float] | None = None,
                     opts: _Opts | None = None) -> tuple[list[SmallCycle], list[tuple[float, float]]]:
    """Cycles near ``focus`` from sign changes of the forward displacement ``P(r) - r``.

    Radii default to 25 log-spaced values in [1e-6, 1e-1] relative to the
    focus height.  Each bracketed sign change is refined by Brent's method.
    """
    from scipy.optimize import brentq

    opts = opts or _Opts()
    sec = default_section(params, focus, FORWARD)
    scale = max(1.0, abs(focus[1]))
    radii = np.geomspace(1e-6, 1e-1, 25) * scale if radii is None else np.asarray(radii, dtype=float)
    samples = []
    for r in radii:
        try:
            p1, _ = return_map(params, sec, float(r), FORWARD, opts)
        except DynamicsError:
            samples.append((float(r), float("nan")))
            continue
        samples.append((float(r), p1 - float(r)))
    found = []
    for (r0, d0), (r1, d1) in zip(samples, samples[1:]):
        if not (np.isfinite(d0) and np.isfinite(d1)) or d0 * d1 > 0:
            continue
        root = brentq(lambda r: return_map(params, sec, r, FORWARD, opts)[0] - r, r0, r1, xtol=1e-14, rtol=1e-13)
        _, period = return_map(params, sec, root, FORWARD, opts)
        h = 1e-3 * root
        m = _fd_multiplier(params, sec, root, FORWARD, h, opts)
        found.append(SmallCycle(tuple(focus), root, m, "Stable" if abs(m) < 1 else "Unstable", period))
    return found, samples
