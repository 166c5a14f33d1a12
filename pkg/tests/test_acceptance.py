"""Acceptance criteria 1-11; each test prints one PASS/FAIL line with its runtime.

Run ``pytest tests/test_acceptance.py -v`` (the lines are written past the
capture) or ``python tests/test_acceptance.py`` for the summary alone.
"""
import random
import sys
import time
from fractions import Fraction

import pytest

import properties
from cycleforge import data
from cycleforge.dynamics import BACKWARD, FORWARD, cycle_census, hopf_perturb
from cycleforge.isolate import Sign
from cycleforge.lyapunov import jacobian_rank_certificate, order_two_at_bstar, reduced_focus_constants
from cycleforge.model import (
    ReducedParams,
    classify_model,
    f1_via_fbar,
    fig11_params,
    interior_equilibria,
    simultaneous_hopf,
    thresholds,
)
from cycleforge.verify import anchor_bound, isolate_bstar, matches_printed
from test_model import rand_lambda_point

F = Fraction
RESULTS = {}


def _line(n, ok, seconds, detail=""):
    RESULTS[n] = ok
    return f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  ({seconds:.2f} s)  {detail}"


@pytest.fixture
def report(capsys):
    def emit(n, ok, seconds, detail=""):
        text = _line(n, ok, seconds, detail)
        with capsys.disabled():
            print("\n" + text)
        return ok

    return emit


def criterion_1():
    t0 = time.time()
    rep = data.transcription_report()
    dt = time.time() - t0
    ok = rep["term_counts_ok"] and rep["phi1_a1_identity"] and dt < 1.0
    return ok, dt, f"terms {rep['term_counts']}, phi1(K,1,b) identity {rep['phi1_a1_identity']}"


def criterion_2():
    t0 = time.time()
    parts = []
    ok = True
    for name, ent in data.paper_anchors()["bounds"].items():
        bound, cert = anchor_bound(name)
        signed = bound > 0 if ent["kind"] == "lower" else bound < 0
        good = signed and matches_printed(bound, ent["printed"])
        ok = ok and good
        parts.append(f"{name}={float(bound):.4e}")
    dt = time.time() - t0
    return ok and dt < 30, dt, ", ".join(parts)


def criterion_3():
    t0 = time.time()
    cert = jacobian_rank_certificate()
    dt = time.time() - t0
    return cert.status is Sign.NEGATIVE and dt < 60, dt, f"det in [{float(cert.lower_bound):.3e}, {float(cert.upper_bound):.3e}]"


def criterion_4():
    t0 = time.time()
    iso = isolate_bstar()
    dt = time.time() - t0
    inside = iso["inside"]
    ok = len(inside) == 1 and iso["intersects"] and inside[0].width <= F(1, 10**20) and dt < 10
    w = float(inside[0].width) if inside else float("nan")
    return ok, dt, f"{len(inside)} root in region, width {w:.2e}, meets published interval {iso['intersects']}"


def criterion_5():
    t0 = time.time()
    p = fig11_params()
    roots = [r.x for r in interior_equilibria(p)]
    reps = classify_model(p)
    tags = [r.tag for r in reps]
    s_outer = [reps[0].thresholds.get("s_star"), reps[2].thresholds.get("s_star")]
    ok = (roots == [1, 2, 4] and all(isinstance(x, Fraction) for x in roots)
          and tags == ["StableFocus", "HyperbolicSaddle", "StableFocus"]
          and s_outer == [F(275, 1000), F(141, 360)])
    return ok, time.time() - t0, f"roots {[str(x) for x in roots]}, tags {tags}, s* {[str(s) for s in s_outer]}"


def criterion_6():
    t0 = time.time()
    phi1 = data.load_phi(1)
    rng = random.Random(606)
    fails = 0
    for _ in range(100):
        K, a, b = rand_lambda_point(rng)
        s = thresholds(K, a, b)["s_star"]
        L = reduced_focus_constants(ReducedParams(s, K, a, b), 2).values
        f = phi1.eval({"K": K, "a": a, "b": b})
        if L[0] != 0 or (L[1] > 0) - (L[1] < 0) != -((f > 0) - (f < 0)):
            fails += 1
    rep = order_two_at_bstar()
    ok = fails == 0 and rep["order"] is not None and rep["order"] >= 2 and rep["V5_sign"] == -1
    return ok, time.time() - t0, f"100 points, {fails} failures; b* order {rep['order']}, sign(L5) {rep['V5_sign']}"


def theorem44_samples(n=20, seed=44):
    rng = random.Random(seed)
    got = [(F(10), F(4))]
    while len(got) < n:
        K = F(rng.randint(20, 400), 10)
        be = F(rng.randint(11, int(K * 10) - 1), 10)
        if (K, be) not in got and simultaneous_hopf(K, be, with_v3=False).valid:
            got.append((K, be))
    return got


def criterion_7():
    t0 = time.time()
    bad = []
    for K, be in theorem44_samples():
        hp = simultaneous_hopf(K, be)
        if not (hp.v1 == (0, 0) and hp.v3_signs == (1, 1) and f1_via_fbar(K, be)[1] > 0):
            bad.append((str(K), str(be)))
    ref = simultaneous_hopf(10, 4)
    ok = not bad and ref.s0 == F(19, 50) and ref.alpha0 == F(85, 46)
    return ok, time.time() - t0, f"20 samples, failures {bad}; s0={ref.s0}, alpha0={ref.alpha0}"


def criterion_8():
    t0 = time.time()
    cen = cycle_census(fig11_params())
    dt = time.time() - t0
    cyc = cen.cycles
    ok = len(cyc) == 3
    if ok:
        outer, *inner = cyc
        ok = (outer.stability == "Stable" and outer.found_direction == FORWARD and outer.nesting_index == 0
              and sorted(round(c.section_anchor[0]) for c in inner) == [1, 4]
              and all(c.stability == "Unstable" and c.found_direction == BACKWARD and c.nesting_index == 1
                      for c in inner)
              and all(c.displacement < 1e-8 for c in cyc)
              and all(abs(c.forward_multiplier_direct / c.multiplier - 1) < 0.05 for c in inner))
    detail = "; ".join(f"{c.stability} T={c.period:.4f} m={c.multiplier:.4g} disp={c.displacement:.1e}" for c in cyc)
    return ok and dt < 300, dt, f"{len(cyc)} cycles: {detail}"


def criterion_9():
    t0 = time.time()
    cen = cycle_census(ReducedParams(F(1, 20), 10, F(5, 4), F(-1)))
    stable = [c for c in cen.cycles if c.stability == "Stable"]
    return len(stable) >= 1, time.time() - t0, f"{len(stable)} stable cycle(s)"


def criterion_10():
    t0 = time.time()
    p2 = hopf_perturb("order2_two_cycles")
    first, second = p2.steps
    order2_ok = (p2.pattern_ok and first.signs["V3"] * first.signs["V5"] < 0
                 and second.signs["V1"] * second.signs["V3"] < 0)
    pair = hopf_perturb("simultaneous_pair", F(1, 1000), K=10, beta=4)
    ok = order2_ok and pair.pattern_ok
    return ok, time.time() - t0, (f"order-two path signs {first.signs} -> {second.signs}; "
                                  f"simultaneous pair ok {pair.pattern_ok}")


def criterion_11():
    t0 = time.time()
    fails = {name: len(fn(n=1000)) for name, fn in properties.SUITES.items()}
    return all(v == 0 for v in fails.values()), time.time() - t0, f"1000 instances each, failures {fails}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7,
            criterion_8, criterion_9, criterion_10, criterion_11]


@pytest.mark.parametrize("n", range(1, 12))
def test_criterion(n, report):
    ok, dt, detail = CRITERIA[n - 1]()
    assert report(n, ok, dt, detail)


if __name__ == "__main__":
    failed = 0
    for i, fn in enumerate(CRITERIA, start=1):
        ok, dt, detail = fn()
        print(_line(i, ok, dt, detail))
        failed += not ok
    sys.exit(1 if failed else 0)
