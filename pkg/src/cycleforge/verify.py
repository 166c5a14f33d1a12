"""Certificate suites replaying the published numerics; each check is PASS or FAIL."""
from __future__ import annotations

import time
from decimal import ROUND_HALF_UP, Decimal, localcontext
from fractions import Fraction

from . import data
from .isolate import Box, Interval, Membership, box_sign, isolate_univariate, region_membership

SUITES = ("transcription", "signs", "rank", "bstar", "theorem44", "boxes")


def _check(name: str, ok: bool, **info) -> dict:
    return {"check": name, "status": "PASS" if ok else "FAIL", **info}


def matches_printed(value: Fraction, printed: str) -> bool:
    """``value`` rounded to the significant digits of ``printed`` (at least 3) equals it."""
    p = Decimal(printed)
    digits = max(3, len(p.as_tuple().digits))
    with localcontext() as ctx:
        ctx.prec = 60
        v = Decimal(value.numerator) / Decimal(value.denominator)
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_UP
        return +v == +p


def suite_transcription() -> list[dict]:
    t0 = time.time()
    rep = data.transcription_report()
    return [
        _check("term counts", rep["term_counts_ok"], computed=rep["term_counts"], expected=data.TERM_COUNTS),
        _check("phi1(K, 1, b) factorization", rep["phi1_a1_identity"]),
        _check("runtime < 1 s", time.time() - t0 < 1.0),
    ]


def anchor_bound(name: str) -> tuple[Fraction, dict]:
    """Computed bound for a named anchor and its certificate."""
    ent = data.paper_anchors()["bounds"][name]
    phi = data.load_phi(ent["poly"])
    if "box" in ent:
        box = data.paper_box(*ent["box"], negate_b=ent["negate_b"])
    else:
        pt = ent["point"]
        box = Box({"K": Interval.point(Fraction(pt["K"])), "a": Interval.point(Fraction(pt["a"])),
                   "b": data.paper_interval(ent["b_box"])})
    cert = box_sign(phi, box)
    bound = cert.lower_bound if ent["kind"] == "lower" else cert.upper_bound
    return bound, cert.as_dict()


def suite_signs() -> list[dict]:
    out = []
    for name, ent in data.paper_anchors()["bounds"].items():
        bound, cert = anchor_bound(name)
        signed_ok = bound > 0 if ent["kind"] == "lower" else bound < 0
        out.append(_check(name, signed_ok and matches_printed(bound, ent["printed"]), computed=f"{float(bound):.10e}",
                          printed=ent["printed"], certificate=cert["status"]))
    return out


def suite_rank() -> list[dict]:
    from .lyapunov import jacobian_rank_certificate

    cert = jacobian_rank_certificate()
    return [_check("det d(phi1,phi2,phi3)/d(K,a,b) < 0 over the order-four box", cert.sign < 0,
                   certificate=cert.as_dict())]


def isolate_bstar(width=Fraction(1, 2**70)) -> dict:
    phi1 = data.load_phi(1).subs({"K": 100, "a": 60})
    roots = isolate_univariate(phi1.with_vars(("b",)), None, width)
    inside = []
    for iv in roots:
        box = Box({"K": Interval.point(Fraction(100)), "a": Interval.point(Fraction(60)), "b": iv})
        m = region_membership(box, ["Lambda", "Sigma2", "Sigma3"])
        if m is Membership.INSIDE:
            inside.append(iv)
    published = data.paper_interval("bstar")
    return {"roots": roots, "inside": inside, "published": published,
            "intersects": len(inside) == 1 and inside[0].intersects(published)}


def suite_bstar() -> list[dict]:
    from .lyapunov import order_two_at_bstar

    t0 = time.time()
    iso = isolate_bstar()
    dt = time.time() - t0
    out = [
        _check("exactly one root of phi1(100, 60, b) in the weak-focus region", len(iso["inside"]) == 1,
               real_roots=len(iso["roots"])),
        _check("isolating interval meets the published interval", iso["intersects"],
               computed=[str(iso["inside"][0].lo), str(iso["inside"][0].hi)] if iso["inside"] else None),
        _check("interval width <= 1e-20", bool(iso["inside"]) and iso["inside"][0].width <= Fraction(1, 10**20)),
        _check("isolation runtime < 10 s", dt < 10),
    ]
    rep = order_two_at_bstar()
    out.append(_check("weak focus of order two, fifth focal value negative", rep["order"] == 2 and rep["V5_sign"] < 0,
                      L3_sign_change=rep["L3_sign_change"], V5_sign=rep["V5_sign"]))
    return out


def suite_theorem44(K=None, beta=None) -> list[dict]:
    from .model import f1_via_fbar, simultaneous_hopf

    anc = data.paper_anchors()["theorem44"]
    K = Fraction(anc["K"]) if K is None else Fraction(K)
    beta = Fraction(anc["beta"]) if beta is None else Fraction(beta)
    hp = simultaneous_hopf(K, beta)
    _, f1s = f1_via_fbar(K, beta)
    out = [
        _check("V1 vanishes at both foci", hp.v1 == (0, 0)),
        _check("V3 > 0 at both foci", hp.v3_signs == (1, 1)),
        _check("Fbar1 positive", f1s > 0),
        _check("s0 > 0, alpha0 inside (1, beta) and the three-equilibrium condition holds", hp.valid),
    ]
    if K == Fraction(anc["K"]) and beta == Fraction(anc["beta"]):
        out.append(_check("s0 and alpha0 exact", hp.s0 == Fraction(anc["s0"]) and hp.alpha0 == Fraction(anc["alpha0"]),
                          s0=str(hp.s0), alpha0=str(hp.alpha0)))
    return out


def suite_boxes(long_running: bool = False) -> list[dict]:
    from .elim import PipelineConfig, case_pipeline

    rep = case_pipeline(PipelineConfig(long_running=long_running))
    out = []
    for c in rep["cases"]:
        out.append(_check(f"case {c['case']}", c["verdict"] != "FAIL", verdict=c["verdict"]))
    out.append(_check("unique confirmed candidate is (K2, a4, b2)", rep["confirmed"] == ["(K2, a4, b2)"],
                      confirmed=rep["confirmed"], pending=rep["pending_branches"]))
    return out


def run_suites(names, long_running: bool = False) -> dict:
    if "all" in names:
        names = SUITES
    table = {
        "transcription": suite_transcription,
        "signs": suite_signs,
        "rank": suite_rank,
        "bstar": suite_bstar,
        "theorem44": suite_theorem44,
        "boxes": lambda: suite_boxes(long_running),
    }
    report = {}
    for n in names:
        if n not in table:
            raise ValueError(f"unknown suite {n!r}")
        report[n] = table[n]()
    report_ok = all(ch["status"] == "PASS" for checks in report.values() for ch in checks)
    return {"suites": report, "verdict": "PASS" if report_ok else "FAIL"}
