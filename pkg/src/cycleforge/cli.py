"""Command line for equilibria, focal values, certificates and cycle census.

Exit codes: 0 success, 1 a certificate failed, 2 invalid input, 3 budget
exhausted.  JSON goes to stdout (sorted keys) and, with ``--out``, to files
next to CSV and SVG artifacts.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import data
from .model import InvalidParameters, ModelParams, ReducedParams

log = logging.getLogger("cycleforge")

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

MODEL_KEYS = {"r", "K", "m", "a", "s", "h", "b"}
REDUCED_KEYS = {"s", "K", "a", "b"}


class UsageError(ValueError):
    pass


# ---------------------------------------------------------------------------
# parameter resolution


def _parse_inline(text: str) -> dict:
    out = {}
    for part in text.split(","):
        if not part.strip():
            continue
        if "=" not in part:
            raise UsageError(f"expected key=value, got {part!r}")
        k, v = part.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def resolve_params(spec: str) -> dict:
    """Shipped set name, JSON path, or inline ``k=v,...``; returns a normalized record."""
    if spec in data.list_params():
        raw = data.load_params(spec)
    elif spec.endswith(".json") or Path(spec).is_file():
        try:
            raw = json.loads(Path(spec).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read parameter file {spec}: {exc}") from exc
    else:
        raw = _infer_kind(_parse_inline(spec))
    if "kind" not in raw:
        raw = _infer_kind({k: str(v) for k, v in raw.items()})
    return raw


def _infer_kind(kv: dict) -> dict:
    keys = set(kv)
    if keys == MODEL_KEYS:
        return {"kind": "model", "original": kv}
    if keys == REDUCED_KEYS or keys == {"K", "a", "b"}:
        return {"kind": "reduced", "reduced": kv}
    if keys <= {"K", "beta", "alpha", "s"} and {"K", "beta"} <= keys:
        return {"kind": "three_eq", "three_eq": kv}
    raise UsageError(f"cannot infer parameter kind from keys {sorted(keys)}")


def _num(v):
    try:
        return Fraction(v) if isinstance(v, (str, int)) else v
    except ValueError as exc:
        raise UsageError(f"not a number: {v!r}") from exc


def model_of(rec: dict) -> ModelParams:
    o = rec["original"]
    return ModelParams(*(_num(o[k]) for k in ("r", "K", "m", "a", "s", "h", "b")))


def reduced_of(rec: dict, s_default="1") -> ReducedParams:
    r = rec["reduced"]
    return ReducedParams(_num(r.get("s", s_default)), _num(r["K"]), _num(r["a"]), _num(r["b"]))


def params_of(rec: dict):
    if rec["kind"] == "model":
        return model_of(rec)
    if rec["kind"] == "reduced":
        return reduced_of(rec)
    raise UsageError(f"subcommand needs model or reduced parameters, got kind {rec['kind']!r}")


# ---------------------------------------------------------------------------
# output helpers


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_default)


def _default(o):
    if isinstance(o, Fraction):
        return str(o)
    if hasattr(o, "as_dict"):
        return o.as_dict()
    if hasattr(o, "tolist"):
        return o.tolist()
    raise TypeError(f"not serializable: {type(o).__name__}")


def emit(args, name: str, obj) -> None:
    text = dumps(obj)
    print(text)
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / f"{name}.json").write_text(text + "\n")


def _out_dir(args) -> Path | None:
    if not args.out:
        return None
    p = Path(args.out)
    p.mkdir(parents=True, exist_ok=True)
    return p


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args) -> int:
    from .model import classify_interior, classify_layout, classify_model, discriminants, origin_analysis

    rec = resolve_params(args.params)
    p = params_of(rec)
    report: dict = {"params": p.as_dict()}
    if isinstance(p, ModelParams):
        reps = classify_model(p)
        report["equilibria"] = [r.as_dict() for r in reps]
        q0 = next((r.reduced for r in reps if r.reduced is not None), None)
        if q0 is not None:
            report["discriminants"] = discriminants(q0, p).as_dict()
        report["origin"] = _origin(origin_analysis(p.s / p.r))
    else:
        rep = classify_interior(p)
        report["equilibria"] = [rep.as_dict()]
        report["layout"] = classify_layout(p.K, p.a, p.b).as_dict()
        report["discriminants"] = discriminants(p).as_dict()
        report["origin"] = _origin(origin_analysis(p.s))
    report["boundary"] = {"E0": "HyperbolicSaddle"}
    if args.format == "table":
        print(_table(report))
        return EXIT_OK
    emit(args, "classify", report)
    return EXIT_OK


def _origin(res) -> dict:
    dirs, case = res
    return {"directions": [round(d, 15) for d in dirs], "case": case}


def _table(report: dict) -> str:
    lines = [f"{'x*':>12} {'y*':>12} {'trace':>14} {'det':>14}  tag"]
    for e in report["equilibria"]:
        tag = e["tag"] + (f" [{e['subtag']}]" if e.get("subtag") else "")
        lines.append(f"{float(Fraction(str(e['x_star']))):12.6g} {float(Fraction(str(e['y_star']))):12.6g} "
                     f"{float(Fraction(str(e['trace']))):14.6g} {float(Fraction(str(e['det']))):14.6g}  {tag}")
    if "layout" in report:
        lines.append(f"layout: {report['layout']['layout']} (case {report['layout']['case']})")
    lines.append(f"origin: case {report['origin']['case']}")
    return "\n".join(lines)


def cmd_lyapunov(args) -> int:
    from .lyapunov import (closed_form_signs, jacobian_rank_certificate, order_two_at_bstar, weak_focus_order)

    rec = resolve_params(args.params)
    if rec["kind"] == "weak_focus_box":
        wf = rec["weak_focus"]
        if "K_box" in wf:
            box = data.paper_box(wf["K_box"], wf["a_box"], wf["b_box"])
            signs = closed_form_signs(box)
            rank = jacobian_rank_certificate(box)
            order = 4 if signs["V9"] != "?" and rank.sign != 0 else None
            report = {
                "point": {k: [str(box[k].lo), str(box[k].hi)] for k in ("K", "a", "b")},
                "order": order,
                "signs": signs,
                "certificates": {"jacobian_rank": rank.as_dict(),
                                 "note": "phi1 = phi2 = phi3 = 0 at the unique common zero in the box "
                                         "(see verify-paper --suite boxes)"},
            }
        else:
            rep = order_two_at_bstar(_num(wf["K"]), _num(wf["a"]))
            report = {"point": {"K": wf["K"], "a": wf["a"], "b_box": wf["b_box"]}, "order": rep["order"],
                      "signs": {"V5": "-" if rep["V5_sign"] < 0 else "+" if rep["V5_sign"] > 0 else "?"},
                      "certificates": rep}
        emit(args, "lyapunov", report)
        return EXIT_OK if report["order"] is not None else EXIT_FAIL
    q = reduced_of(rec)
    if args.at_s_star:
        e = q.K * q.a - q.K - 2 * q.a - q.b
        q = q.with_s(e / (q.K * (q.a + q.b + 1)))
    rep = weak_focus_order(q, tol=args.tol or 1e-10, n=args.count)
    report = {"point": q.as_dict(), "order": rep.order, "values": rep.as_dict()["values"],
              "certificates": {"method": rep.method, **rep.detail}}
    if q.exact:
        from .isolate import Membership, region_membership

        pt = {"K": q.K, "a": q.a, "b": q.b}
        if region_membership(pt, "Lambda") is Membership.INSIDE:
            report["signs"] = closed_form_signs(pt)
    emit(args, "lyapunov", report)
    return EXIT_OK


def _parse_width(text: str | None) -> Fraction:
    if not text:
        return Fraction(1, 2**64)
    t = text.replace(" ", "")
    num, _, den = t.partition("/")
    try:
        w = _power(num) / _power(den) if den else _power(num)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse width {text!r}") from exc
    if not w > 0:
        raise UsageError("width must be positive")
    return w


def _power(t: str) -> Fraction:
    """``2^-64``, ``10^20`` or a plain rational."""
    base, _, exp = t.partition("^")
    return Fraction(base) ** int(exp) if exp else Fraction(base)


def cmd_isolate(args) -> int:
    from .isolate import Interval, isolate_univariate, region_membership
    from .ratpoly import poly_parse

    width = _parse_width(args.width)
    if args.phi:
        at = {k: _num(v) for k, v in _parse_inline(args.at or "").items()}
        poly = data.load_phi(args.phi).subs(at)
        if len(poly.free_vars()) != 1:
            raise UsageError("--at must fix all but one of K, a, b")
        var = poly.free_vars()[0]
        poly = poly.with_vars((var,))
    else:
        if not args.poly:
            raise UsageError("need --poly or --phi")
        var = args.var
        poly = poly_parse(args.poly, (var,))
        at = {}
    domain = None
    if args.domain:
        lo, hi = args.domain.split(",")
        domain = (None if lo in ("", "-inf") else Fraction(lo), None if hi in ("", "inf") else Fraction(hi))
    roots = isolate_univariate(poly, domain, width)
    rows = []
    for iv in roots:
        row = {"lo": str(iv.lo), "hi": str(iv.hi), "mid": float(iv.mid), "width": float(iv.width)}
        if args.region and args.phi:
            from .isolate import Box

            box = Box({**{k: Interval.point(Fraction(v)) for k, v in at.items()}, var: iv})
            row["region"] = region_membership(box, args.region.split(",")).value
        rows.append(row)
    emit(args, "isolate", {"variable": var, "width": str(width), "roots": rows})
    return EXIT_OK


def cmd_verify_paper(args) -> int:
    from .verify import run_suites

    try:
        data.verify_checksums()
    except data.DataIntegrityError as exc:
        print(f"data integrity failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    rep = run_suites(args.suite.split(","), long_running=args.long_running)
    if args.format == "table":
        for suite, checks in rep["suites"].items():
            for ch in checks:
                print(f"{ch['status']:4}  {suite:13} {ch['check']}")
        print(f"verdict: {rep['verdict']}")
    else:
        emit(args, "verify_paper", rep)
    return EXIT_OK if rep["verdict"] == "PASS" else EXIT_FAIL


def _equilibria_for_plot(p) -> list[tuple]:
    from .model import classify_interior, classify_model, reduced_equilibria

    out = []
    if isinstance(p, ModelParams):
        for r in classify_model(p):
            out.append((float(r.x_star), float(r.y_star), r.tag))
    else:
        for r in reduced_equilibria(p):
            x = r.x
            q = ReducedParams(p.s, p.K / x, p.a * x * x, p.b * x) if r.multiplicity == 1 else None
            out.append((float(x), float(x), classify_interior(q).tag if q else "Degenerate"))
    return out


def cmd_simulate(args) -> int:
    from .dynamics import integrate
    from .plotting import phase_portrait

    p = params_of(resolve_params(args.params))
    x0 = [float(v) for v in args.x0.split(",")] if args.x0 else [9.0 * float(p.K) / 10.0, 1.0]
    tol = args.tol or 1e-10
    tr = integrate(p, x0, (0.0, args.t_end), args.direction, rel_tol=tol, abs_tol=tol * 1e-2,
                   n_samples=args.samples)
    summary = {"params": p.as_dict(), "x0": x0, "t_end": args.t_end, "direction": args.direction,
               "status": tr.status, "final": [round(float(tr.x[-1]), 10), round(float(tr.y[-1]), 10)],
               "x_range": [round(float(tr.x.min()), 10), round(float(tr.x.max()), 10)],
               "y_range": [round(float(tr.y.min()), 10), round(float(tr.y.max()), 10)]}
    out = _out_dir(args)
    if out:
        (out / "trajectory.csv").write_text(tr.to_csv())
        phase_portrait(out / "simulate.svg", trajectories=[tr], equilibria=_equilibria_for_plot(p),
                       title="trajectory")
    emit(args, "simulate", summary)
    return EXIT_OK


def _cycles_csv(cycles) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["anchor_x", "anchor_y", "period", "multiplier", "stability", "amplitude", "nesting_index",
                "found_direction"])
    for c in cycles:
        w.writerow([f"{c.section_anchor[0]:.12g}", f"{c.section_anchor[1]:.12g}", f"{c.period:.9g}",
                    f"{c.multiplier:.9g}", c.stability, f"{c.amplitude:.9g}", c.nesting_index, c.found_direction])
    return buf.getvalue()


def cmd_census(args) -> int:
    from .dynamics import cycle_census
    from .plotting import phase_portrait

    p = params_of(resolve_params(args.params))
    cen = cycle_census(p, budget=args.budget, rng_seed=args.seed, n_random=args.n_random,
                       cycle_tol=args.tol or 1e-8)
    out = _out_dir(args)
    if out:
        (out / "cycles.csv").write_text(_cycles_csv(cen.cycles))
        phase_portrait(out / "census.svg", cycles=cen.cycles, equilibria=_equilibria_for_plot(p),
                       title=f"{len(cen.cycles)} limit cycle(s)")
    report = {"params": p.as_dict(), "seed": args.seed, **cen.as_dict()}
    emit(args, "census", report)
    return EXIT_OK if cen.complete else EXIT_BUDGET


def cmd_bifurcate(args) -> int:
    from .dynamics import hopf_perturb, small_cycle_hunt
    from .model import s0_alpha0

    eps = _num(args.eps)
    if args.recipe == "simultaneous_pair":
        rec = resolve_params(args.params or "thm44_10_4")
        t = rec.get("three_eq")
        if t is None:
            raise UsageError("simultaneous_pair needs K and beta (kind three_eq)")
        K, beta = _num(t["K"]), _num(t["beta"])
        path = hopf_perturb("simultaneous_pair", eps, K=K, beta=beta)
        report = path.as_dict()
        if args.hunt and eps != 0:
            s0, al0 = s0_alpha0(K, beta)
            q = ReducedParams(s0 + eps, K, K / (al0 * beta), 1 / K - 1 / al0 - 1 / beta - 1)
            hunts = []
            for foc in ((1.0, 1.0), (float(beta), float(beta))):
                cyc, _ = small_cycle_hunt(q, foc)
                hunts.append({"focus": list(foc), "cycles": [c.as_dict() for c in cyc]})
            report["small_cycles"] = hunts
    elif args.recipe == "order2_two_cycles":
        kw = {}
        if args.params:
            rec = resolve_params(args.params)
            wf = rec.get("weak_focus", {})
            kw = {"K": _num(wf.get("K", 100)), "a": _num(wf.get("a", 60))}
        report = hopf_perturb("order2_two_cycles", eps, **kw).as_dict()
    else:
        raise UsageError(f"unknown recipe {args.recipe!r}")
    emit(args, "bifurcate", report)
    return EXIT_OK if report["pattern_ok"] else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cycleforge", description=__doc__.splitlines()[0])
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, params_required=True):
        p.add_argument("--params", required=params_required,
                       help="shipped set name, JSON file, or inline k=v,k=v")
        p.add_argument("--out", help="directory for JSON/CSV/SVG artifacts")
        p.add_argument("--tol", type=float, help="numerical tolerance")
        p.add_argument("--seed", type=int, default=0, help="seed for randomized sweeps")
        p.add_argument("--long-running", action="store_true", help="enable hours-scale branches")
        return p

    p = common(sub.add_parser("classify", help="equilibria, layout and origin analysis"))
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_classify)

    p = common(sub.add_parser("lyapunov", help="weak-focus order and focal-value signs"))
    p.add_argument("--count", type=int, default=5, help="number of constants L1, L3, ...")
    p.add_argument("--at-s-star", action="store_true", help="replace s by the trace-zero value s*")
    p.set_defaults(func=cmd_lyapunov)

    p = common(sub.add_parser("isolate", help="certified real-root isolation"), params_required=False)
    p.add_argument("--poly", help="univariate polynomial text")
    p.add_argument("--var", default="x")
    p.add_argument("--phi", type=int, choices=(1, 2, 3, 4), help="use a shipped focal polynomial")
    p.add_argument("--at", help="fixed values for the focal polynomial, e.g. K=100,a=60")
    p.add_argument("--domain", help="lo,hi (half-open (lo, hi])")
    p.add_argument("--width", help="target width, e.g. 2^-64 or 1/10^20")
    p.add_argument("--region", help="comma-separated region names to test each root box against")
    p.set_defaults(func=cmd_isolate)

    p = common(sub.add_parser("verify-paper", help="replay the published certificates"), params_required=False)
    p.add_argument("--suite", default="all",
                   help="transcription, signs, boxes, rank, bstar, theorem44 or all (comma-separated)")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.set_defaults(func=cmd_verify_paper)

    p = common(sub.add_parser("simulate", help="integrate one trajectory"))
    p.add_argument("--x0", help="x,y initial state")
    p.add_argument("--t-end", type=float, default=500.0)
    p.add_argument("--direction", choices=("forward", "backward"), default="forward")
    p.add_argument("--samples", type=int, default=5001)
    p.set_defaults(func=cmd_simulate)

    p = common(sub.add_parser("census", help="limit-cycle census"))
    p.add_argument("--budget", type=int, default=64, help="maximum number of seeds tried")
    p.add_argument("--n-random", type=int, default=0, help="extra seeded random seeds")
    p.set_defaults(func=cmd_census)

    p = common(sub.add_parser("bifurcate", help="Hopf perturbation recipes"), params_required=False)
    p.add_argument("--recipe", choices=("simultaneous_pair", "order2_two_cycles"), required=True)
    p.add_argument("--eps", default="1/1000")
    p.add_argument("--no-hunt", dest="hunt", action="store_false", help="skip the small-cycle search")
    p.set_defaults(func=cmd_bifurcate)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    from .dynamics import BudgetExhausted

    try:
        return args.func(args)
    except (InvalidParameters, UsageError, FileNotFoundError, KeyError, ValueError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET


if __name__ == "__main__":
    sys.exit(main())
