"""Shipped data: focal-value polynomials, published root boxes, parameter sets.

The four focal polynomials live in ``data/appendix_b/phi{1..4}.poly`` in the
canonical text format of :mod:`cycleforge.ratpoly`.  ``checksums.json`` pins
their SHA-256 so a corrupted install is detected before any certificate runs.
"""
from __future__ import annotations

import hashlib
import json
import re
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .isolate import Box, Interval
from .ratpoly import MultiPoly, poly_parse

VARS = ("K", "a", "b")
TERM_COUNTS = {1: 29, 2: 340, 3: 1216, 4: 2947}


class DataIntegrityError(RuntimeError):
    pass


def data_dir() -> Path:
    return Path(str(resources.files("cycleforge") / "data"))


# ---------------------------------------------------------------------------
# LaTeX ingestion

_LAYOUT = [r"\\begin\{[a-z*]+\}", r"\\end\{[a-z*]+\}", r"\$\$", r"\\qquad", r"\\,", r"\\\\", "&"]


def latex_to_poly_text(src: str) -> dict[int, str]:
    """Extract ``\\varphi_i=...`` bodies from typeset source as plain polynomial text.

    The typeset source sets the digit pair 10 off in braces inside long
    integers (``34{10}665`` for 3410665); braces that are not an exponent are
    removed after whitespace inside braces has been normalised, since line
    breaks can fall inside them.
    """
    txt = src
    for pat in _LAYOUT:
        txt = re.sub(pat, " ", txt)
    txt = re.sub(r"\{\s*([^{}]*?)\s*\}", r"{\1}", txt)
    txt = re.sub(r"\^\s+\{", "^{", txt)
    txt = re.sub(r"(?<!\^)\{10\}", "10", txt)
    txt = re.sub(r"\{([A-Za-z])\}", r"\1", txt)
    txt = re.sub(r"\^\{(\d+)\}", r"^\1", txt)
    parts = re.split(r"\\varphi_(\d)\s*=", txt)
    out = {}
    for i in range(1, len(parts), 2):
        body = re.sub(r"\s+", " ", parts[i + 1]).strip().rstrip(".,").strip()
        # juxtaposed single-letter variables ("Ka") become separate factors
        body = re.sub(r"([Kab])(?=[Kab])", r"\1 ", body)
        leftover = set(re.sub(r"[0-9Kab^+\- ]", "", body))
        if leftover:
            raise ValueError(f"unparsed markup in phi_{parts[i]}: {sorted(leftover)}")
        out[int(parts[i])] = body
    return out


# ---------------------------------------------------------------------------
# focal polynomials


def _sha256(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def verify_checksums() -> dict[str, str]:
    root = data_dir() / "appendix_b"
    expected = json.loads((root / "checksums.json").read_text())
    for name, digest in expected.items():
        got = _sha256(root / name)
        if got != digest:
            raise DataIntegrityError(f"{name}: checksum {got} != {digest}")
    return expected


@lru_cache(maxsize=None)
def load_phi(i: int) -> MultiPoly:
    if i not in TERM_COUNTS:
        raise ValueError("phi index must be 1..4")
    path = data_dir() / "appendix_b" / f"phi{i}.poly"
    return poly_parse(path.read_text(), VARS)


def load_phis() -> dict[int, MultiPoly]:
    verify_checksums()
    return {i: load_phi(i) for i in TERM_COUNTS}


def transcription_report() -> dict:
    """Term counts and the a=1 factorisation identity of phi_1."""
    phis = load_phis()
    counts = {i: len(p) for i, p in phis.items()}
    K = MultiPoly.var("K", VARS)
    b = MultiPoly.var("b", VARS)
    target = -(b + 4) * (b + 2) ** 2 * (K * K - 4 * K + 1 - K * b)
    identity = phis[1].subs({"a": 1}) == target
    return {
        "term_counts": counts,
        "term_counts_ok": counts == TERM_COUNTS,
        "phi1_a1_identity": identity,
    }


# ---------------------------------------------------------------------------
# published boxes and parameter sets


@lru_cache(maxsize=None)
def _boxes_raw() -> dict:
    return json.loads((data_dir() / "paper_boxes.json").read_text())


def paper_interval(name: str) -> Interval:
    ent = _boxes_raw()["intervals"][name]
    return Interval(Fraction(ent["lo"]), Fraction(ent["hi"]))


def paper_box(K: str, a: str, b: str, negate_b: bool = False) -> Box:
    """Box from published interval names, e.g. ``paper_box('K2', 'a4', 'b2')``.

    ``negate_b`` maps the b interval to its mirror image (boxes recorded for
    the reflected polynomial).
    """
    ib = paper_interval(b)
    return Box({"K": paper_interval(K), "a": paper_interval(a), "b": -ib if negate_b else ib})


def paper_provenance(name: str) -> str:
    return _boxes_raw()["intervals"][name]["provenance"]


def load_params(name: str) -> dict:
    path = data_dir() / "params" / f"{name}.json"
    if not path.exists():
        raise FileNotFoundError(f"no parameter set {name!r}")
    return json.loads(path.read_text())


def list_params() -> list[str]:
    return sorted(p.stem for p in (data_dir() / "params").glob("*.json"))


@lru_cache(maxsize=None)
def paper_anchors() -> dict:
    """Printed approximations that certificates are compared against."""
    return json.loads((data_dir() / "paper_anchors.json").read_text())
