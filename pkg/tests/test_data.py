from fractions import Fraction
from pathlib import Path

import pytest

from cycleforge import data
from cycleforge.isolate import Interval
from cycleforge.ratpoly import MultiPoly, poly_parse

PAPER = Path(__file__).resolve().parents[1] / "paper.md"


def test_term_counts():
    assert {i: len(data.load_phi(i)) for i in range(1, 5)} == {1: 29, 2: 340, 3: 1216, 4: 2947}


def test_phi1_at_a_equal_one_factors():
    K = MultiPoly.var("K", data.VARS)
    b = MultiPoly.var("b", data.VARS)
    expected = -(b + 4) * (b + 2) ** 2 * (K * K - 4 * K + 1 - K * b)
    assert data.load_phi(1).subs({"a": 1}) == expected


def test_checksums_verify():
    sums = data.verify_checksums()
    assert sorted(sums) == ["phi1.poly", "phi2.poly", "phi3.poly", "phi4.poly"]
    assert all(len(h) == 64 for h in sums.values())


def test_transcription_report_ok():
    rep = data.transcription_report()
    assert rep["term_counts_ok"] and rep["phi1_a1_identity"]


@pytest.mark.skipif(not PAPER.exists(), reason="typeset source not available")
def test_data_regenerates_from_source():
    text = PAPER.read_text()
    bodies = data.latex_to_poly_text(text[text.index(r"\varphi_1=&"):])
    for i in range(1, 5):
        assert poly_parse(bodies[i], data.VARS) == data.load_phi(i)


def test_latex_cleanup():
    src = r"\varphi_1 = 34{10}665 K^{2} a - {b}^{3} + Ka ."
    assert data.latex_to_poly_text(src) == {1: "3410665 K^2 a - b^3 + K a"}


def test_paper_boxes_are_intervals():
    box = data.paper_box("K2", "a4", "b2")
    for v in "Kab":
        assert isinstance(box[v], Interval)
        assert box[v].lo < box[v].hi
    assert data.paper_box("K2", "a5", "b19", negate_b=True)["b"].hi == -data.paper_interval("b19").lo
    assert data.paper_provenance("bstar")


def test_params_shipped():
    names = data.list_params()
    assert {"fig11", "remark32", "thm44_10_4", "thm43_bstar", "pstar"} <= set(names)
    fig = data.load_params("fig11")
    assert fig["kind"] == "model"
    assert Fraction(fig["original"]["b"]) == Fraction(-33, 20)
    assert [r["x_star"] for r in fig["reduced"]] == ["1", "2", "4"]
    with pytest.raises(FileNotFoundError):
        data.load_params("nope")


def test_anchors_have_provenance():
    for ent in data.paper_anchors()["bounds"].values():
        assert ent["provenance"]
        assert ent["kind"] in ("lower", "upper")
