import json
import os

import pytest

from diracshell import report


@pytest.fixture(scope="module")
def rendered(tmp_path_factory):
    out = tmp_path_factory.mktemp("report")
    summary = report.render_report(str(out), m=1.0, resolutions=(12, 16),
                                   grid_points=41, jmax2=7)
    return out, summary


def test_files_written(rendered):
    out, _ = rendered
    for name in ("eigencurves.png", "eigencurves.csv", "refinement.png",
                 "refinement.csv", "witness.png", "witness.csv", "summary.json"):
        path = out / name
        assert path.exists()
        assert path.stat().st_size > 0


def test_summary_contents(rendered):
    out, summary = rendered
    on_disk = json.loads((out / "summary.json").read_text())
    assert on_disk == summary
    assert on_disk["intervals"]["upper_sign"][1] == pytest.approx(8.47213595499958)
    ref = summary["refinement"]
    assert [r["n_theta"] for r in ref] == [12, 16]
    assert ref[1]["jump_residual"] < ref[0]["jump_residual"]
    lo, hi = summary["witness_range"]
    assert 0.4 < lo <= hi < 0.6


def test_curve_csv_has_both_signs(rendered):
    out, _ = rendered
    lines = (out / "eigencurves.csv").read_text().strip().split("\n")
    assert lines[0] == "sign,a,lambda,residual"
    signs = {ln.split(",")[0] for ln in lines[1:]}
    assert signs == {"1", "-1"}


def test_pngs_look_like_pngs(rendered):
    out, _ = rendered
    for name in ("eigencurves.png", "refinement.png", "witness.png"):
        with open(out / name, "rb") as fh:
            assert fh.read(8) == b"\x89PNG\r\n\x1a\n"
