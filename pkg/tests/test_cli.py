import itertools
import json
import os
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from superbbw import in_omega_w, root_datum
from superbbw.cli import EX_DATAERR, EX_DOMAIN, EX_UNSUPPORTED, main, run
from superbbw.root_data import act, weyl_elements
from superbbw.svg import CELL

GOLDEN = Path(__file__).parent / "golden"
REGEN = os.environ.get("SUPERBBW_REGEN") == "1"

CASES = {
    "datum_q3.txt": ["datum", "--rank", "3"],
    "datum_glnn2.json": ["datum", "--type", "glnn", "--rank", "2", "--out", "json"],
    "region_q3_s1.txt": ["region", "--type", "q", "--rank", "3", "--w", "s1", "--inequalities"],
    "region_q3_all.txt": ["region", "--rank", "3"],
    "region_q2_all.json": ["region", "--out", "json"],
    "region_q3_vd.json": ["region", "--rank", "3", "--very-dominant", "--out", "json"],
    "region_q2_generic.txt": ["region", "--weight", "-2,1"],
    "poincare_q3.txt": ["poincare", "--type", "q", "--rank", "3"],
    "poincare_glnn2.json": ["poincare", "--type", "glnn", "--rank", "2", "--out", "json"],
    "character_q2.txt": ["character", "--type", "q", "--rank", "2", "--weight", "-2,1"],
    "character_q2.json": ["character", "--weight", "-2,1", "--out", "json"],
    "euler_glnn2.txt": ["euler", "--type", "glnn", "--weight", "0,0,0,0"],
    "q2_30.txt": ["q2", "--weight", "3,0"],
    "q2_2m2.json": ["q2", "--weight", "2,-2", "--out", "json"],
    "q2_21_noflags.txt": ["q2", "--weight", "2,1", "--no-edge-flags"],
    "socle_q3_zero.txt": ["socle", "--rank", "3", "--weight", "0,0,0"],
    "socle_q2.json": ["socle", "--weight", "-2,1", "--out", "json"],
    "classify_q2.json": ["classify", "--weight", "-1,2", "--out", "json"],
    "scan_q2.txt": ["scan", "--box", "2"],
    "svg_q3_box4.svg": ["svg", "--rank", "3", "--box", "4"],
}


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, err = run(CASES[name])
    assert code == 0, err
    path = GOLDEN / name
    if REGEN:
        path.write_text(out, encoding="utf-8")
    assert out == path.read_text(encoding="utf-8")
    if name.endswith(".json"):
        json.loads(out)


def test_documented_outputs():
    assert run(["poincare", "--type", "q", "--rank", "3"])[1] == "1 + 2t + 2t^2 + t^3\n"
    code, out, _ = run(["character", "--type", "q", "--rank", "2", "--weight", "-2,1"])
    assert code == 0 and "H^1:" in out and "[dim 12]" in out
    assert run(["region", "--rank", "3", "--w", "s1", "--inequalities"])[1] == "α1 ≥ 0, α2 ≥ 3\n"


def test_glnn_note():
    _, out, _ = run(["character", "--type", "glnn", "--weight", "4,0,2,0"])
    assert "convention-dependent" in out


@pytest.mark.parametrize("argv,code", [
    (["character", "--weight", "1,x"], EX_DATAERR),
    (["character", "--weight", "1,0,0"], EX_DATAERR),
    (["character"], EX_DATAERR),
    (["region", "--rank", "3", "--w", "s7", "--inequalities"], EX_DATAERR),
    (["scan", "--box", "-1"], EX_DATAERR),
    (["character", "--weight", "0,0"], EX_DOMAIN),
    (["q2", "--weight", "0,1"], EX_DOMAIN),
    (["svg", "--rank", "2"], EX_UNSUPPORTED),
    (["region", "--out", "svg"], EX_UNSUPPORTED),
    (["svg", "--rank", "3", "--out", "json"], EX_UNSUPPORTED),
    (["q2", "--rank", "3", "--weight", "3,0,0"], EX_UNSUPPORTED),
    (["region", "--type", "glnn", "--w", "1", "--inequalities"], EX_UNSUPPORTED),
    (["datum", "--type", "osp"], EX_UNSUPPORTED),
])
def test_exit_codes(argv, code):
    got, out, err = run(argv)
    assert got == code
    assert out == "" and err.startswith("superbbw: ")


def test_deterministic():
    argv = ["scan", "--rank", "3", "--box", "1", "--out", "json"]
    assert run(argv) == run(argv)


def test_scan_parallel_matches_serial(monkeypatch):
    argv = ["scan", "--rank", "3", "--box", "2"]
    serial = run(argv)
    monkeypatch.setenv("SUPERBBW_THREADS", "2")
    assert run(argv) == serial


def test_main_writes_streams(capsys):
    assert main(["poincare"]) == 0
    assert capsys.readouterr().out == "1 + t\n"
    assert main(["character", "--weight", "0,0"]) == EX_DOMAIN
    assert "not generic" in capsys.readouterr().err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "superbbw", "poincare", "--rank", "3"],
                          capture_output=True, text=True, encoding="utf-8")
    assert proc.returncode == 0
    assert proc.stdout == "1 + 2t + 2t^2 + t^3\n"


# --- SVG ------------------------------------------------------------------------

def _expected_generic(a, b):
    """Independent route: the W-orbit of the weight meets Omega(1)."""
    d = root_datum("q", 3)
    mu = (a + b, b, 0)
    return any(in_omega_w(d, act(w, mu), d.identity()) for w in weyl_elements(d))


def _raster(svg_text, box):
    root = ET.fromstring(svg_text)
    ns = "{http://www.w3.org/2000/svg}"
    grid = {}
    for rect in root.iter(ns + "rect"):
        cls = rect.get("class")
        x = float(rect.get("x")) + float(rect.get("width")) / 2
        y = float(rect.get("y")) + float(rect.get("height")) / 2
        # invert the layout: column a, row b
        a = round(x / CELL - 1.5 * box)
        b = round(box + 1 - y / CELL)
        assert (a, b) == (int(rect.get("data-a")), int(rect.get("data-b")))
        grid[(a, b)] = cls
    return grid


def test_svg_rasterizes_to_generic_region():
    box = 9
    code, out, _ = run(["svg", "--rank", "3", "--box", str(box)])
    assert code == 0
    grid = _raster(out, box)
    assert len(grid) == (2 * box + 1) ** 2
    for a, b in itertools.product(range(-box, box + 1), repeat=2):
        expected = "generic" if _expected_generic(a, b) else "nongeneric"
        assert grid[(a, b)] == expected, (a, b)


def test_svg_apexes_and_hex():
    _, out, _ = run(["svg", "--rank", "3", "--box", "5"])
    root = ET.fromstring(out)
    apex = {(int(c.get("data-a")), int(c.get("data-b")))
            for c in root.iter("{http://www.w3.org/2000/svg}circle") if c.get("class") == "apex"}
    assert apex == {(2, 2), (-2, -2), (2, -4), (4, -2), (-4, 2), (-2, 4)}
    _, hex_out, _ = run(["svg", "--rank", "3", "--box", "3", "--hex"])
    cells = [c for c in ET.fromstring(hex_out).iter("{http://www.w3.org/2000/svg}circle")
             if c.get("class") in ("generic", "nongeneric")]
    assert len(cells) == 49
