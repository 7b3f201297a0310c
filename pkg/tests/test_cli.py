"""End-to-end tests of the command line interface."""

from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from slope_atlas import cli
from slope_atlas.slopes import parse_slope
from slope_atlas.whitehead import classify, plot_class


def run_cli(*argv):
    return cli.main(list(argv))


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def test_classify_json_output(capsys):
    assert run_cli("classify", "1", "1") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["slope"] == ["1", "1"]
    assert doc["lspace"] == "yes" and doc["foliation"] == "no"
    assert doc["left_orderable"] == "no"


def test_classify_negative_fraction_positional(capsys):
    assert run_cli("classify", "-7/2", "inf") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["slope"] == ["-7/2", "inf"]
    assert doc["lspace"] == "yes"
    assert "lens-space-filling" in doc["citations"]


def test_classify_orderable_and_reducible_cases(capsys):
    assert run_cli("classify", "-1", "7/3") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["left_orderable"] == "yes"
    assert run_cli("classify", "0/1", "5") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["qhs"] is False


def test_classify_writes_out_file(tmp_path, capsys):
    out = tmp_path / "verdict.json"
    assert run_cli("classify", "1/2", "1/2", "--out", str(out)) == 0
    assert capsys.readouterr().out == ""
    doc = json.loads(out.read_text())
    assert doc["euler_zero"] == "yes" and doc["left_orderable"] == "yes"


def test_classify_bad_token_names_it(capsys):
    assert run_cli("classify", "abc", "1") == 2
    err = capsys.readouterr().err
    assert "abc" in err


def test_usage_errors_exit_two(capsys):
    assert run_cli("classify", "1") == 2
    assert run_cli("nonsense") == 2
    capsys.readouterr()


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "slope_atlas.cli", "classify", "1", "1"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["lspace"] == "yes"


# ---------------------------------------------------------------------------
# monodromy
# ---------------------------------------------------------------------------

def test_monodromy_text_report(capsys):
    assert run_cli("monodromy", "1; 5, 10, -5") == 0
    out = capsys.readouterr().out
    assert "monodromy: 1; 5, 10, -5" in out
    assert "labels: p+ n n" in out
    assert "I: (inf,1) x (inf,0) x (0,inf)" in out
    assert "J: (inf,1) x (0,inf) x (inf,0)" in out
    assert "orientation 1: -> -> <-  (2:n_in 3:n_out)" in out
    assert "orientation 2: <- <- ->  (2:n_out 3:n_in)" in out
    assert "foliation region:" in out
    assert "(inf,1) x (inf,1) x (inf,1)" in out


def test_monodromy_json_report(capsys):
    assert run_cli("monodromy", "1; 1, -1", "--json") == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["labels"] == ["n", "n"]
    assert doc["intervals"]["I"] == ["(inf,0)", "(0,inf)"]
    assert doc["intervals"]["J"] == ["(0,inf)", "(inf,0)"]
    assert len(doc["orientations"]) == 2
    assert doc["orientations"][0]["n_types"] == {"1": "n_in", "2": "n_out"}
    assert len(doc["foliation_region"]["boxes"]) == 3


def test_monodromy_leading_dash_word(capsys):
    assert run_cli("monodromy", "--", "-1; 1, 1, 1") == 0
    out = capsys.readouterr().out
    assert "labels: p+ p+ p+" in out
    assert "(-1,inf) x (-1,inf) x (-1,inf)" in out
    assert "(inf,1) x (inf,1) x (inf,1)" in out


def test_monodromy_rejects_zero_exponent(capsys):
    assert run_cli("monodromy", "1; 0, 2") == 2
    assert "error" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# region
# ---------------------------------------------------------------------------

def test_region_text(capsys):
    assert run_cli("region") == 0
    out = capsys.readouterr().out
    assert "L-space region (b1=0, b2=0):" in out
    assert "[1,inf] x [1,inf]" in out
    assert "{inf} x Q*" in out and "Q* x {inf}" in out
    assert "taut-foliation region:" in out
    assert "(0,inf) x (-1,1)" in out


def test_region_json_with_framings(capsys):
    assert run_cli("region", "--b1", "1", "--b2", "2", "--json") == 0
    doc = json.loads(capsys.readouterr().out)
    box = doc["lspace_region"]["boxes"][0]
    assert box[0]["start"] == "3" and box[1]["start"] == "5"
    assert doc["lspace_region"]["lines"] == [0, 1]
    assert len(doc["foliation_region"]["boxes"]) == 5


def test_region_rejects_negative_framing(capsys):
    assert run_cli("region", "--b1", "-1") == 2
    assert "nonnegative" in capsys.readouterr().err


# ---------------------------------------------------------------------------
# batch
# ---------------------------------------------------------------------------

def _write_csv(path, text):
    path.write_text(text)
    return str(path)


def test_batch_frozen_example(tmp_path, capsys):
    src = _write_csv(tmp_path / "in.csv",
                     "id,s1,s2\n"
                     "a,1,1\n"
                     "b,-1,7/3\n"
                     "c,2,3/2\n"
                     "d,1/2,1/2\n")
    out = tmp_path / "out.csv"
    assert run_cli("batch", src, "--out", str(out)) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == ("id,s1,s2,qhs,h1,h2,lspace,foliation,"
                        "euler_zero,left_orderable")
    assert lines[1] == "a,1,1,true,1,1,yes,no,na,no"
    assert lines[2] == "b,-1,7/3,true,1,7,no,yes,no,yes"
    assert lines[3] == "c,2,3/2,true,2,3,yes,no,na,no"
    assert lines[4] == "d,1/2,1/2,true,1,1,no,yes,yes,yes"
    summary = capsys.readouterr().out
    assert "rows: 4" in summary
    assert "lspace: 2" in summary and "foliation: 2" in summary
    assert "non-qhs: 0" in summary
    assert "left-orderable yes: 2" in summary
    assert "left-orderable no: 2" in summary
    assert "left-orderable unknown: 0" in summary


def test_batch_with_labels(tmp_path, capsys):
    src = _write_csv(tmp_path / "in.csv",
                     "id,s1,s2,label\n"
                     "a,1,1,no\n"
                     "b,-1,7/3,yes\n"
                     "c,3/2,7/5,no\n")
    out = tmp_path / "out.csv"
    assert run_cli("batch", src, "--out", str(out)) == 0
    lines = out.read_text().splitlines()
    assert lines[0].endswith("left_orderable,label,agrees")
    assert lines[1].endswith("no,no,true")
    assert lines[3].endswith("unknown,no,false")
    assert "label agreement: 2/3" in capsys.readouterr().out


def test_batch_bad_rows_reported_with_line_numbers(tmp_path, capsys):
    src = _write_csv(tmp_path / "in.csv",
                     "id,s1,s2\n"
                     "a,1,1\n"
                     "b,xx,2\n"
                     "c,1,2,3\n"
                     "d,inf,5\n")
    out = tmp_path / "out.csv"
    assert run_cli("batch", src, "--out", str(out)) == 2
    err = capsys.readouterr().err
    assert ":3:" in err and ":4:" in err
    rows = out.read_text().splitlines()
    assert len(rows) == 3          # header plus the two good rows
    assert rows[1].startswith("a,") and rows[2].startswith("d,")


def test_batch_header_only_file_counts_zero(tmp_path, capsys):
    src = _write_csv(tmp_path / "none.csv", "id,s1,s2\n")
    out = tmp_path / "o.csv"
    assert run_cli("batch", src, "--out", str(out)) == 0
    assert "rows: 0" in capsys.readouterr().out
    assert out.read_text().splitlines() == [
        "id,s1,s2,qhs,h1,h2,lspace,foliation,euler_zero,left_orderable"]


def test_batch_bad_header_and_empty_file(tmp_path, capsys):
    bad = _write_csv(tmp_path / "bad.csv", "ident,s1,s2\na,1,1\n")
    assert run_cli("batch", bad, "--out", str(tmp_path / "o.csv")) == 2
    assert "expected" in capsys.readouterr().err
    empty = _write_csv(tmp_path / "empty.csv", "")
    assert run_cli("batch", empty, "--out", str(tmp_path / "o.csv")) == 2
    assert "empty" in capsys.readouterr().err


def test_batch_thread_env(tmp_path, capsys, monkeypatch):
    src = _write_csv(tmp_path / "in.csv", "id,s1,s2\na,1,1\n")
    out = tmp_path / "out.csv"
    monkeypatch.setenv("SLOPE_ATLAS_THREADS", "1")
    assert run_cli("batch", src, "--out", str(out)) == 0
    assert "warning" not in capsys.readouterr().err
    monkeypatch.setenv("SLOPE_ATLAS_THREADS", "zero")
    assert run_cli("batch", src, "--out", str(out)) == 0
    assert "SLOPE_ATLAS_THREADS" in capsys.readouterr().err
    monkeypatch.setenv("SLOPE_ATLAS_THREADS", "-3")
    assert run_cli("batch", src, "--out", str(out)) == 0
    assert "warning" in capsys.readouterr().err


def test_batch_round_trip_consistency(tmp_path, capsys):
    slopes = cli.grid_slopes((1, 3, -2, 2))
    rows = ["id,s1,s2"]
    idx = 0
    for s1 in slopes:
        for s2 in slopes:
            rows.append(f"r{idx},{s1},{s2}")
            idx += 1
    src = _write_csv(tmp_path / "in.csv", "\n".join(rows) + "\n")
    out = tmp_path / "out.csv"
    assert run_cli("batch", src, "--out", str(out)) == 0
    capsys.readouterr()
    for line in out.read_text().splitlines()[1:]:
        parts = line.split(",")
        v = classify(parse_slope(parts[1]), parse_slope(parts[2]))
        assert parts[3] == ("true" if v.is_qhs else "false")
        assert parts[4:10] == [str(v.homology[0]), str(v.homology[1]),
                               v.lspace.value, v.taut_foliation.value,
                               v.euler_vanishing.value,
                               v.left_orderable.value]


# ---------------------------------------------------------------------------
# plot
# ---------------------------------------------------------------------------

def test_plot_tsv_matches_classifier(capsys):
    assert run_cli("plot", "--bounds", "1:2,1:2") == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "s1\ts2\tclass"
    assert len(lines) == 1 + 9     # three slopes: 1/2, 1, 2
    for line in lines[1:]:
        a, b, cls = line.split("\t")
        assert cls == plot_class(classify(parse_slope(a), parse_slope(b)))


def test_plot_tsv_includes_infinity(capsys):
    assert run_cli("plot", "--bounds", "0:1,0:1") == 0
    lines = capsys.readouterr().out.splitlines()
    slopes = {line.split("\t")[0] for line in lines[1:]}
    assert slopes == {"0", "1", "inf"}
    assert lines[-1].startswith("inf\tinf\t")


def test_plot_grid_order_and_max_den():
    slopes = cli.grid_slopes((1, 3, -2, 2))
    assert [str(s) for s in slopes] == ["-3", "-2", "-3/2", "-1", "-1/2",
                                        "1/2", "1", "3/2", "2", "3", "inf"]
    assert [str(s) for s in cli.grid_slopes((1, 3, -2, 2), max_den=1)] == \
        ["-3", "-2", "-1", "1", "2", "3", "inf"]


def test_plot_svg_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert run_cli("plot", "--bounds", "1:2,1:2", "--format", "svg",
                   "--out", str(a)) == 0
    assert run_cli("plot", "--bounds", "1:2,1:2", "--format", "svg",
                   "--out", str(b)) == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.startswith("<svg ") or text.startswith('<svg')
    assert 'width="640"' in text and text.rstrip().endswith("</svg>")


def test_plot_svg_places_lspace_point_in_red(tmp_path):
    out = tmp_path / "plot.svg"
    assert run_cli("plot", "--bounds", "1:2,1:2", "--format", "svg",
                   "--out", str(out)) == 0
    text = out.read_text()
    lo, hi = Fraction(1, 2), Fraction(2)
    cx = cli.svg_coord(Fraction(1), lo, hi)
    cy = cli.svg_coord(Fraction(1), lo, hi, flip=True)
    assert f'<circle cx="{cx}" cy="{cy}" r="3" fill="red"/>' in text
    assert 'fill="blue"' in text


def test_plot_svg_places_foliation_point_in_blue(tmp_path):
    out = tmp_path / "plot.svg"
    assert run_cli("plot", "--bounds", "3:5,-1:6", "--format", "svg",
                   "--out", str(out)) == 0
    text = out.read_text()
    finite = [Fraction(s.num, s.den)
              for s in cli.grid_slopes(cli.parse_bounds("3:5,-1:6"), None)
              if s.is_finite()]
    lo, hi = min(finite), max(finite)
    cx = cli.svg_coord(Fraction(-3), lo, hi)
    cy = cli.svg_coord(Fraction(5, 6), lo, hi, flip=True)
    assert f'<circle cx="{cx}" cy="{cy}" r="3" fill="blue"/>' in text


def test_plot_rejects_bad_bounds(capsys):
    assert run_cli("plot", "--bounds", "1:2") == 2
    assert run_cli("plot", "--bounds", "2:1,0:1") == 2
    assert run_cli("plot", "--bounds", "1:2,1:2", "--max-den", "0") == 2
    capsys.readouterr()


def test_bounds_parser():
    assert cli.parse_bounds("-3:3,-2:2") == (-3, 3, -2, 2)
    with pytest.raises(ValueError):
        cli.parse_bounds("a:b,c:d")
