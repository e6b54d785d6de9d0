import io
from pathlib import Path

import pytest

from chordmat import catalog
from chordmat.cli import EXIT_CAP, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(*argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def test_mchain_and_partition():
    code, text = run("mchain", DATA / "fan.graph")
    assert code == EXIT_OK
    assert text == "{} < {1} < {1,2,3} < {1,2,3,4,5} < {1,2,3,4,5,6,7}\n"
    code, text = run("mchain", DATA / "fan.graph", "--all")
    assert "{} < {4} < {3,4,5} < {1,2,3,4,5} < {1,2,3,4,5,6,7}" in text.splitlines()
    code, text = run("partition", DATA / "fan.graph")
    assert (code, text) == (EXIT_OK, "{1} | {2,3} | {4,5} | {6,7}\n")


def test_not_supersolvable_exits_one():
    code, text = run("mchain", DATA / "k33.graph", "--cocycle")
    assert (code, text) == (EXIT_NEGATIVE, "not supersolvable\n")
    assert run("partition", DATA / "c5.graph")[0] == EXIT_NEGATIVE
    assert run("sgraph", DATA / "c5.graph")[0] == EXIT_NEGATIVE


def test_analyze():
    code, text = run("analyze", DATA / "fano.gf2", "--format", "kv")
    assert code == EXIT_OK
    assert "supersolvable=true\n" in text and "chordal=true\n" in text
    code, text = run("analyze", DATA / "k33.graph", "--cocycle")
    assert "supersolvable:  no" in text and "chordal:        yes" in text


def test_analyze_violation_exit(monkeypatch):
    monkeypatch.setattr(catalog, "is_ell_chordal", lambda m, ell: False)
    assert run("analyze", DATA / "fano.gf2")[0] == EXIT_NEGATIVE


def test_circuits():
    code, text = run("circuits", DATA / "fan.graph")
    assert text.splitlines() == [
        "{1,2,3}", "{3,4,5}", "{5,6,7}", "{1,2,4,5}", "{3,4,6,7}", "{1,2,4,6,7}"
    ]


def test_sgraph_with_dot(tmp_path):
    dot = tmp_path / "s.dot"
    code, text = run("sgraph", DATA / "fan.graph", "--dot", dot)
    assert code == EXIT_OK
    assert "P1 P2\nP2 P3\nP3 P4\n" in text
    assert "P3 -- P4" in dot.read_text()


def test_chordal():
    code, text = run("chordal", DATA / "fan.graph", "--ell", 4)
    assert code == EXIT_OK and text.startswith("4-chordal: yes")
    code, text = run("chordal", DATA / "c5.graph")
    assert code == EXIT_NEGATIVE
    assert "circuit without chord: {1,2,3,4,5}" in text


def test_delta_closure():
    code, text = run("delta-closure", DATA / "fan.graph", "--ell", 2)
    assert code == EXIT_OK and "equals all circuits: yes (6/6)" in text
    code, text = run("delta-closure", DATA / "c5.graph", "--ell", 3)
    assert code == EXIT_NEGATIVE and "(0/1)" in text


def test_slabel_and_cone():
    assert run("slabel", DATA / "fan.graph") == (EXIT_OK, "v1 v2 v3 v4 v5\n")
    assert run("slabel", DATA / "c5.graph") == (EXIT_NEGATIVE, "not chordal\n")
    code, text = run("slabel", DATA / "fan.graph", "--count")
    assert code == EXIT_OK and int(text) > 0
    code, text = run("cone", DATA / "fan.graph", "--check", "--all")
    assert code == EXIT_OK and text.endswith(": ok\n")
    code, text = run("cone", DATA / "fan.graph")
    assert text.startswith("vertices v0 v1")
    assert run("cone", DATA / "c5.graph", "--check")[0] == EXIT_NEGATIVE


def test_catalog_summary():
    code, text = run("catalog", "--max-r", 3, "--max-n", 7, "--dedup", "linear", "--report")
    assert code == EXIT_OK
    assert "r3:1,2,3,4,5,6,7 n=7 r=3 chordal=1 supersolvable=1" in text
    assert "violations" in text


def test_input_errors(tmp_path):
    bad = tmp_path / "bad.gf2"
    bad.write_text("12\n")
    assert run("circuits", bad)[0] == EXIT_INPUT
    assert run("circuits", tmp_path / "nope.graph")[0] == EXIT_INPUT
    assert run("slabel", DATA / "fano.gf2")[0] == EXIT_INPUT
    assert run("chordal", DATA / "fano.gf2", "--ell", 1)[0] == EXIT_INPUT
    with pytest.raises(SystemExit):
        run("chordal")


def test_cap_exit():
    assert run("catalog", "--max-r", 5)[0] == EXIT_CAP
