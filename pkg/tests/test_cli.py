import json

import pytest

from opensurf.automaton import parse
from opensurf.cli import main
from opensurf.pipeline import fixture_text


@pytest.fixture
def files(tmp_path):
    def write(name):
        p = tmp_path / f"{name}.tap"
        p.write_text(fixture_text(name))
        return str(p)
    return write


def test_check_homeomorphic(files, capsys):
    assert main(["check", files("plane_v1"), files("plane_v2")]) == 0
    assert capsys.readouterr().out.startswith("homeomorphic")


def test_check_not_homeomorphic_json(files, capsys):
    assert main(["check", files("plane_v1"), files("cylinder"), "--json"]) == 1
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == 1 and data["homeomorphic"] is False
    assert data["right"]["reduced_code"] == "s0(o()o())"


def test_check_missing_file(tmp_path, capsys):
    assert main(["check", str(tmp_path / "nope.tap"), str(tmp_path / "nope.tap")]) == 2
    assert "error" in capsys.readouterr().err


def test_check_invalid_automaton(tmp_path, files, capsys):
    bad = tmp_path / "bad.tap"
    bad.write_text("automaton v1\nblock 0 signature orientable=true genus=0 boundaries=1\n")
    assert main(["check", str(bad), files("plane_v1")]) == 2
    assert "MissingArrow" in capsys.readouterr().err


def test_max_unfold(files, capsys):
    assert main(["--max-unfold", "1", "check", files("plane_v1"), files("plane_v1")]) == 2
    assert main(["check", "--max-unfold", "5", files("plane_v1"), files("plane_v1")]) == 0


def test_invariants_json(files, capsys):
    assert main(["invariants", files("loch_ness"), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["genus_or_crosscaps"] == "inf" and data["reduced_code"] == "sinf(oh())"


def test_reduce_writes_dot(files, tmp_path, capsys):
    out = tmp_path / "dots"
    assert main(["reduce", files("cantor_tree"), "--dot", str(out), "--trace"]) == 0
    names = sorted(p.name for p in out.iterdir())
    assert {"graph.dot", "propagated.dot", "unfolded.dot", "admissible.dot", "reduced.dot"} <= set(names)
    assert capsys.readouterr().out.strip() == "s0(t())"


def test_reduce_trace_files(files, tmp_path):
    out = tmp_path / "dots"
    assert main(["reduce", files("plane_v2"), "--dot", str(out), "--trace"]) == 0
    moves = sorted(p.name for p in out.glob("move_*.dot"))
    assert all(n.startswith("move_") for n in moves)


def test_develop(files, capsys):
    assert main(["develop", files("cantor_tree"), "-s", "3", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["boundary_count"] == 8 and data["euler_characteristic"] == -6


def test_develop_cap(files):
    assert main(["develop", files("plane_v1"), "-s", "50", "--max-stage", "10"]) == 2


def test_gen_appendix_stdout(capsys):
    assert main(["gen", "appendix", "--bits", "101"]) == 0
    assert parse(capsys.readouterr().out).p >= 1


def test_gen_appendix_file(tmp_path, capsys):
    out = tmp_path / "a.tap"
    assert main(["gen", "appendix", "--bits", "11", "-o", str(out)]) == 0
    assert main(["invariants", str(out)]) == 0
    assert "s0(t(t(o())t(o(o()))))" in capsys.readouterr().out


def test_gen_appendix_bad_bits():
    assert main(["gen", "appendix", "--bits", "12"]) == 2


def test_oracle_cb(files, capsys):
    assert main(["oracle", "cb", files("plane_v1")]) == 0
    assert "rank=0 multiplicity=1" in capsys.readouterr().out


def test_oracle_cb_rejects_handles(files):
    assert main(["oracle", "cb", files("loch_ness")]) == 2


def test_oracle_confluence(files, capsys):
    assert main(["oracle", "confluence", files("cantor_tree"), "--trials", "20", "--seed", "3"]) == 0
    assert capsys.readouterr().out.startswith("confluent")
