import json
import shutil
from importlib import resources

import pytest

from equiquot.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def as_json(text):
    data = json.loads(text)
    assert all(v["citations"] for v in data["verdicts"])
    return data


def test_zeta_partition_numbers(capsys):
    code, out, _ = run(capsys, "zeta", "--x", "1", "--degree", "6")
    assert code == 0
    assert as_json(out)["data"]["coefficients"] == [1, 1, 2, 3, 5, 7, 11]


def test_group_classes(capsys):
    code, out, _ = run(capsys, "group", "--preset", "sym", "--n", "4", "--classes")
    data = as_json(out)
    assert code == 0 and len(data["data"]["classes"]) == 5
    assert sorted(c["size"] for c in data["data"]["classes"]) == [1, 3, 6, 6, 8]


def test_group_centralizer_reports_defect(capsys):
    code, out, _ = run(capsys, "group", "--preset", "sym", "--n", "4", "--centralizer", "2,2")
    data = as_json(out)
    assert code == 1
    failed = [v for v in data["verdicts"] if not v["passed"]]
    assert len(failed) == 1 and failed[0]["known_defect"]


def test_adequacy_heisenberg(capsys):
    code, out, _ = run(capsys, "adequacy", "--preset", "heisenberg", "--n", "2", "--regular-gset")
    data = as_json(out)
    assert code == 0
    assert data["data"]["s0"]["in_s0"]["verdict"] is False
    assert data["data"]["adequacy"]["adequate"]["verdict"] is False


def test_adequacy_wreath_and_gset(capsys, tmp_path):
    code, out, _ = run(capsys, "adequacy", "--preset", "wreath", "--t", "cyclic:2", "--n", "2")
    assert code == 0 and as_json(out)["data"]["s0"]["in_s0"]["verdict"] is True
    gset = {"group": "cyclic:2", "points": ["a", "b"], "action": {"0": ["b", "a"]}}
    path = tmp_path / "x.json"
    path.write_text(json.dumps(gset))
    code, out, _ = run(capsys, "gset", "--gset", str(path))
    assert code == 0 and as_json(out)["data"]["extended_quotient"]["size"] == 1


def test_verify_commands(capsys):
    assert run(capsys, "verify", "xi", "--preset", "s3ext")[0] == 0
    assert run(capsys, "verify", "heisenberg", "--n", "2")[0] == 0
    assert run(capsys, "chartable", "--group", "alt:4")[0] == 0


def test_torsion_audit(capsys):
    code, out, _ = run(capsys, "torsion", "audit", "--base", "enriques_x_curve_g1", "--d", "2",
                       "--d3", "d3_enriques_x_curve_g1")
    assert code == 0 and as_json(out)["data"]["audit"]["tau_E4_odd"] == 128
    code, _, _ = run(capsys, "torsion", "audit", "--base", "enriques_x_curve_g1", "--d", "2",
                     "--d3", "d3_zero_enriques_x_curve_g1")
    assert code == 1
    code, out, _ = run(capsys, "torsion", "snf", "--matrix", "[[2, 4], [6, 8]]")
    assert code == 0 and as_json(out)["data"]["snf"]["diagonal"] == [2, 4]


@pytest.mark.parametrize("argv, code", [
    (["group", "--preset", "bogus"], 2),
    (["group", "--preset", "sym", "--n", "12"], 3),
    (["zeta", "--x", "notanumber"], 2),
    (["frobnicate"], 2),
    (["torsion", "audit", "--base", "missing_fixture", "--d", "2", "--d3", "missing"], 2),
    (["zeta", "--degree", "500"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_budget_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("EQUIQUOT_MAX_GROUP_ORDER", "10")
    assert run(capsys, "group", "--preset", "sym", "--n", "4")[0] == 3


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"command": "zeta", "inputs": {"x": 2, "degree": 4}, "output": "text"}))
    code, out, _ = run(capsys, "zeta", "--config", str(cfg))
    assert code == 0 and out.startswith("equiquot zeta")
    cfg.write_text(json.dumps({"command": "zeta", "bogus": 1}))
    assert run(capsys, "zeta", "--config", str(cfg))[0] == 2


def test_text_output(capsys):
    code, out, _ = run(capsys, "zeta", "--x", "2", "--output", "text")
    assert code == 0 and "[PASS]" in out and "cites:" in out


def test_corpus_filter_and_determinism(capsys):
    code, a, _ = run(capsys, "corpus", "--filter", "zeta", "--seed", "3")
    code2, b, _ = run(capsys, "corpus", "--filter", "zeta", "--seed", "3")
    assert code == code2 == 0 and a == b
    names = {t["scenario"] for t in json.loads(a)["data"]["table"]}
    assert names == {"c04_galkin_shinder", "c06_sigma_n_adequacy"}
    assert run(capsys, "corpus", "--filter", "no-such-thing")[0] == 2


def test_corrupted_fixture_exit_code(capsys, tmp_path):
    src = resources.files("equiquot").joinpath("data")
    for p in src.iterdir():
        if p.name.endswith(".json"):
            shutil.copy(str(p), tmp_path / p.name)
    (tmp_path / "corpus.json").write_text("{ not json")
    assert run(capsys, "corpus", "--fixtures", str(tmp_path), "--filter", "zeta")[0] == 2
    (tmp_path / "corpus.json").write_text("{}")
    assert run(capsys, "corpus", "--fixtures", str(tmp_path), "--filter", "zeta")[0] == 2
