import json

import pytest

from equiquot.corpus import SCENARIOS, load_fixtures, run_corpus
from equiquot.errors import InvalidInput


def test_registry_is_complete_and_ordered():
    names = [s.name for s in SCENARIOS]
    assert names == sorted(names) and len(names) == 10
    assert all(s.tags for s in SCENARIOS)


def test_filter_by_tag_and_name():
    rep = run_corpus(filter="skew_algebra")
    assert {t["scenario"] for t in rep.data["table"]} == {"c07_xi_isomorphism", "c08_heisenberg_lemma"}
    assert rep.passed
    assert [t["scenario"] for t in run_corpus(filter="c05").data["table"]] == ["c05_theta_verdicts"]


def test_known_defect_is_the_only_failure():
    rep = run_corpus(filter="group")
    failed = [v for v in rep.verdicts if not v.passed]
    assert len(failed) == 1 and failed[0].known_defect
    assert "direct product" in failed[0].name


def test_every_verdict_cites_a_statement():
    rep = run_corpus(filter="torsion")
    assert all(v.citations for v in rep.verdicts)
    assert json.loads(rep.dumps())["all_pass"] is True


def test_fixture_errors(tmp_path):
    with pytest.raises(InvalidInput):
        load_fixtures(tmp_path / "absent")
    with pytest.raises(InvalidInput):
        load_fixtures(tmp_path)  # empty directory has no corpus.json
    (tmp_path / "corpus.json").write_text("[1, 2")
    with pytest.raises(InvalidInput):
        load_fixtures(tmp_path)
