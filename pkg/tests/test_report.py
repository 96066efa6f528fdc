import json

import pytest
from hypothesis import given, strategies as st

from equiquot.errors import InvalidInput
from equiquot.report import Report, RunConfig, Verdict


def test_verdict_needs_citation():
    with pytest.raises(InvalidInput):
        Verdict("x", True, [])


def test_run_config_validation(monkeypatch):
    with pytest.raises(InvalidInput):
        RunConfig("zeta", max_group_order=0)
    with pytest.raises(InvalidInput):
        RunConfig.from_dict({"command": "zeta", "colour": "red"})
    monkeypatch.setenv("EQUIQUOT_MAX_GROUP_ORDER", "77")
    assert RunConfig.from_env("group").max_group_order == 77
    monkeypatch.setenv("EQUIQUOT_MAX_GROUP_ORDER", "lots")
    with pytest.raises(InvalidInput):
        RunConfig.from_env("group")
    cfg = RunConfig("zeta", {"x": 1})
    assert RunConfig.from_dict(cfg.to_json()) == cfg


names = st.text(st.characters(min_codepoint=32, max_codepoint=0x2200), min_size=1, max_size=12)


@given(st.lists(st.tuples(names, st.booleans(), st.lists(names, min_size=1, max_size=2)), max_size=5),
       st.dictionaries(names, st.integers() | names | st.lists(st.integers(), max_size=3), max_size=4))
def test_report_roundtrip(verdicts, data):
    rep = Report({"command": "demo"})
    for n, ok, cites in verdicts:
        rep.add(n, ok, cites)
    rep.data.update(data)
    text = rep.dumps()
    again = Report.from_json(json.loads(text))
    assert again.dumps() == text
    assert json.loads(text)["all_pass"] == all(ok for _, ok, _ in verdicts)


def test_render_text_marks_defects():
    rep = Report({"command": "demo"})
    rep.add("claim", False, "a statement", known_defect="wrong as stated")
    text = rep.render_text()
    assert "[FAIL] claim" in text and "known defect: wrong as stated" in text and text.endswith("FAIL")
