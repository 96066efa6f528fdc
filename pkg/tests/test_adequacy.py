import pytest

from equiquot.adequacy import (
    components_free_case,
    condition_iii,
    extension_exists,
    in_s0,
    is_s0_adequate,
    restriction_matrix,
    theta_vanishes,
)
from equiquot.errors import HypothesesViolated
from equiquot.gset import regular_gset
from equiquot.presets import resolve_gset, resolve_sequence


@pytest.mark.parametrize("ref, expected", [
    ("abelian:2", True), ("abelian:3", True), ("c3c2", True), ("s3ext", True),
    ("wreath:cyclic:2:2", True), ("wreath:cyclic:3:2", True), ("exS0:2", True),
    ("heisenberg:2", False), ("heisenberg:3", False), ("a4cover", False),
])
def test_theta_verdicts(ref, expected):
    seq = resolve_sequence(ref)
    assert theta_vanishes(seq) is expected


def test_extension_witness_restricts_to_the_sum():
    seq = resolve_sequence("s3ext")
    ok, witness = extension_exists(seq)
    assert ok
    M = restriction_matrix(seq)
    # the 0/1 witness selects rows that sum to every irreducible of N once
    assert set(witness) <= {0, 1}
    assert [sum(m * M[i][j] for i, m in enumerate(witness)) for j in range(len(M[0]))] == [1] * len(M[0])


def test_exs0_condition_iii_multisets():
    c3 = condition_iii(resolve_sequence("exS0:2"))
    assert not c3.holds
    assert c3.by_index("classes", "points") == {1: 2, 2: 6}
    assert c3.by_index("characters", "orbits") == {1: 4, 4: 1}
    r = in_s0(resolve_sequence("exS0:2"))
    assert r.cond_ii and not r.in_s0


@pytest.mark.parametrize("ref", ["abelian:2", "c3c2", "s3ext", "wreath:cyclic:2:2"])
def test_condition_iii_holds_for_examples(ref):
    assert condition_iii(resolve_sequence(ref)).holds


def test_adequacy_of_power_sets():
    assert is_s0_adequate(resolve_gset("power:abc:3")).adequate
    assert not is_s0_adequate(resolve_gset("through:heisenberg:2")).adequate


def test_free_case_components():
    seq = resolve_sequence("c3c2")
    n, sizes = components_free_case(seq, regular_gset(seq.H))
    assert n == len(sizes) and n == 2
    with pytest.raises(HypothesesViolated):
        components_free_case(resolve_sequence("heisenberg:2"), regular_gset(resolve_sequence("heisenberg:2").H))


def test_report_json_carries_citations():
    data = in_s0(resolve_sequence("heisenberg:2")).to_json()
    assert data["in_s0"]["verdict"] is False
    for k in ("cond_i", "cond_iii", "in_s0"):
        assert data[k]["citation"]
    assert data["cond_ii"]["citations"]
