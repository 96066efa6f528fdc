import pytest

from equiquot.errors import BudgetExceeded, InvalidInput
from equiquot.presets import preset_ref, resolve_group, resolve_gset, resolve_sequence


@pytest.mark.parametrize("ref, order", [
    ("sym:4", 24), ("alt:5", 60), ("cyclic:7", 7), ("dihedral:5", 10), ("trivial", 1),
    ("heisenberg:3", 27), ("exS0:2", 32), ("a4cover", 288), ("wreath:cyclic:3:2", 18),
    ("partition:2,2,1", 8), ("abelian:3", 18),
])
def test_group_presets(ref, order):
    assert resolve_group(ref).order == order


def test_preset_dict_form():
    assert preset_ref({"preset": "wreath", "t": "cyclic:2", "n": 3}) == "wreath:cyclic:2:3"
    assert resolve_sequence({"preset": "heisenberg", "n": 2}).G.order == 8
    with pytest.raises(InvalidInput):
        preset_ref({"preset": "sym", "size": 3})


def test_budget_is_checked_before_building():
    with pytest.raises(BudgetExceeded):
        resolve_group("sym:12")
    with pytest.raises(BudgetExceeded):
        resolve_group("heisenberg:5", limit=100)


@pytest.mark.parametrize("ref", ["bogus", "sym", "sym:x", "wreath:cyclic:2", "heisenberg:1", "partition:0"])
def test_bad_references(ref):
    with pytest.raises(InvalidInput):
        resolve_group(ref)


def test_gset_references():
    assert len(resolve_gset("regular:sym:3").points) == 6
    assert len(resolve_gset("power:ab:3").points) == 8
    assert len(resolve_gset("through:heisenberg:2").points) == 4
    with pytest.raises(InvalidInput):
        resolve_gset("regular:")
    with pytest.raises(InvalidInput):
        resolve_gset("nonsense:1")
