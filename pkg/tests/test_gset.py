import random

import pytest
from hypothesis import given, strategies as st

from equiquot.corpus import random_gset
from equiquot.errors import ActionNotHomomorphism, InvalidInput, PointNotInSet
from equiquot.groups import Perm, cyclic, symmetric
from equiquot.gset import (
    GSet,
    coset_space,
    disjoint_union,
    extended_quotient,
    extended_quotient_class_count,
    gset_through,
    inertia,
    k0_class,
    orbifold_euler,
    power_gset,
    product_gset,
    regular_gset,
    stratify,
    trivial_gset,
)
from equiquot.presets import resolve_sequence


def burnside(X):
    return sum(len(X.fixed_points(g)) for g in X.group.elements) // X.group.order


def test_regular_and_trivial():
    G = symmetric(3)
    R = regular_gset(G)
    assert len(R.orbits()) == 1 and R.is_free()
    T = trivial_gset(G, ["a", "b"])
    assert len(T.orbits()) == 2
    assert T.stabilizer("a").order == 6


def test_power_set_orbits_are_multisets():
    X = power_gset(["a", "b", "c"], 3)
    assert len(X.points) == 27
    assert len(X.orbits()) == 10


def test_extended_quotient_of_free_set_is_quotient():
    # only the identity has fixed points on a free set
    for G in (symmetric(3), symmetric(4), cyclic(5)):
        R = regular_gset(G)
        assert len(extended_quotient(R)) == 1
        assert orbifold_euler(R) == 1


def test_extended_quotient_of_point_is_class_count():
    G = symmetric(4)
    assert extended_quotient_class_count(trivial_gset(G)) == 5
    # iterated inertia of a point counts commuting pairs up to conjugacy
    assert orbifold_euler(trivial_gset(G), 2) == 21


@given(st.integers(0, 10_000))
def test_inertia_equals_class_formula(seed):
    X = random_gset(random.Random(seed))
    assert len(inertia(X).quotient()) == extended_quotient_class_count(X)


@given(st.integers(0, 10_000))
def test_orbits_partition_and_burnside(seed):
    X = random_gset(random.Random(seed))
    orbs = X.orbits()
    assert sorted(p for o in orbs for p in o) == sorted(X.points)
    assert len(orbs) == burnside(X)
    for o in orbs:
        assert X.group.order == len(o) * X.stabilizer(o[0]).order


def test_disjoint_union_and_product_are_additive():
    G = symmetric(3)
    K = G.subgroup([Perm([1, 0, 2])])
    X, Y = coset_space(G, K), regular_gset(G)
    U = disjoint_union(X, Y)
    assert len(U.points) == 9
    assert extended_quotient_class_count(U) == extended_quotient_class_count(X) + extended_quotient_class_count(Y)
    assert len(product_gset(X, X).points) == 9


def test_k0_class_and_strata():
    G = symmetric(3)
    X = power_gset(["a", "b"], 3)
    strata = stratify(X)
    assert sum(s.induced_size for s in strata) == len(X.points)
    assert k0_class(X).total() == len(X.orbits())


def test_bad_actions_rejected():
    G = cyclic(3)
    with pytest.raises(ActionNotHomomorphism):
        GSet(G, ["a", "b", "c"], [[0, 0, 1]])
    with pytest.raises(ActionNotHomomorphism):
        # a transposition cannot be the image of a 3-cycle
        GSet(G, ["a", "b", "c"], [[1, 0, 2]])
    with pytest.raises(InvalidInput):
        GSet(G, ["a", "a"], [[0, 1]])


def test_json_roundtrip_with_labels_or_indices():
    X = coset_space(symmetric(3), symmetric(3).subgroup([Perm([1, 0, 2])]))
    data = X.to_json()
    Y = GSet.from_json(data)
    assert Y.is_isomorphic(X)
    data["action"] = {k: [X.points.index(v) for v in row] for k, row in data["action"].items()}
    assert GSet.from_json(data).is_isomorphic(X)
    data["action"]["0"][0] = "nowhere"
    with pytest.raises(PointNotInSet):
        GSet.from_json(data)
    with pytest.raises(InvalidInput):
        GSet.from_json({**X.to_json(), "colour": 1})


def test_gset_through_sequence():
    seq = resolve_sequence("heisenberg:2")
    X = gset_through(seq, regular_gset(seq.H))
    assert len(X.points) == 4
    assert X.stabilizer(X.points[0]).order == 2
