import math

import pytest
from hypothesis import given, strategies as st

from equiquot.errors import ElementNotInGroup, InvalidInput
from equiquot.groups import (
    Partition,
    Perm,
    PermGroup,
    a4cover,
    alternating,
    are_isomorphic,
    block_cycle_subgroup,
    block_permuting_subgroup,
    centralizer_report,
    cycle_type,
    cyclic,
    direct_product,
    g_of_partition,
    heisenberg,
    partitions,
    quotient_sequence,
    symmetric,
    unitriangular_extension,
    wreath_product,
    young_subgroup,
)

PARTITION_NUMBERS = [1, 1, 2, 3, 5, 7, 11, 15]


def perms(n):
    return st.permutations(range(n)).map(Perm)


def test_perm_composition_is_left_action():
    g = Perm([1, 2, 0])
    h = Perm([1, 0, 2])
    # (g*h)(i) = g(h(i))
    assert list(g * h) == [g[h[i]] for i in range(3)]
    assert (g * g.inverse()).is_identity()
    assert g.order() == 3
    assert Perm.from_cycles(4, (0, 1), (2, 3)).cycles() == [(0, 1), (2, 3)]


def test_perm_rejects_non_bijection():
    with pytest.raises(InvalidInput):
        Perm.checked([0, 0, 1])


@given(perms(6), perms(6), perms(6))
def test_perm_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


def test_symmetric_orders():
    for n in range(1, 6):
        assert symmetric(n).order == math.factorial(n)
        assert alternating(n).order == max(math.factorial(n) // 2, 1)


@pytest.mark.parametrize("n", range(1, 8))
def test_classes_of_sn_are_partitions(n):
    S = symmetric(n)
    assert S.num_classes == PARTITION_NUMBERS[n]
    assert {cycle_type(g) for g in S.class_reps} == set(partitions(n))
    assert sum(S.class_sizes) == S.order


def test_partitions_order_and_count():
    assert len(partitions(0)) == 1
    ps = partitions(4)
    assert [list(reversed(p.parts())) for p in ps] == [[4], [3, 1], [2, 2], [2, 1, 1], [1, 1, 1, 1]]
    assert Partition.from_parts([2, 1, 2]).multiplicities == (1, 2)
    with pytest.raises(InvalidInput):
        Partition.from_parts([0, 1])


@given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
def test_g_of_partition_has_that_cycle_type(parts):
    p = Partition.from_parts(parts)
    assert cycle_type(g_of_partition(p)) == p


@pytest.mark.parametrize("n", range(1, 7))
def test_centralizer_orders(n):
    S = symmetric(n)
    for p in partitions(n):
        Z = S.centralizer(g_of_partition(p))
        assert Z.order == p.centralizer_order()


@pytest.mark.parametrize("parts", [[2, 2], [3, 3], [4, 2], [2, 2, 1]])
def test_centralizer_is_block_rotations_semidirect_h(parts):
    proof = centralizer_report(Partition.from_parts(parts))
    assert set(proof.failures()) == {"|<g>|·|H| = |Z(g)|  (direct product)"}
    A = block_cycle_subgroup(Partition.from_parts(parts))
    H = block_permuting_subgroup(Partition.from_parts(parts))
    assert A.order * H.order == Partition.from_parts(parts).centralizer_order()


@pytest.mark.parametrize("parts", [[1], [3], [3, 2], [2, 1, 1], [5, 1], [4]])
def test_centralizer_direct_product_when_block_lengths_coprime(parts):
    assert centralizer_report(Partition.from_parts(parts)).passed


def test_subgroup_normalizer_and_center():
    S4 = symmetric(4)
    A4 = S4.subgroup(alternating(4).generators)
    assert S4.is_normal(A4)
    assert S4.normalizer(A4).order == 24
    assert S4.center().order == 1
    assert cyclic(6).center().order == 6
    with pytest.raises(ElementNotInGroup):
        A4.index(Perm([1, 0, 2, 3]))


def test_group_json_roundtrip():
    G = symmetric(4)
    assert PermGroup.from_json(G.to_json()).same_elements(G)


def test_named_sequences():
    for seq, orders in [
        (heisenberg(2), (2, 8, 4)),
        (heisenberg(3), (3, 27, 9)),
        (unitriangular_extension(2), (8, 32, 4)),
        (a4cover(), (24, 288, 12)),
        (wreath_product(cyclic(2), 2), (4, 8, 2)),
    ]:
        assert (seq.N.order, seq.G.order, seq.H.order) == orders
        assert all(seq.validate().values())


def test_young_and_block_subgroups():
    p = Partition.from_parts([2, 2, 1])
    assert young_subgroup(p).order == 4
    assert block_permuting_subgroup(p).order == 2


def test_quotient_sequence_requires_normal():
    S3 = symmetric(3)
    with pytest.raises(InvalidInput):
        quotient_sequence(S3, S3.subgroup([Perm([1, 0, 2])]))


def test_isomorphism_test():
    assert are_isomorphic(cyclic(4), cyclic(4))
    assert not are_isomorphic(cyclic(4), direct_product(cyclic(2), cyclic(2)))
    assert are_isomorphic(symmetric(3), heisenberg(2).G) is False


@given(st.integers(1, 5), st.data())
def test_class_function_of_conjugates(n, data):
    S = symmetric(n)
    g = data.draw(st.sampled_from(S.elements))
    h = data.draw(st.sampled_from(S.elements))
    assert S.class_of(g.conj(h)) == S.class_of(g)
    assert cycle_type(g.conj(h)) == cycle_type(g)
