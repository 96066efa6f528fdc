from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from equiquot.char_theory import (
    ClassFunction,
    central_idempotents,
    character_table,
    dixon_prime,
    h_action_on_classes,
    h_action_on_irr,
    induce_char,
    inner,
    restrict,
)
from equiquot.groups import alternating, cyclic, direct_product, heisenberg, symmetric
from equiquot.presets import dihedral, resolve_group, resolve_sequence

SMALL = ["sym:3", "sym:4", "alt:4", "alt:5", "cyclic:7", "dihedral:5", "heisenberg:3", "a4cover", "exS0:2"]


@pytest.mark.parametrize("ref", SMALL)
def test_tables_verify(ref):
    G = resolve_group(ref)
    T = character_table(G)
    assert all(T.verify().values())
    # the trivial character is the first row
    assert all(v == 1 for v in T.characters[0])


def test_s4_degrees():
    assert sorted(character_table(symmetric(4)).degrees) == [1, 1, 2, 3, 3]
    assert sorted(character_table(alternating(5)).degrees) == [1, 3, 3, 4, 5]


def test_dixon_prime_bounds():
    p = dixon_prime(12, 60)
    assert p % 12 == 1 and p * p > 4 * 60


def test_regular_character_decomposes_by_degrees():
    G = dihedral(6)
    T = character_table(G)
    assert T.decompose(ClassFunction.regular(G)) == [Fraction(d) for d in T.degrees]


@pytest.mark.parametrize("ref", ["sym:4", "heisenberg:3", "cyclic:6"])
def test_frobenius_reciprocity(ref):
    G = resolve_group(ref)
    K = G.center() if G.order > 24 else G.subgroup(G.generators[:1])
    TG, TK = character_table(G), character_table(K)
    for chi in TG.irreducibles():
        for psi in TK.irreducibles():
            assert inner(induce_char(psi, G), chi) == inner(psi, restrict(chi, K))


@given(st.sampled_from(["sym:3", "alt:4", "dihedral:4"]), st.data())
def test_products_of_irreducibles_are_characters(ref, data):
    G = resolve_group(ref)
    T = character_table(G)
    a = data.draw(st.integers(0, len(T) - 1))
    b = data.draw(st.integers(0, len(T) - 1))
    prod = ClassFunction(G, tuple(x * y for x, y in zip(T.characters[a], T.characters[b])))
    mult = T.decompose(prod)
    assert all(m.denominator == 1 and m >= 0 for m in mult)


def test_h_actions_on_heisenberg():
    seq = heisenberg(2)
    assert len(h_action_on_classes(seq).points) == seq.N.num_classes
    assert len(h_action_on_irr(seq).points) == seq.N.num_classes


def test_central_idempotents_sum_to_one():
    N = direct_product(cyclic(2), cyclic(3))
    es = central_idempotents(N)
    assert len(es) == 6
    total = es[0]
    for e in es[1:]:
        total = total + e
    assert total == type(es[0]).one(N)
    for e in es:
        assert e * e == e
