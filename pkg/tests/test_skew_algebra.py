import pytest

from equiquot.errors import VerificationFailure
from equiquot.groups import cyclic, symmetric
from equiquot.presets import resolve_sequence
from equiquot.skew_algebra import (
    commutant,
    group_algebra,
    regular_rep,
    skew_group_algebra,
    verify_center,
    verify_heisenberg_lemma,
    verify_xi,
)


@pytest.mark.parametrize("ref", ["heisenberg:2", "s3ext", "c3c2", "abelian:2"])
def test_xi_certified(ref):
    seq = resolve_sequence(ref)
    proof = verify_xi(seq)
    d = proof.data
    assert proof.passed
    assert d["dim_skew"] == seq.H.order * seq.G.order == d["dim_End_N"] == seq.H.order ** 2 * seq.N.order


def test_skew_algebra_structure():
    A = skew_group_algebra(resolve_sequence("c3c2"))
    assert A.dim == 12
    assert A.check_structure() == []


@pytest.mark.parametrize("n", [2, 3])
def test_heisenberg_lemma(n):
    proof = verify_heisenberg_lemma(n)
    assert proof.passed
    assert proof.data["inner_product"] == "1"
    assert proof.data["rank_image"] == n * n


def test_center_dimension_is_class_number():
    for G in (symmetric(3), cyclic(4)):
        assert verify_center(G).passed


def test_commutant_of_regular_rep():
    G = symmetric(3)
    assert commutant(regular_rep(G)).dim == G.order
    assert group_algebra(G).dim == 6


def test_strict_mode_raises():
    with pytest.raises(Exception):
        verify_heisenberg_lemma(1)
    assert issubclass(VerificationFailure, Exception)
