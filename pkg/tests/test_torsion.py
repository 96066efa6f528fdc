import itertools
import math
import random

import pytest
from hypothesis import given, strategies as st
from sympy import Matrix

from equiquot.errors import DataNotExact, DifferentialError, InvalidInput, TorsionInSecondFactor
from equiquot.torsion import (
    FgAbGroup,
    GradedGroup,
    Hom,
    IntMatrix,
    SSPage,
    ah_e2,
    audit_theorem_c,
    install_d3,
    kernel,
    kunneth_torsion_free,
    leray_e2_severi_brauer,
    load_fixture,
    quotient,
    random_page,
    random_tau0_instance,
    smith_normal_form,
    subgroup,
    tau,
    tau0_checks,
    turn_page,
)

matrices = st.integers(1, 4).flatmap(
    lambda r: st.integers(1, 4).flatmap(
        lambda c: st.lists(st.lists(st.integers(-20, 20), min_size=c, max_size=c), min_size=r, max_size=r)))


def determinantal_divisors(rows):
    """d_k = gcd of k x k minors; invariant factors are d_k / d_{k-1}."""
    r, c = len(rows), len(rows[0])
    out, prev = [], 1
    for k in range(1, min(r, c) + 1):
        g = 0
        for I in itertools.combinations(range(r), k):
            for J in itertools.combinations(range(c), k):
                g = math.gcd(g, int(Matrix([[rows[i][j] for j in J] for i in I]).det()))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


@given(matrices)
def test_snf_invariant_factors_match_minors(rows):
    s = smith_normal_form(IntMatrix.from_rows(rows))
    assert [d for d in s.diagonal if d] == determinantal_divisors(rows)
    A = IntMatrix.from_rows(rows)
    assert (s.U @ A @ s.V) == s.D
    assert abs(s.U.det()) == 1 and abs(s.V.det()) == 1


def test_snf_examples():
    assert smith_normal_form(IntMatrix.from_rows([[2, 4], [6, 8]])).diagonal == [2, 4]
    assert smith_normal_form(IntMatrix.from_rows([[0, 0], [0, 0]])).rank == 0
    assert smith_normal_form(IntMatrix.zeros(0, 3)).rank == 0


def test_matrix_json_roundtrip():
    M = IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]])
    assert IntMatrix.from_json(M.to_json()) == M
    assert M.T.T == M


def test_fg_ab_group_canonical_form():
    A = FgAbGroup.from_orders(1, [4, 6])
    assert A.invariant_factors == (2, 12)
    assert tau(A) == 24 and repr(A) == "Z/2 + Z/12 + Z"
    assert FgAbGroup.from_json(A.to_json()) == A
    assert (A + FgAbGroup.from_orders(0, [3])).tau() == 72
    assert (A * 2).free_rank == 2


def test_presentation():
    G, proj = FgAbGroup.from_presentation(2, IntMatrix.from_columns([[2, 0], [0, 3]], 2))
    assert G.invariant_factors == (6,) and G.free_rank == 0
    G, _ = FgAbGroup.from_presentation(3, IntMatrix.from_columns([[2, 2, 0]], 3))
    assert G.invariant_factors == (2,) and G.free_rank == 2


def test_hom_validation():
    A = FgAbGroup.from_orders(0, [2])
    B = FgAbGroup.from_orders(0, [4])
    f = Hom(A, B, IntMatrix.from_rows([[2]]))
    assert f.is_injective() and not f.is_surjective()
    with pytest.raises(DifferentialError):
        Hom(A, B, IntMatrix.from_rows([[1]]))  # 1 of order 2 cannot map to an element of order 4
    assert kernel(Hom(B, A, IntMatrix.from_rows([[1]]))).tau() == 2


def test_subgroup_and_quotient():
    A = FgAbGroup.from_orders(1, [4])
    S, inc = subgroup(A, [[2, 0]])
    assert S.tau() == 2 and inc.is_injective()
    Q, p = quotient(A, [[0, 3]])
    assert Q.invariant_factors == (3, 4) or Q.invariant_factors == (12,)
    assert p.is_surjective()


@given(st.integers(0, 10_000))
def test_tau0_lemma_on_random_instances(seed):
    inst = random_tau0_instance(random.Random(seed))
    A = inst.pop("A")
    proof = tau0_checks(A, **inst)
    assert proof.passed, proof.failures()


def test_tau0_rejects_non_exact_data():
    A = FgAbGroup.from_orders(0, [2])
    zero = Hom.zero(A, A)
    with pytest.raises(DataNotExact):
        tau0_checks(A, sequence=(zero, zero))


@given(st.integers(0, 10_000))
def test_turn_page_never_increases_tau(seed):
    page = random_page(random.Random(seed))
    nxt, info = turn_page(page)
    assert not info["increase"]
    assert all(info["after"][p] <= info["before"][p] for p in info["before"])


def test_turn_page_requires_rationally_zero_differentials():
    Z = FgAbGroup.from_orders(1, [])
    page = SSPage(2, {(0, 1): Z, (2, 0): Z})
    page.set_differential((0, 1), IntMatrix.from_rows([[2]]))
    with pytest.raises(DifferentialError):
        turn_page(page)


def test_differential_bidegree_checked():
    Z2 = FgAbGroup.from_orders(0, [2])
    page = SSPage(3, {(0, 2): Z2, (1, 0): Z2})
    with pytest.raises(DifferentialError):
        page.set_differential((0, 2), IntMatrix.from_rows([[1]]))


def test_graded_group_json_and_kunneth():
    E = GradedGroup.from_json(load_fixture("enriques"))
    C = GradedGroup.from_json(load_fixture("curve_g1"))
    P = kunneth_torsion_free(E, C)
    assert P.degrees == GradedGroup.from_json(load_fixture("enriques_x_curve_g1")).degrees
    assert P.odd().tau() == 16
    with pytest.raises(TorsionInSecondFactor):
        kunneth_torsion_free(C, E)
    with pytest.raises(InvalidInput):
        GradedGroup.from_json({"degrees": {"0": {"rank": -1, "torsion": []}}})


def test_pages_layout():
    B = GradedGroup.from_json(load_fixture("enriques_x_curve_g1"))
    assert set(j for _, j in ah_e2(B).grid) == {0}
    L = leray_e2_severi_brauer(B, 3)
    assert set(j for _, j in L.grid) == {0, 2, 4}
    assert set(j for _, j in leray_e2_severi_brauer(B, 3, r_max=1).grid) == {0, 2}


@pytest.mark.parametrize("g, base, e2, e4", [(1, 16, 256, 128), (2, 64, 4096, 2048), (3, 256, 65536, 32768)])
def test_theorem_c_audit(g, base, e2, e4):
    B = GradedGroup.from_json(load_fixture(f"enriques_x_curve_g{g}"))
    d3 = IntMatrix.from_json(load_fixture(f"d3_enriques_x_curve_g{g}"))
    r = audit_theorem_c(B, 2, d3)
    assert (r["tau_H_odd_B"], r["tau_E2_odd"], r["tau_E4_odd"]) == (base, e2, e4)
    assert r["certified"] and r["status"] == "certified"
    assert r["d_times_tau_H_odd_B"] == base ** 2


def test_audit_with_zero_d3_is_not_certified():
    B = GradedGroup.from_json(load_fixture("enriques_x_curve_g1"))
    d3 = IntMatrix.from_json(load_fixture("d3_zero_enriques_x_curve_g1"))
    r = audit_theorem_c(B, 2, d3)
    assert not r["certified"] and r["status"] == "d3-zero"


def test_install_d3_shape_checked():
    B = GradedGroup.from_json(load_fixture("enriques_x_curve_g1"))
    page = leray_e2_severi_brauer(B, 2)
    with pytest.raises(DifferentialError):
        install_d3(page, IntMatrix.from_rows([[1]]))
