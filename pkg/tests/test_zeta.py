import math

import pytest
from hypothesis import given, strategies as st

from equiquot.errors import BudgetExceeded, InvalidInput
from equiquot.groups import Partition
from equiquot.zeta import (
    TruncSeries,
    brute_force_ext_quot,
    ext_quot_sym_count,
    kapranov_zeta,
    partition_sequence,
    sigma_n_adequacy,
    sym_power_count,
    verify_gs_identity,
)

# oracle values from independent generating-function expansion
GS = {0: [1, 0, 0, 0, 0, 0, 0], 1: [1, 1, 2, 3, 5, 7, 11],
      2: [1, 2, 5, 10, 20, 36, 65], 3: [1, 3, 9, 22, 51, 108, 221]}


def series(D):
    return st.lists(st.integers(-9, 9), min_size=D + 1, max_size=D + 1).map(lambda c: TruncSeries(tuple(c), D))


@given(series(6), series(6), series(6))
def test_series_ring(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * TruncSeries.one(6) == a
    assert (a - a).to_list() == [0] * 7


@given(series(8), series(8), st.integers(1, 4))
def test_substitution_is_a_ring_map(a, b, i):
    assert (a * b).substitute(i) == a.substitute(i) * b.substitute(i)


def test_series_degree_mismatch():
    with pytest.raises(InvalidInput):
        TruncSeries.one(3) + TruncSeries.one(4)


@given(st.integers(0, 4), st.integers(0, 4))
def test_sym_power_count_matches_orbits(x, n):
    assert sym_power_count(x, n, check=x ** n * math.factorial(n) <= 5000) == (1 if n == 0 else math.comb(x + n - 1, n))


def test_kapranov_zeta_is_binomial_series():
    # (1-t)^{-2} = sum (n+1) t^n
    assert kapranov_zeta(2, 5).to_list() == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize("x", range(4))
def test_gs_identity(x):
    proof = verify_gs_identity(x, 6, brute_max=4)
    assert proof.data["product"] == GS[x] == proof.data["formula"]
    assert proof.data["brute_force"] == GS[x][:5]


def test_brute_force_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_ext_quot(5, 6, budget=1000)
    proof = verify_gs_identity(3, 6, brute_max=6, strict=False, budget=200)
    assert proof.passed and len(proof.data["brute_force"]) < 7


@given(st.integers(0, 3), st.integers(0, 4))
def test_partition_formula_matches_brute_force(x, n):
    assert ext_quot_sym_count(x, n) == brute_force_ext_quot(x, n)


def test_partition_sequence_orders():
    seq = partition_sequence(Partition.from_parts([2, 2, 1]))
    assert (seq.N.order, seq.G.order, seq.H.order) == (4, 8, 2)


@pytest.mark.parametrize("n", range(6))
def test_sigma_n_adequacy(n):
    r = sigma_n_adequacy(n)
    assert r["all_pass"]
    assert len(r["partitions"]) == [1, 1, 2, 3, 5, 7][n]
