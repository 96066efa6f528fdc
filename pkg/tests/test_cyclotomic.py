import cmath
from fractions import Fraction

from hypothesis import given, strategies as st

from equiquot.cyclotomic import Cyclotomic, cyclotomic_polynomial, zeta


def cyc(e):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.dictionaries(st.integers(0, e - 1), coeff, max_size=4).map(lambda d: Cyclotomic(e, d))


def close(a, b):
    return abs(complex(a) - complex(b)) < 1e-9


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_roots_of_unity_sum_to_zero():
    for e in (2, 3, 4, 6, 8, 12):
        assert sum((zeta(e, k) for k in range(e)), Cyclotomic.rational(0)) == 0
        assert zeta(e) ** e == 1


def test_mixed_conductors():
    # i * zeta_3 lives in Q(zeta_12)
    x = zeta(4) * zeta(3)
    assert x == zeta(12, 7)
    assert zeta(6, 2) == zeta(3)
    assert hash(zeta(6, 2)) == hash(zeta(3))


@given(cyc(12), cyc(12), cyc(12))
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert close(a * b, complex(a) * complex(b))


@given(cyc(9))
def test_inverse_and_conjugate(a):
    if a:
        assert a * a.inverse() == 1
    assert close(a.conjugate(), complex(a).conjugate())
    assert a.galois(1) == a


def test_rational_roundtrip():
    q = Cyclotomic.rational(Fraction(3, 7))
    assert q.is_rational() and q.to_fraction() == Fraction(3, 7)
    assert Cyclotomic.from_json(zeta(5, 2).to_json()) == zeta(5, 2)
    assert close(zeta(8), cmath.exp(2j * cmath.pi / 8))
