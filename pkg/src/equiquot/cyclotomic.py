"""Exact arithmetic in cyclotomic fields ``Q(ζ_e)``.

A :class:`Cyclotomic` is a rational combination of ``1, ζ, …, ζ^{φ(e)-1}``
for the fixed primitive root ``ζ = ζ_e = exp(2πi/e)``, reduced modulo the
``e``-th cyclotomic polynomial.  Coefficients are stored sparsely, so
rational values (the common case for character values) cost almost nothing.
Values of different conductors combine in ``Q(ζ_lcm)``.
"""
from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping

__all__ = ["Cyclotomic", "cyclotomic_polynomial", "zeta", "E"]


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, den monic; coefficient lists lowest degree first
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    dn = len(den) - 1
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    return q, num[:dn]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(e: int) -> tuple[int, ...]:
    """Integer coefficients of ``Φ_e`` (lowest degree first)."""
    if e < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (e - 1) + [1]
    for d in range(1, e):
        if e % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_polynomial(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


@lru_cache(maxsize=None)
def _phi(e: int) -> int:
    return len(cyclotomic_polynomial(e)) - 1


@lru_cache(maxsize=None)
def _power_vector(e: int, k: int) -> tuple[tuple[int, int], ...]:
    """``ζ_e^k`` in the power basis, as sparse ``(index, int coefficient)`` pairs."""
    k %= e
    n = _phi(e)
    if k < n:
        return ((k, 1),)
    vec = [0] * k + [1]
    _, rem = _poly_divmod(vec, list(cyclotomic_polynomial(e)))
    rem += [0] * (n - len(rem))
    return tuple((i, c) for i, c in enumerate(rem) if c)


def _normalize(e: int, terms: Mapping[int, Fraction]) -> tuple[tuple[int, Fraction], ...]:
    n = _phi(e)
    acc: dict[int, Fraction] = {}
    for k, c in terms.items():
        if not c:
            continue
        if k < n:
            acc[k] = acc.get(k, 0) + c
        else:
            for i, d in _power_vector(e, k):
                acc[i] = acc.get(i, 0) + c * d
    return tuple(sorted((k, Fraction(c)) for k, c in acc.items() if c))


class Cyclotomic:
    """An element of ``Q(ζ_e)`` in canonical reduced form."""

    __slots__ = ("e", "terms", "_hash")

    def __init__(self, e: int = 1, terms: Mapping[int, Fraction] | Iterable[tuple[int, Fraction]] = ()):
        if isinstance(terms, Mapping):
            raw: dict[int, Fraction] = {}
            for k, c in terms.items():
                raw[k % e] = raw.get(k % e, 0) + Fraction(c)
        else:
            raw = {}
            for k, c in terms:
                raw[k % e] = raw.get(k % e, 0) + Fraction(c)
        self.e = e
        self.terms: tuple[tuple[int, Fraction], ...] = _normalize(e, raw)
        self._hash = None

    @classmethod
    def _raw(cls, e: int, terms: tuple[tuple[int, Fraction], ...]) -> "Cyclotomic":
        obj = cls.__new__(cls)
        obj.e = e
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def rational(cls, q, e: int = 1) -> "Cyclotomic":
        q = Fraction(q)
        return cls._raw(e, ((0, q),) if q else ())

    @classmethod
    def from_exponents(cls, e: int, multiplicities: Mapping[int, int] | Iterable[int]) -> "Cyclotomic":
        """``Σ_k m_k ζ_e^k`` from a multiplicity table (or a plain list)."""
        if not isinstance(multiplicities, Mapping):
            multiplicities = dict(enumerate(multiplicities))
        return cls(e, {k: Fraction(m) for k, m in multiplicities.items() if m})

    # coercion -----------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "Cyclotomic":
        if isinstance(x, Cyclotomic):
            return x
        if isinstance(x, (int, Fraction)):
            return Cyclotomic.rational(x)
        return NotImplemented

    def promote(self, L: int) -> "Cyclotomic":
        """The same number written over ``Q(ζ_L)``; ``self.e`` must divide ``L``."""
        if L == self.e:
            return self
        if L % self.e:
            raise ValueError(f"conductor {self.e} does not divide {L}")
        step = L // self.e
        if self.is_rational():
            return Cyclotomic._raw(L, self.terms)
        return Cyclotomic(L, {k * step: c for k, c in self.terms})

    def _pair(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self.e == other.e:
            return self, other
        if self.is_rational() and other.is_rational():
            return self, Cyclotomic._raw(self.e, other.terms)
        if self.is_rational():
            return Cyclotomic._raw(other.e, self.terms), other
        if other.is_rational():
            return self, Cyclotomic._raw(self.e, other.terms)
        L = math.lcm(self.e, other.e)
        return self.promote(L), other.promote(L)

    # predicates ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_rational(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.terms[0][1] if self.terms else Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    # arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._pair(other)
        acc = dict(a.terms)
        for k, c in b.terms:
            acc[k] = acc.get(k, 0) + c
        return Cyclotomic._raw(a.e, tuple(sorted((k, c) for k, c in acc.items() if c)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.e, tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._pair(other)
        if not a.terms or not b.terms:
            return Cyclotomic._raw(a.e, ())
        if a.is_rational() or b.is_rational():
            if b.is_rational():
                a, b = b, a
            q = a.terms[0][1]
            return Cyclotomic._raw(b.e, tuple((k, c * q) for k, c in b.terms))
        e = a.e
        acc: dict[int, Fraction] = {}
        n = _phi(e)
        for i, c in a.terms:
            for j, d in b.terms:
                s = i + j
                cd = c * d
                if s < n:
                    acc[s] = acc.get(s, 0) + cd
                else:
                    for k, v in _power_vector(e, s):
                        acc[k] = acc.get(k, 0) + cd * v
        return Cyclotomic._raw(e, tuple(sorted((k, c) for k, c in acc.items() if c)))

    __rmul__ = __mul__

    def inverse(self) -> "Cyclotomic":
        if not self.terms:
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic._raw(self.e, ((0, 1 / self.terms[0][1]),))
        # extended Euclid in Q[x] against Φ_e
        n = _phi(self.e)
        a = [Fraction(0)] * n
        for k, c in self.terms:
            a[k] = c
        m = [Fraction(c) for c in cyclotomic_polynomial(self.e)]
        r0, r1 = m, a
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = _fpoly_divmod(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, _fpoly_sub(s0, _fpoly_mul(q, s1))
        # r0 is a nonzero constant since Φ_e is irreducible
        r0 = _trim(r0)
        assert len(r0) == 1
        inv = {k: c / r0[0] for k, c in enumerate(s0) if c}
        return Cyclotomic(self.e, inv)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "Cyclotomic":
        if k < 0:
            return self.inverse() ** (-k)
        result = Cyclotomic.rational(1, self.e)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation ``ζ -> ζ^{-1}``."""
        if self.is_rational():
            return self
        return Cyclotomic(self.e, {(-k) % self.e: c for k, c in self.terms})

    def galois(self, j: int) -> "Cyclotomic":
        """The automorphism ``ζ -> ζ^j`` (``j`` coprime to the conductor)."""
        if math.gcd(j, self.e) != 1:
            raise ValueError("exponent must be coprime to the conductor")
        if self.is_rational():
            return self
        return Cyclotomic(self.e, {(k * j) % self.e: c for k, c in self.terms})

    # comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._pair(other)
        return a.terms == b.terms

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(self.to_fraction())
            else:
                z = complex(self)
                self._hash = hash((round(z.real, 8), round(z.imag, 8)))
        return self._hash

    def sort_key(self) -> tuple:
        n = _phi(self.e)
        dense = [Fraction(0)] * n
        for k, c in self.terms:
            dense[k] = c
        return tuple(dense)

    def __complex__(self) -> complex:
        w = cmath.exp(2j * cmath.pi / self.e)
        return sum((float(c) * w ** k for k, c in self.terms), 0j)

    # io -----------------------------------------------------------------

    def coefficients(self) -> list[Fraction]:
        return list(self.sort_key())

    def to_json(self) -> dict:
        return {"conductor": self.e, "coeffs": [str(c) for c in self.coefficients()]}

    @classmethod
    def from_json(cls, data: Mapping) -> "Cyclotomic":
        return cls(int(data["conductor"]), {k: Fraction(c) for k, c in enumerate(data["coeffs"])})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.terms:
            if k == 0:
                parts.append(str(c))
            else:
                mono = f"z{self.e}" + (f"^{k}" if k > 1 else "")
                parts.append(mono if c == 1 else f"-{mono}" if c == -1 else f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def zeta(e: int, k: int = 1) -> Cyclotomic:
    """``ζ_e^k`` for the canonical primitive root ``ζ_e = exp(2πi/e)``."""
    return Cyclotomic(e, {k % e: Fraction(1)})


E = zeta


def _trim(p: list[Fraction]) -> list[Fraction]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _fpoly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a, b = _trim(a), _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    a = list(a)
    lead = b[-1]
    for i in range(len(a) - len(b), -1, -1):
        c = a[i + len(b) - 1] / lead
        q[i] = c
        if c:
            for j, d in enumerate(b):
                a[i + j] -= c * d
    rem = _trim(a[: len(b) - 1] or [Fraction(0)])
    return q, rem


def _fpoly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return out


def _fpoly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])
