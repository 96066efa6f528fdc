"""Zeta functions under the counting measure.

Under cardinality, ``{S^n(X)}`` becomes the number of size-``n`` multisets
of an ``x``-element set, so the Kapranov zeta function is ``(1-t)^{-x}``.
The Galkin–Shinder identity is then checked three ways: the infinite
product ``∏_i Z(X, t^i)``, the partition formula for ``|X^n /^ex Σ_n|``,
and a brute-force extended quotient of ``X^n`` under ``Σ_n``.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Sequence

from . import citations
from .adequacy import in_s0
from .errors import BudgetExceeded, InvalidInput, Mismatch
from .groups import (
    ExactSequence,
    GroupHom,
    Partition,
    PermGroup,
    block_permuting_subgroup,
    partitions,
    symmetric,
    young_subgroup,
)
from .gset import extended_quotient, power_gset
from .proof import Proof

__all__ = [
    "TruncSeries",
    "sym_power_count",
    "kapranov_zeta",
    "ext_quot_sym_count",
    "brute_force_ext_quot",
    "verify_gs_identity",
    "partition_sequence",
    "sigma_n_adequacy",
]

BRUTE_BUDGET = int(os.environ.get("EQUIQUOT_BRUTE_BUDGET", "200000"))


@dataclass(frozen=True)
class TruncSeries:
    """``Σ_{k ≤ D} c_k t^k`` with integer coefficients, computed modulo ``t^{D+1}``."""

    coeffs: tuple[int, ...]
    degree: int

    def __post_init__(self):
        if self.degree < 0:
            raise InvalidInput("truncation degree must be >= 0")
        c = tuple(int(v) for v in self.coeffs[: self.degree + 1])
        c += (0,) * (self.degree + 1 - len(c))
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def one(cls, D: int) -> "TruncSeries":
        return cls((1,), D)

    def _same(self, other: "TruncSeries") -> None:
        if self.degree != other.degree:
            raise InvalidInput("series truncated at different degrees")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._same(other)
        return TruncSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.degree)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._same(other)
        return TruncSeries(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), self.degree)

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        self._same(other)
        D = self.degree
        out = [0] * (D + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(D + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncSeries(tuple(out), D)

    def substitute(self, i: int) -> "TruncSeries":
        """``f(t^i)``, truncated at the same degree."""
        if i < 1:
            raise InvalidInput("substitution exponent must be >= 1")
        out = [0] * (self.degree + 1)
        for k, c in enumerate(self.coeffs):
            if k * i > self.degree:
                break
            out[k * i] = c
        return TruncSeries(tuple(out), self.degree)

    def truncate(self, D: int) -> "TruncSeries":
        return TruncSeries(self.coeffs[: D + 1], D)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __iter__(self):
        return iter(self.coeffs)

    def to_list(self) -> list[int]:
        return list(self.coeffs)


def sym_power_count(x: int, n: int, check: bool = False) -> int:
    """``|S^n(X)|`` for ``|X| = x``: multisets of size ``n``, ``C(x+n-1, n)``.

    With ``check`` the value is compared with a brute-force orbit count of
    ``Σ_n`` on ``X^n``.
    """
    if x < 0 or n < 0:
        raise InvalidInput("x, n >= 0 required")
    value = 1 if n == 0 else math.comb(x + n - 1, n)
    if check:
        if x ** n * math.factorial(n) > BRUTE_BUDGET:
            raise BudgetExceeded(f"brute force for x={x}, n={n} exceeds budget {BRUTE_BUDGET}")
        orbits = len(power_gset([str(i) for i in range(x)], n).orbit_indices())
        if orbits != value:
            raise Mismatch(f"|S^{n}(X)| = {value} but orbit count is {orbits}")
    return value


def kapranov_zeta(x: int, D: int) -> TruncSeries:
    return TruncSeries(tuple(sym_power_count(x, n) for n in range(D + 1)), D)


def ext_quot_sym_count(x: int, n: int) -> int:
    """``Σ_{ϖ ∈ P_n} ∏_i |S^{n_i}(X)|``."""
    return sum(
        math.prod(sym_power_count(x, k) for k in p.multiplicities) for p in partitions(n)
    )


def brute_force_ext_quot(x: int, n: int, budget: int | None = None) -> int:
    """``|X^n /^ex Σ_n|`` by building the ``Σ_n``-set and its inertia."""
    budget = BRUTE_BUDGET if budget is None else budget
    if x ** n * math.factorial(n) > budget:
        raise BudgetExceeded(f"x^n * n! = {x ** n * math.factorial(n)} exceeds budget {budget}")
    X = power_gset([str(i) for i in range(x)], n)
    return len(extended_quotient(X))


def _first_difference(a: Sequence[int], b: Sequence[int]) -> int | None:
    return next((k for k, (u, v) in enumerate(zip(a, b)) if u != v), None)


def verify_gs_identity(x: int, D: int, brute_max: int = 4, strict: bool = True,
                       budget: int | None = None) -> Proof:
    """Coefficientwise agreement of ``∏_{i=1}^{D} Z(x, t^i)``, the partition
    formula and (for ``n ≤ brute_max``) brute force, up to ``t^D``.

    Factors with ``i > D`` are ``≡ 1 mod t^{D+1}``, so the finite product is exact.
    Brute force stops at the first ``n`` whose ``Σ_n``-set exceeds ``budget``.
    """
    if x < 0 or D < 0:
        raise InvalidInput("x, D >= 0 required")
    proof = Proof("prod_i Z_mot(X, t^i) = sum_n |X^n /^ex S_n| t^n", citations.GS_THEOREM,
                  conventions=["counting realization: classes replaced by cardinalities"])
    Z = kapranov_zeta(x, D)
    prod = TruncSeries.one(D)
    for i in range(1, D + 1):
        prod = prod * Z.substitute(i)
    formula = [ext_quot_sym_count(x, n) for n in range(D + 1)]
    brute = []
    for n in range(min(D, brute_max) + 1):
        try:
            brute.append(brute_force_ext_quot(x, n, budget))
        except BudgetExceeded:
            break
    k = _first_difference(prod.coeffs, formula)
    proof.add("product = partition formula", k is None, "" if k is None else f"first difference at t^{k}")
    kb = _first_difference(formula, brute)
    proof.add(f"partition formula = brute force for n <= {len(brute) - 1}", kb is None,
              "" if kb is None else f"first difference at t^{kb}")
    proof.data = {"x": x, "degree": D, "product": prod.to_list(), "formula": formula, "brute_force": brute}
    if strict and not proof.passed:
        raise Mismatch(f"Galkin-Shinder check failed for x={x}: {proof.failures()}")
    return proof


def partition_sequence(p: Partition) -> ExactSequence:
    """``1 → N_ϖ → N_ϖ ⋊ H_ϖ → H_ϖ → 1`` inside ``Σ_n``."""
    n = max(p.n, 1)
    N = young_subgroup(p)
    H = block_permuting_subgroup(p)
    gens = list(N.generators) + list(H.generators)
    G = PermGroup(gens, degree=n, name=f"G{p.multiplicities}")
    proj = GroupHom(G, H, [H.identity] * len(N.generators) + list(H.generators), name="projection")
    return ExactSequence(N, G, H, proj, name=f"partition {list(reversed(p.parts()))}")


def sigma_n_adequacy(n: int) -> dict:
    """Run the ``S0`` test on the stabilizer sequence of every ``ϖ ∈ P_n``.

    Also checks that ``N_ϖ ⋊ H_ϖ`` is the full normalizer of ``N_ϖ`` in ``Σ_n``.
    """
    if n < 0:
        raise InvalidInput("n >= 0 required")
    Sn = symmetric(n)
    rows = []
    for p in partitions(n):
        seq = partition_sequence(p)
        normal_ok = Sn.normalizer(seq.N).same_elements(seq.G) if n >= 1 else True
        rep = in_s0(seq)
        rows.append({
            "partition": list(reversed(p.parts())),
            "orders": {"N": seq.N.order, "G": seq.G.order, "H": seq.H.order},
            "normalizer_is_N_x_H": normal_ok,
            "in_s0": rep.in_s0,
            "report": rep,
        })
    return {
        "n": n,
        "partitions": rows,
        "all_pass": all(r["in_s0"] and r["normalizer_is_N_x_H"] for r in rows),
        "citation": citations.GS_ADEQUACY,
    }
