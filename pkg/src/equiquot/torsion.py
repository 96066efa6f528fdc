"""Finitely generated abelian groups, the τ-measure and spectral-page bookkeeping.

τ is stored as the torsion *order* ``|A_tors|`` rather than its logarithm, so
every τ-inequality becomes an exact integer inequality and sums of τ become
products.  A group is kept in Smith form ``⊕ ℤ/d_i ⊕ ℤ^r``; its standard
coordinates list the torsion generators first (in invariant-factor order)
and the free generators after them.  Homomorphisms are integer matrices in
these coordinates.

Spectral pages carry one round of differentials ``d_r`` of bidegree
``(r, 1-r)``.  :func:`turn_page` computes the next page by kernel / image,
entry by entry, with all lattice work done through Smith normal forms.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Mapping, Sequence

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from . import citations
from .errors import (
    DataNotExact,
    DifferentialError,
    InvalidInput,
    TorsionInSecondFactor,
    VerificationFailure,
)
from .proof import Proof

__all__ = [
    "IntMatrix",
    "SNF",
    "smith_normal_form",
    "FgAbGroup",
    "tau",
    "Hom",
    "subgroup",
    "quotient",
    "kernel",
    "tau0_checks",
    "random_group",
    "random_tau0_instance",
    "GradedGroup",
    "SSPage",
    "ah_e2",
    "leray_e2_severi_brauer",
    "install_d3",
    "turn_page",
    "random_page",
    "kunneth_torsion_free",
    "audit_theorem_c",
    "load_fixture",
]


# ---------------------------------------------------------------------------
# integer matrices


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise InvalidInput("negative matrix shape")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise InvalidInput("matrix entries do not match the shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [tuple(int(v) for v in r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[int]], rows: int) -> "IntMatrix":
        return cls(rows, len(cols), tuple(tuple(int(c[i]) for c in cols) for i in range(rows)))

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, tuple(
            tuple(int(values[i]) if i == j and i < len(values) else 0 for j in range(cols))
            for i in range(rows)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        return self.entries[ij[0]][ij[1]]

    def column(self, j: int) -> list[int]:
        return [r[j] for r in self.entries]

    def columns(self) -> list[list[int]]:
        return [self.column(j) for j in range(self.cols)]

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else
                         tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InvalidInput(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        oc = other.columns()
        return IntMatrix(self.rows, other.cols, tuple(
            tuple(sum(a * b for a, b in zip(r, c)) for c in oc) for r in self.entries))

    def apply(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise InvalidInput("vector length does not match matrix")
        return [sum(a * b for a, b in zip(r, v)) for r in self.entries]

    def is_zero(self) -> bool:
        return all(v == 0 for r in self.entries for v in r)

    def det(self) -> int:
        if self.rows != self.cols:
            raise InvalidInput("determinant of a non-square matrix")
        if self.rows == 0:
            return 1
        return int(self.to_domain().det())

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix([[ZZ(v) for v in r] for r in self.entries], (self.rows, self.cols), ZZ)

    @classmethod
    def from_domain(cls, M: DomainMatrix) -> "IntMatrix":
        r, c = M.shape
        return cls(r, c, tuple(tuple(int(v) for v in row) for row in M.to_list()))

    def to_json(self) -> dict:
        return {"rows": [list(r) for r in self.entries], "cols": self.cols}

    @classmethod
    def from_json(cls, data: Mapping) -> "IntMatrix":
        try:
            unknown = set(data) - {"rows", "cols"}
            if unknown:
                raise InvalidInput(f"unknown matrix keys: {sorted(unknown)}")
            return cls.from_rows(data["rows"], data.get("cols"))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad matrix: {exc}") from exc


@dataclass(frozen=True)
class SNF:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i, i] for i in range(min(self.D.rows, self.D.cols))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def _is_unimodular(M: IntMatrix) -> bool:
    return abs(M.det()) == 1


def smith_normal_form(A: IntMatrix, verify: bool = True) -> SNF:
    """``U·A·V = D`` with ``U``, ``V`` unimodular and ``d_1 | d_2 | …``, all ``d_i ≥ 0``."""
    if A.rows == 0 or A.cols == 0:
        res = SNF(IntMatrix.identity(A.rows), A, IntMatrix.identity(A.cols))
    else:
        D, U, V = smith_normal_decomp(A.to_domain())
        D, U, V = IntMatrix.from_domain(D), IntMatrix.from_domain(U), IntMatrix.from_domain(V)
        # normalize signs so the diagonal is non-negative
        flips = [i for i in range(min(D.rows, D.cols)) if D[i, i] < 0]
        if flips:
            U = IntMatrix.from_rows([[-v for v in row] if i in flips else row
                                     for i, row in enumerate(U.entries)], U.cols)
            D = U @ A @ V
        res = SNF(U, D, V)
    if verify:
        _verify_snf(A, res)
    return res


def _verify_snf(A: IntMatrix, s: SNF) -> None:
    if s.U @ A @ s.V != s.D:
        raise VerificationFailure("U·A·V != D")
    if not (_is_unimodular(s.U) and _is_unimodular(s.V)):
        raise VerificationFailure("SNF transform is not unimodular")
    diag = s.diagonal
    if any(s.D[i, j] for i in range(s.D.rows) for j in range(s.D.cols) if i != j):
        raise VerificationFailure("SNF is not diagonal")
    if any(d < 0 for d in diag):
        raise VerificationFailure("negative invariant factor")
    for a, b in zip(diag, diag[1:]):
        if (a == 0 and b != 0) or (a and b % a):
            raise VerificationFailure(f"divisibility chain broken at {a}, {b}")


def _inverse_unimodular(M: IntMatrix) -> IntMatrix:
    inv = M.to_domain().to_field().inv()
    return IntMatrix.from_rows([[int(v) for v in row] for row in inv.to_list()], M.cols)


# ---------------------------------------------------------------------------
# finitely generated abelian groups


@dataclass(frozen=True)
class FgAbGroup:
    """``ℤ/d_1 ⊕ … ⊕ ℤ/d_k ⊕ ℤ^r`` with ``2 ≤ d_1 | d_2 | …``."""

    free_rank: int = 0
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        d = tuple(int(x) for x in self.invariant_factors)
        if self.free_rank < 0:
            raise InvalidInput("negative free rank")
        if any(x < 2 for x in d):
            raise InvalidInput("invariant factors must be >= 2")
        if any(b % a for a, b in zip(d, d[1:])):
            raise InvalidInput(f"invariant factors {d} do not form a divisibility chain")
        object.__setattr__(self, "invariant_factors", d)

    @classmethod
    def from_orders(cls, free_rank: int, orders: Iterable[int]) -> "FgAbGroup":
        """Any list of cyclic orders (``0`` meaning ``ℤ``, ``1`` dropped), canonicalized."""
        if int(free_rank) < 0:
            raise InvalidInput("negative free rank")
        orders = [int(o) for o in orders] + [0] * int(free_rank)
        if any(o < 0 for o in orders):
            raise InvalidInput("negative cyclic order")
        n = len(orders)
        return cls.from_presentation(n, IntMatrix.diagonal(orders, n, n))[0]

    @classmethod
    def from_presentation(cls, n_gens: int, relations: IntMatrix) -> tuple["FgAbGroup", IntMatrix]:
        """``ℤ^n / (column span of relations)``.

        Returns ``(group, proj)`` where ``proj`` maps ``ℤ^n`` onto the
        standard coordinates of the group; its rows are rows of a unimodular
        matrix, those of trivial factors dropped.
        """
        if relations.rows != n_gens:
            raise InvalidInput("relation matrix must have one row per generator")
        s = smith_normal_form(relations)
        diag = s.diagonal + [0] * (n_gens - min(relations.rows, relations.cols))
        keep = [i for i, d in enumerate(diag) if d != 1]
        tors = tuple(d for d in diag if d > 1)
        free = sum(1 for d in diag if d == 0)
        proj = IntMatrix.from_rows([s.U.entries[i] for i in keep], n_gens)
        return cls(free, tors), proj

    @property
    def ngens(self) -> int:
        return len(self.invariant_factors) + self.free_rank

    @property
    def orders(self) -> list[int]:
        """Order of each standard generator, ``0`` for free ones."""
        return list(self.invariant_factors) + [0] * self.free_rank

    def relation_matrix(self) -> IntMatrix:
        n = self.ngens
        return IntMatrix.diagonal(self.invariant_factors, n, len(self.invariant_factors))

    def tau(self) -> int:
        return math.prod(self.invariant_factors)

    def is_torsion_free(self) -> bool:
        return not self.invariant_factors

    def is_trivial(self) -> bool:
        return self.ngens == 0

    def reduce(self, v: Sequence[int]) -> tuple[int, ...]:
        """Canonical representative of a coordinate vector."""
        return tuple(x % o if o else x for x, o in zip(v, self.orders))

    def is_zero_vector(self, v: Sequence[int]) -> bool:
        return all(x == 0 for x in self.reduce(v))

    def __add__(self, other: "FgAbGroup") -> "FgAbGroup":
        return FgAbGroup.from_orders(self.free_rank + other.free_rank,
                                     list(self.invariant_factors) + list(other.invariant_factors))

    def __mul__(self, k: int) -> "FgAbGroup":
        """Direct sum of ``k`` copies."""
        out = FgAbGroup()
        for _ in range(k):
            out = out + self
        return out

    __rmul__ = __mul__

    def __repr__(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors]
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        return " + ".join(parts) or "0"

    def to_json(self) -> dict:
        return {"rank": self.free_rank, "torsion": list(self.invariant_factors)}

    @classmethod
    def from_json(cls, data: Mapping) -> "FgAbGroup":
        try:
            unknown = set(data) - {"rank", "torsion"}
            if unknown:
                raise InvalidInput(f"unknown group keys: {sorted(unknown)}")
            return cls.from_orders(int(data.get("rank", 0)), [int(t) for t in data.get("torsion", [])])
        except (TypeError, ValueError) as exc:
            raise InvalidInput(f"bad group: {exc}") from exc


def tau(A: FgAbGroup) -> int:
    """``|A_tors|``; τ itself is ``log`` of this in any base ``> 1``."""
    return A.tau()


# ---------------------------------------------------------------------------
# lattices: everything lives in ℤ^n, groups are lattice quotients


def _lattice_basis(gens: Sequence[Sequence[int]], n: int) -> list[list[int]]:
    """A basis of the sublattice of ``ℤ^n`` spanned by ``gens``."""
    gens = [list(g) for g in gens if any(g)]
    if not gens or n == 0:
        return []
    W = IntMatrix.from_columns(gens, n)
    s = smith_normal_form(W, verify=False)
    Uinv = _inverse_unimodular(s.U)
    return [[Uinv[i, k] * s.D[k, k] for i in range(n)] for k in range(s.rank)]


def _integer_kernel(M: IntMatrix) -> list[list[int]]:
    """A basis of ``{x ∈ ℤ^cols : M x = 0}``."""
    if M.cols == 0:
        return []
    if M.rows == 0:
        return [list(c) for c in IntMatrix.identity(M.cols).columns()]
    s = smith_normal_form(M, verify=False)
    return [s.V.column(j) for j in range(s.rank, M.cols)]


def _coords(basis: Sequence[Sequence[int]], v: Sequence[int], n: int) -> list[int] | None:
    """Integer ``y`` with ``Σ y_k basis_k = v``, or ``None``."""
    if not basis:
        return [] if not any(v) else None
    B = IntMatrix.from_columns(basis, n)
    s = smith_normal_form(B, verify=False)
    w = s.U.apply(v)
    z = []
    for i, x in enumerate(w):
        d = s.D[i, i] if i < s.D.cols else 0
        if d == 0:
            if x:
                return None
            if i < s.D.cols:
                z.append(0)
        elif x % d:
            return None
        else:
            z.append(x // d)
    z += [0] * (B.cols - len(z))
    return s.V.apply(z[: B.cols])


def _lattice_quotient(L: Sequence[Sequence[int]], M: Sequence[Sequence[int]], n: int):
    """``span(L) / span(M)`` for ``span(M) ⊆ span(L)``.

    Returns ``(group, basis of L, projection)``, the projection mapping
    ``L``-coordinates to standard coordinates of the quotient.
    """
    Lb = _lattice_basis(L, n)
    cols = []
    for m in M:
        y = _coords(Lb, m, n)
        if y is None:
            raise VerificationFailure("lattice quotient: M is not contained in L")
        cols.append(y)
    k = len(Lb)
    R = IntMatrix.from_columns(cols, k) if cols else IntMatrix.zeros(k, 0)
    G, proj = FgAbGroup.from_presentation(k, R)
    return G, Lb, proj


def _std_relations(A: FgAbGroup) -> list[list[int]]:
    return [[d if i == j else 0 for i in range(A.ngens)] for j, d in enumerate(A.invariant_factors)]


@dataclass(frozen=True)
class Hom:
    """A homomorphism ``A → B`` given by its matrix in standard coordinates."""

    source: FgAbGroup
    target: FgAbGroup
    matrix: IntMatrix

    def __post_init__(self):
        if self.matrix.rows != self.target.ngens or self.matrix.cols != self.source.ngens:
            raise DifferentialError(
                f"matrix shape {self.matrix.rows}x{self.matrix.cols} does not match "
                f"{self.source!r} -> {self.target!r}")
        for j, a in enumerate(self.source.orders):
            if a and not self.target.is_zero_vector([a * x for x in self.matrix.column(j)]):
                raise DifferentialError(f"matrix is not well defined on the generator of order {a}")

    @classmethod
    def zero(cls, A: FgAbGroup, B: FgAbGroup) -> "Hom":
        return cls(A, B, IntMatrix.zeros(B.ngens, A.ngens))

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.target.reduce(self.matrix.apply(v))

    def compose(self, first: "Hom") -> "Hom":
        """``self ∘ first``."""
        if first.target != self.source:
            raise DifferentialError("composition of maps with mismatched groups")
        return Hom(first.source, self.target, self.matrix @ first.matrix)

    def is_zero(self) -> bool:
        return all(self.target.is_zero_vector(c) for c in self.matrix.columns())

    def is_rationally_zero(self) -> bool:
        """``f ⊗ ℚ = 0``: the image lies in the torsion of the target."""
        t = len(self.target.invariant_factors)
        return all(self.matrix[i, j] == 0 for i in range(t, self.target.ngens) for j in range(self.matrix.cols))

    def kernel_lattice(self) -> list[list[int]]:
        """Basis of the preimage of ``0`` in ``ℤ^{ngens(A)}`` (contains the relations of ``A``)."""
        n, m = self.source.ngens, self.target.ngens
        rels = _std_relations(self.target)
        big = IntMatrix.from_rows(
            [list(self.matrix.entries[i]) + [r[i] for r in rels] for i in range(m)], n + len(rels))
        ker = _integer_kernel(big)
        return _lattice_basis([v[:n] for v in ker] + _std_relations(self.source), n)

    def image_vectors(self) -> list[list[int]]:
        return self.matrix.columns()

    def is_injective(self) -> bool:
        return kernel(self).is_trivial()

    def is_surjective(self) -> bool:
        Q, _, _ = _lattice_quotient(
            [list(c) for c in IntMatrix.identity(self.target.ngens).columns()],
            self.image_vectors() + _std_relations(self.target), self.target.ngens)
        return Q.is_trivial()

    def to_json(self) -> dict:
        return {"source": self.source.to_json(), "target": self.target.to_json(), "matrix": self.matrix.to_json()}


def kernel(f: Hom) -> FgAbGroup:
    n = f.source.ngens
    return _lattice_quotient(f.kernel_lattice(), _std_relations(f.source), n)[0]


def subgroup(A: FgAbGroup, gens: Sequence[Sequence[int]]) -> tuple[FgAbGroup, Hom]:
    """The subgroup generated by ``gens`` and its inclusion into ``A``."""
    n = A.ngens
    rels = _std_relations(A)
    L = [list(g) for g in gens] + rels
    S, Lb, proj = _lattice_quotient(L, rels, n)
    # a standard generator of S is proj-dual: columns of Lb·P where P is a right inverse of proj
    P = _right_inverse(proj, len(Lb))
    B = IntMatrix.from_columns(Lb, n) if Lb else IntMatrix.zeros(n, 0)
    incl = B @ P if Lb else IntMatrix.zeros(n, S.ngens)
    return S, Hom(S, A, incl)


def _right_inverse(proj: IntMatrix, k: int) -> IntMatrix:
    """``P`` with ``proj·P ≡ I`` modulo the quotient's relations.

    ``proj`` is made of rows of a unimodular ``U``, so the matching columns
    of ``U^{-1}`` form an exact right inverse.
    """
    if proj.rows == 0:
        return IntMatrix.zeros(k, 0)
    # complete proj to a unimodular matrix by recomputing from its SNF row space
    cols = []
    for i in range(proj.rows):
        e = [int(i == j) for j in range(proj.rows)]
        y = _solve_rows(proj, e)
        cols.append(y)
    return IntMatrix.from_columns(cols, k)


def _solve_rows(M: IntMatrix, e: Sequence[int]) -> list[int]:
    """Integer ``x`` with ``M x = e`` (``M`` has unimodular-extendable rows)."""
    s = smith_normal_form(M, verify=False)
    w = s.U.apply(e)
    z = []
    for i, x in enumerate(w):
        d = s.D[i, i]
        if d == 0 or x % d:
            raise VerificationFailure("projection has no integral right inverse")
        z.append(x // d)
    z += [0] * (M.cols - len(z))
    return s.V.apply(z)


def quotient(A: FgAbGroup, gens: Sequence[Sequence[int]]) -> tuple[FgAbGroup, Hom]:
    """``A / ⟨gens⟩`` and the projection."""
    n = A.ngens
    full = [list(c) for c in IntMatrix.identity(n).columns()]
    Q, Lb, proj = _lattice_quotient(full, [list(g) for g in gens] + _std_relations(A), n)
    # Lb is a basis of ℤ^n; convert proj from Lb-coordinates to standard ones
    Binv = _inverse_unimodular(IntMatrix.from_columns(Lb, n)) if n else IntMatrix.zeros(0, 0)
    return Q, Hom(A, Q, proj @ Binv if n else IntMatrix.zeros(Q.ngens, 0))


def subquotient(A: FgAbGroup, top: Sequence[Sequence[int]], bottom: Sequence[Sequence[int]]) -> FgAbGroup:
    """``(⟨top⟩ + rel) / (⟨bottom⟩ + rel)`` inside ``A``; ``bottom ⊆ top`` required."""
    n = A.ngens
    rels = _std_relations(A)
    return _lattice_quotient([list(v) for v in top] + rels, [list(v) for v in bottom] + rels, n)[0]


# ---------------------------------------------------------------------------
# τ lemmas


def tau0_checks(
    A: FgAbGroup,
    *,
    subgroup_gens: Sequence[Sequence[int]] | None = None,
    surjection: Hom | None = None,
    sequence: tuple[Hom, Hom] | None = None,
    filtration: Sequence[Sequence[Sequence[int]]] | None = None,
) -> Proof:
    """Check the four τ inequalities on the data supplied.

    ``sequence`` is ``(i: A' → A, p: A → A'')``; ``filtration`` lists
    generators of ``F^1 ⊇ F^2 ⊇ …`` (``F^0 = A``, and ``0`` is appended).
    Data that fail their hypotheses raise :class:`DataNotExact`.
    """
    proof = Proof("tau subadditivity on subgroups, quotients, extensions and filtrations",
                  citations.TAU0, conventions=["tau stored as torsion order; sums of tau are products"])
    tA = A.tau()
    if subgroup_gens is not None:
        S, _ = subgroup(A, subgroup_gens)
        proof.add("(i) tau(B) <= tau(A)", S.tau() <= tA, f"{S.tau()} <= {tA}")
    if surjection is not None:
        f = surjection
        if f.source != A:
            raise DataNotExact("surjection must start at A")
        if not f.is_surjective():
            raise DataNotExact("map is not surjective")
        K = kernel(f)
        if K.free_rank:
            raise DataNotExact("map is not a rational isomorphism")
        tB = f.target.tau()
        proof.add("(ii) tau(B) <= tau(A)", tB <= tA, f"{tB} <= {tA}")
        proof.add("(ii) equality iff injective", (tB == tA) == K.is_trivial(),
                  f"kernel {K!r}, tau {tB} vs {tA}")
    if sequence is not None:
        i, p = sequence
        if i.target != A or p.source != A:
            raise DataNotExact("sequence must pass through A")
        if not i.is_injective():
            raise DataNotExact("first map is not injective")
        if not p.is_surjective():
            raise DataNotExact("second map is not surjective")
        if not p.compose(i).is_zero():
            raise DataNotExact("composition is not zero")
        if subquotient(A, p.kernel_lattice(), i.image_vectors()).ngens:
            raise DataNotExact("kernel of the second map exceeds the image of the first")
        bound = i.source.tau() * p.target.tau()
        proof.add("(iii) tau(A) <= tau(A') + tau(A'')", tA <= bound, f"{tA} <= {bound}")
    if filtration is not None:
        steps = [[list(c) for c in IntMatrix.identity(A.ngens).columns()]]
        steps += [[list(v) for v in F] for F in filtration] + [[]]
        prod = 1
        grs = []
        for top, bottom in zip(steps, steps[1:]):
            for v in bottom:
                if _coords(_lattice_basis(top + _std_relations(A), A.ngens), v, A.ngens) is None:
                    raise DataNotExact("filtration is not decreasing")
            gr = subquotient(A, top, bottom)
            grs.append(repr(gr))
            prod *= gr.tau()
        proof.add("(iv) tau(A) <= sum tau(gr)", tA <= prod, f"{tA} <= {prod} over {grs}")
    proof.data = {"A": A.to_json(), "tau_A": tA}
    return proof


def random_group(rng: random.Random, max_gens: int = 3, max_order: int = 12) -> FgAbGroup:
    rank = rng.randint(0, 2)
    orders = [rng.randint(2, max_order) for _ in range(rng.randint(0, max_gens))]
    return FgAbGroup.from_orders(rank, orders)


def _random_vector(rng: random.Random, A: FgAbGroup, bound: int = 6) -> list[int]:
    return [rng.randint(0, o - 1) if o else rng.randint(-bound, bound) for o in A.orders]


def random_tau0_instance(rng: random.Random) -> dict:
    """Random data for all four checks, built to satisfy their hypotheses."""
    A = random_group(rng)
    sub = [_random_vector(rng, A) for _ in range(rng.randint(0, 3))]
    # rational isomorphism: quotient by torsion elements only
    t = len(A.invariant_factors)
    tors = [v[:t] + [0] * A.free_rank for v in (_random_vector(rng, A) for _ in range(rng.randint(0, 2)))]
    _, surj = quotient(A, tors)
    S, incl = subgroup(A, sub)
    _, proj = quotient(A, [list(c) for c in incl.matrix.columns()])
    F1 = sub
    c = rng.randint(1, 3)
    F2 = [[c * x for x in v] for v in sub[:1]]
    return {"A": A, "subgroup_gens": sub, "surjection": surj, "sequence": (incl, proj),
            "filtration": [F1, F2]}


# ---------------------------------------------------------------------------
# graded groups


@dataclass(frozen=True)
class GradedGroup:
    """``H^•`` with finite support: degree → group."""

    degrees: tuple[tuple[int, FgAbGroup], ...]
    name: str = ""

    def __post_init__(self):
        d = tuple(sorted((int(k), v) for k, v in dict(self.degrees).items() if not v.is_trivial()))
        object.__setattr__(self, "degrees", d)

    @classmethod
    def from_dict(cls, data: Mapping[int, FgAbGroup], name: str = "") -> "GradedGroup":
        return cls(tuple(data.items()), name)

    def __getitem__(self, k: int) -> FgAbGroup:
        return dict(self.degrees).get(k, FgAbGroup())

    def support(self) -> list[int]:
        return [k for k, _ in self.degrees]

    def parity(self, parity: int) -> FgAbGroup:
        out = FgAbGroup()
        for k, A in self.degrees:
            if k % 2 == parity % 2:
                out = out + A
        return out

    def odd(self) -> FgAbGroup:
        return self.parity(1)

    def even(self) -> FgAbGroup:
        return self.parity(0)

    def betti(self) -> dict[int, int]:
        return {k: A.free_rank for k, A in self.degrees}

    def to_json(self) -> dict:
        out = {"degrees": {str(k): A.to_json() for k, A in self.degrees}}
        if self.name:
            out["name"] = self.name
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "GradedGroup":
        if not isinstance(data, Mapping) or "degrees" not in data:
            raise InvalidInput("graded group JSON needs a 'degrees' object")
        unknown = set(data) - {"degrees", "name", "derivation"}
        if unknown:
            raise InvalidInput(f"unknown graded-group keys: {sorted(unknown)}")
        try:
            return cls(tuple((int(k), FgAbGroup.from_json(v)) for k, v in data["degrees"].items()),
                       data.get("name", ""))
        except (TypeError, ValueError, AttributeError) as exc:
            raise InvalidInput(f"bad graded group: {exc}") from exc


def kunneth_torsion_free(HM: GradedGroup, HM2: GradedGroup) -> GradedGroup:
    """``H^p(M × M') = ⊕_{i+j=p} H^i(M) ⊗ ℤ^{b_j(M')}`` for torsion-free ``H^•(M')``."""
    for k, A in HM2.degrees:
        if not A.is_torsion_free():
            raise TorsionInSecondFactor(f"H^{k} of the second factor has torsion {A!r}")
    out: dict[int, FgAbGroup] = {}
    for i, A in HM.degrees:
        for j, Bj in HM2.degrees:
            out[i + j] = out.get(i + j, FgAbGroup()) + A * Bj.free_rank
    name = f"{HM.name} x {HM2.name}" if HM.name and HM2.name else ""
    return GradedGroup.from_dict(out, name)


# ---------------------------------------------------------------------------
# spectral pages


@dataclass
class SSPage:
    """A page ``E_r`` with entries at finitely many ``(i, j)``.

    ``differentials`` maps a source position to a :class:`Hom` landing at
    ``(i + r, j - r + 1)``; missing sources mean zero maps.
    """

    r: int
    grid: dict[tuple[int, int], FgAbGroup]
    differentials: dict[tuple[int, int], Hom] = field(default_factory=dict)
    label: str = ""

    def __post_init__(self):
        self.grid = {k: v for k, v in sorted(self.grid.items()) if not v.is_trivial()}
        for src, d in self.differentials.items():
            self._check_differential(src, d)
        self.check_d_squared()

    def entry(self, i: int, j: int) -> FgAbGroup:
        return self.grid.get((i, j), FgAbGroup())

    def target_of(self, i: int, j: int) -> tuple[int, int]:
        return i + self.r, j - self.r + 1

    def _check_differential(self, src: tuple[int, int], d: Hom) -> None:
        tgt = self.target_of(*src)
        if d.source != self.entry(*src) or d.target != self.entry(*tgt):
            raise DifferentialError(
                f"d_{self.r} from {src} must map {self.entry(*src)!r} -> {self.entry(*tgt)!r} "
                f"at {tgt} (bidegree ({self.r}, {1 - self.r}))")

    def set_differential(self, src: tuple[int, int], matrix: IntMatrix) -> None:
        tgt = self.target_of(*src)
        d = Hom(self.entry(*src), self.entry(*tgt), matrix)
        self._check_differential(src, d)
        self.differentials[src] = d
        self.check_d_squared()

    def d(self, src: tuple[int, int]) -> Hom:
        return self.differentials.get(src) or Hom.zero(self.entry(*src), self.entry(*self.target_of(*src)))

    def check_d_squared(self) -> None:
        for src in self.differentials:
            mid = self.target_of(*src)
            if mid in self.differentials and not self.d(mid).compose(self.d(src)).is_zero():
                raise DifferentialError(f"d∘d != 0 through {mid}")

    def diagonal_tau(self, p: int) -> int:
        return math.prod(A.tau() for (i, j), A in self.grid.items() if i + j == p)

    def diagonals(self) -> list[int]:
        return sorted({i + j for i, j in self.grid})

    def parity_tau(self, parity: int) -> int:
        return math.prod(self.diagonal_tau(p) for p in self.diagonals() if p % 2 == parity % 2)

    def diagonal_group(self, p: int) -> FgAbGroup:
        out = FgAbGroup()
        for (i, j), A in self.grid.items():
            if i + j == p:
                out = out + A
        return out

    def to_json(self) -> dict:
        return {
            "page": self.r,
            "label": self.label,
            "entries": [{"i": i, "j": j, "group": A.to_json()} for (i, j), A in self.grid.items()],
            "differentials": [
                {"source": list(s), "target": list(self.target_of(*s)), "matrix": d.matrix.to_json()}
                for s, d in sorted(self.differentials.items())
            ],
            "diagonal_tau": {str(p): self.diagonal_tau(p) for p in self.diagonals()},
        }


def ah_e2(H: GradedGroup, periods: int = 1) -> SSPage:
    """``E_2^{ij} = H^i`` for ``j`` even, ``0`` for ``j`` odd, over ``periods`` rows ``j = 0, -2, …``."""
    if periods < 1:
        raise InvalidInput("at least one period")
    grid = {(i, -2 * k): A for k in range(periods) for i, A in H.degrees}
    return SSPage(2, grid, label=f"Atiyah-Hirzebruch E2 of {H.name or 'M'}")


def leray_e2_severi_brauer(H_B: GradedGroup, d: int, r_max: int | None = None) -> SSPage:
    """Rows ``j = 2r`` carry ``H^•(B)`` for ``0 ≤ r ≤ r_max`` (default ``d - 1``,
    the cohomology range of the fiber ``ℙ^{d-1}``)."""
    if d < 1:
        raise InvalidInput("d >= 1 required")
    r_max = d - 1 if r_max is None else r_max
    if r_max < 0:
        raise InvalidInput("r_max >= 0 required")
    grid = {(i, 2 * r): A for r in range(r_max + 1) for i, A in H_B.degrees}
    return SSPage(2, grid, label=f"Leray E2, relative dimension {d - 1}, rows 0..{2 * r_max}")


def install_d3(page: SSPage, matrix: IntMatrix, row: int = 1) -> SSPage:
    """The page ``E_3`` (same entries) with ``d_3: (0, 2·row) → (3, 2·row − 2)`` installed."""
    if page.differentials:
        raise DifferentialError("page already carries differentials")
    if page.r > 3:
        raise DifferentialError("d_3 can only be installed on E_2 or E_3")
    out = SSPage(3, dict(page.grid), label=page.label)
    out.set_differential((0, 2 * row), matrix)
    return out


def turn_page(page: SSPage) -> tuple[SSPage, dict]:
    """``E_{r+1} = ker d_r / im d_r`` with per-diagonal τ before and after.

    Every installed differential must vanish after tensoring with ℚ (the
    standing hypothesis of the τ-lemma); otherwise a new torsion class could
    appear and the τ bound would not apply.
    """
    for src, d in page.differentials.items():
        if not d.is_rationally_zero():
            raise DifferentialError(f"d_{page.r} from {src} is non-zero after tensoring with Q")
    new_grid: dict[tuple[int, int], FgAbGroup] = {}
    positions = set(page.grid)
    for pos in positions:
        A = page.grid[pos]
        out = page.d(pos)
        src = (pos[0] - page.r, pos[1] + page.r - 1)
        into = page.d(src)
        new_grid[pos] = subquotient(A, out.kernel_lattice(), into.image_vectors())
    nxt = SSPage(page.r + 1, new_grid, label=page.label)
    diags = sorted(set(page.diagonals()) | set(nxt.diagonals()))
    before = {p: page.diagonal_tau(p) for p in diags}
    after = {p: nxt.diagonal_tau(p) for p in diags}
    info = {
        "before": before,
        "after": after,
        "strict_decrease": [p for p in diags if after[p] < before[p]],
        "increase": [p for p in diags if after[p] > before[p]],
    }
    if info["increase"]:
        raise VerificationFailure(f"tau increased on diagonals {info['increase']}")
    return nxt, info


def random_page(rng: random.Random, size: int = 3) -> SSPage:
    """A random page with one round of rationally trivial differentials."""
    r = rng.randint(2, 3)
    grid = {}
    for i in range(size + r):
        for j in range(-r, size):
            if rng.random() < 0.6:
                grid[(i, j)] = random_group(rng, max_gens=2, max_order=8)
    page = SSPage(r, grid)
    for src in sorted(page.grid):
        tgt = page.target_of(*src)
        if tgt not in page.grid or rng.random() < 0.3:
            continue
        A, B = page.entry(*src), page.entry(*tgt)
        rows = []
        for t, b in enumerate(B.orders):
            row = []
            for a in A.orders:
                if not b:
                    row.append(0)
                else:
                    step = b // math.gcd(a, b) if a else 1
                    row.append(step * rng.randint(0, b))
            rows.append(row)
        M = IntMatrix.from_rows(rows, A.ngens)
        try:
            page.set_differential(src, M)
        except DifferentialError:
            page.differentials.pop(src, None)
    return page


# ---------------------------------------------------------------------------
# the torsion audit


def audit_theorem_c(
    H_B: GradedGroup,
    d: int,
    d3: IntMatrix,
    *,
    row: int = 1,
    r_max: int | None = None,
    k1_equals_h_odd: bool = True,
) -> dict:
    """Odd-torsion bookkeeping for a Severi–Brauer fibration ``E → B``.

    The ``E_2`` page has ``r_max + 1`` copies of ``H^•(B)``, so its odd
    part has τ equal to ``(r_max + 1)·τ(H^odd(B))``; with the default range
    that is ``d·τ(H^odd(B))``.  A non-zero ``d_3`` out of ``(0, 2·row)``
    lands in the odd diagonal ``3 + 2·row − 2`` and forces a strict drop
    there.  The chain ``τ(K_1(E)) ≤ τ(H^odd(E)) ≤ τ(E_4^odd) < d·τ(H^odd(B))
    = d·τ(K_1(B))`` is certified from the computed numbers, the last
    equality being the caller's assertion ``k1_equals_h_odd``.
    """
    E2 = leray_e2_severi_brauer(H_B, d, r_max)
    base_odd = H_B.odd().tau()
    e2_odd = E2.parity_tau(1)
    rows = (d - 1 if r_max is None else r_max) + 1
    report: dict = {
        "base": H_B.to_json(),
        "d": d,
        "rows": [2 * r for r in range(rows)],
        "row_range_default": r_max is None,
        "tau_H_odd_B": base_odd,
        "tau_E2_odd": e2_odd,
        "d_times_tau_H_odd_B": base_odd ** d,
        "conventions": ["tau as torsion order: 'd * tau' is the d-th power of the order"],
    }
    checks = Proof("tau(K1(E)) < d tau(K1(B)) for a Severi-Brauer fibration", citations.BOUND)
    checks.add("E2 odd tau = (rows) * tau(H_odd(B))", e2_odd == base_odd ** rows,
               f"{e2_odd} vs {base_odd}^{rows}")
    E3 = install_d3(E2, d3, row=row)
    dd = E3.d((0, 2 * row))
    if dd.is_zero():
        report.update({
            "certified": False,
            "status": "d3-zero",
            "reason": "d3 is zero in the target group, so no strict inequality can be derived",
            "checks": checks.to_json(),
            "citation": citations.BOUND,
        })
        return report
    E4, info = turn_page(E3)
    e4_odd = E4.parity_tau(1)
    bound = base_odd ** d
    checks.add("d3 non-zero and rationally trivial", True,
               f"d3 {list(dd.matrix.column(0)) if dd.matrix.cols else []}")
    checks.add("tau(E4 odd) < tau(E2 odd)", e4_odd < e2_odd, f"{e4_odd} < {e2_odd}")
    checks.add("tau(E4 odd) < d * tau(H_odd(B))", e4_odd < bound, f"{e4_odd} < {bound}")
    if not k1_equals_h_odd:
        checks.add("hypothesis tau(K1(B)) = tau(H_odd(B)) asserted", False, "not asserted by the caller")
    certified = checks.passed
    report.update({
        "E3": E3.to_json(),
        "E4": E4.to_json(),
        "turn": {k: {str(p): v for p, v in info[k].items()} if isinstance(info[k], dict) else info[k]
                 for k in info},
        "tau_E4_odd": e4_odd,
        "certified": certified,
        "status": "certified" if certified else "not certified",
        "chain": [
            {"step": "tau(K1(E)) <= tau(H_odd(E))", "citation": "Atiyah-Hirzebruch bound (tau lemma (i))"},
            {"step": f"tau(H_odd(E)) <= tau(E4 odd) = {e4_odd}", "citation": citations.TAU_SS},
            {"step": f"{e4_odd} < {bound} = d * tau(H_odd(B))", "citation": citations.BOUND},
            {"step": "d * tau(H_odd(B)) = d * tau(K1(B))",
             "citation": "user-asserted hypothesis (ii)", "asserted": k1_equals_h_odd},
            {"step": "tau kappa_1(mu^G(X)) < tau kappa_1(mu(X/^ex G))",
             "citation": citations.MAIN_EXAMPLE, "status": "cited consequence, not computed"},
        ],
        "checks": checks.to_json(),
        "citation": citations.BOUND,
    })
    return report


def load_fixture(name: str) -> dict:
    """A bundled JSON fixture from ``equiquot/data``."""
    try:
        text = resources.files("equiquot").joinpath("data", f"{name}.json").read_text()
    except FileNotFoundError as exc:
        raise InvalidInput(f"no bundled fixture {name!r}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"fixture {name!r} is not valid JSON: {exc}") from exc
