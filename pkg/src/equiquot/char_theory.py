"""Exact complex characters of finite permutation groups.

Tables are computed by Dixon's method: the class-multiplication matrices
are diagonalized simultaneously over ``F_p`` for a prime ``p ≡ 1 (mod e)``
(``e`` the exponent), and each eigenvector is lifted to cyclotomic values by
counting eigenvalue multiplicities of ``ρ(g)`` through discrete Fourier
inversion.  Both orthogonality relations are then checked exactly.

Conventions.  Rows are sorted by degree, trivial character first, then
lexicographically on the coefficient vectors of the values in class order.
``ζ_e`` corresponds to ``z = g^{(p-1)/e}`` for the least primitive root
``g`` mod ``p``; another choice would permute rows by a Galois automorphism.
"""
from __future__ import annotations

import math
import weakref
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

import numpy as np

from .cyclotomic import Cyclotomic
from .errors import GroupMismatch, ModulusSearchFailure, NotASubgroup, VerificationFailure
from .groups import ExactSequence, Perm, PermGroup
from .gset import GSet
from .linalg import charpoly_mod_p, nullspace_mod_p, roots_mod_p

__all__ = [
    "ClassFunction",
    "CharTable",
    "GroupAlgebraElement",
    "character_table",
    "dixon_prime",
    "restrict",
    "induce_char",
    "inner",
    "h_action_on_irr",
    "h_action_on_classes",
    "central_idempotents",
]

PRIME_SEARCH_LIMIT = 10**7


class ClassFunction:
    """A function on a group that is constant on conjugacy classes."""

    __slots__ = ("group", "values")

    def __init__(self, group: PermGroup, values: Sequence):
        if len(values) != group.num_classes:
            raise GroupMismatch("one value per conjugacy class required")
        self.group = group
        self.values = tuple(v if isinstance(v, Cyclotomic) else Cyclotomic.rational(v) for v in values)

    @classmethod
    def trivial(cls, G: PermGroup) -> "ClassFunction":
        return cls(G, [1] * G.num_classes)

    @classmethod
    def regular(cls, G: PermGroup) -> "ClassFunction":
        return cls(G, [G.order] + [0] * (G.num_classes - 1))

    @classmethod
    def from_function(cls, G: PermGroup, f) -> "ClassFunction":
        return cls(G, [f(rep) for rep in G.class_reps])

    def __call__(self, g: Perm) -> Cyclotomic:
        return self.values[self.group.class_of(g)]

    @property
    def degree(self) -> Cyclotomic:
        return self.values[0]

    def _check(self, other: "ClassFunction") -> None:
        if not self.group.same_elements(other.group):
            raise GroupMismatch("class functions on different groups")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        return ClassFunction(self.group, [a - b for a, b in zip(self.values, other.values)])

    def __mul__(self, other) -> "ClassFunction":
        if isinstance(other, ClassFunction):
            self._check(other)
            return ClassFunction(self.group, [a * b for a, b in zip(self.values, other.values)])
        return ClassFunction(self.group, [a * other for a in self.values])

    __rmul__ = __mul__

    def conjugate(self) -> "ClassFunction":
        inv = self.group.inverse_classes
        return ClassFunction(self.group, [self.values[j] for j in inv])

    def __eq__(self, other) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.group.same_elements(other.group) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return f"ClassFunction({list(self.values)})"


def inner(chi: ClassFunction, psi: ClassFunction) -> Fraction | Cyclotomic:
    """``⟨χ, ψ⟩ = |G|⁻¹ Σ_g χ(g)·conj(ψ(g))``; a ``Fraction`` when rational."""
    chi._check(psi)
    G = chi.group
    inv = G.inverse_classes
    total = Cyclotomic.rational(0)
    for j, h in enumerate(G.class_sizes):
        a = chi.values[j]
        if a:
            b = psi.values[inv[j]]
            if b:
                total = total + a * b * h
    total = total * Fraction(1, G.order)
    return total.to_fraction() if total.is_rational() else total


def restrict(chi: ClassFunction, N: PermGroup) -> ClassFunction:
    G = chi.group
    if not G.is_subgroup(N):
        raise GroupMismatch("restriction target is not a subgroup")
    return ClassFunction(N, [chi(rep) for rep in N.class_reps])


def induce_char(chi: ClassFunction, G: PermGroup) -> ClassFunction:
    """``ind_K^G χ(g) = |Z_G(g)| Σ_{k ∈ [g] ∩ K, up to K-class} χ(k)/|Z_K(k)|``."""
    K = chi.group
    if not G.is_subgroup(K):
        raise GroupMismatch("induction source is not a subgroup")
    acc = [Cyclotomic.rational(0) for _ in range(G.num_classes)]
    for j, (rep, size) in enumerate(zip(K.class_reps, K.class_sizes)):
        v = chi.values[j]
        if v:
            i = G.class_of(rep)
            acc[i] = acc[i] + v * Fraction(size, K.order)
    out = []
    for i, size in enumerate(G.class_sizes):
        out.append(acc[i] * Fraction(G.order, size) if acc[i] else acc[i])
    return ClassFunction(G, out)


@dataclass
class CharTable:
    group: PermGroup
    characters: tuple[tuple[Cyclotomic, ...], ...]
    conductor: int
    prime: int

    @property
    def classes(self) -> list[Perm]:
        return self.group.class_reps

    @property
    def class_sizes(self) -> list[int]:
        return self.group.class_sizes

    @property
    def degrees(self) -> list[int]:
        return [int(row[0].to_fraction()) for row in self.characters]

    def __len__(self) -> int:
        return len(self.characters)

    def irr(self, i: int) -> ClassFunction:
        return ClassFunction(self.group, self.characters[i])

    def irreducibles(self) -> list[ClassFunction]:
        return [self.irr(i) for i in range(len(self))]

    def row_index(self, chi: ClassFunction) -> int:
        return self.characters.index(chi.values)

    def decompose(self, chi: ClassFunction) -> list[Fraction]:
        return [inner(chi, self.irr(i)) for i in range(len(self))]

    def verify(self) -> dict[str, bool]:
        """Exact checks of both orthogonality relations and ``Σ d² = |G|``."""
        G = self.group
        r = G.num_classes
        inv = G.inverse_classes
        sizes = G.class_sizes
        rows = self.characters
        row_ok = True
        for a in range(len(rows)):
            for b in range(a, len(rows)):
                s = Cyclotomic.rational(0)
                for j in range(r):
                    x, y = rows[a][j], rows[b][inv[j]]
                    if x and y:
                        s = s + x * y * sizes[j]
                if s != (G.order if a == b else 0):
                    row_ok = False
        col_ok = True
        for j in range(r):
            for k in range(j, r):
                s = Cyclotomic.rational(0)
                for row in rows:
                    x, y = row[j], row[inv[k]]
                    if x and y:
                        s = s + x * y
                if s != (G.order // sizes[j] if j == k else 0):
                    col_ok = False
        return {
            "square": len(rows) == r,
            "degree_sum": sum(d * d for d in self.degrees) == G.order,
            "row_orthogonality": row_ok,
            "column_orthogonality": col_ok,
        }

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json(),
            "conductor": self.conductor,
            "prime": self.prime,
            "classes": [list(g) for g in self.classes],
            "class_sizes": self.class_sizes,
            "degrees": self.degrees,
            "characters": [[v.promote(self.conductor).to_json() for v in row] for row in self.characters],
        }


# ---------------------------------------------------------------------------
# Dixon

def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def dixon_prime(exponent: int, order: int) -> int:
    """Least prime ``p ≡ 1 (mod exponent)`` with ``p > 2√|G|``.

    The lower bound makes a character degree recoverable from its square
    mod ``p``: degrees ``d ≤ √|G|`` have distinct squares.
    """
    p = exponent + 1
    while p * p <= 4 * order or not _is_prime(p):
        p += exponent
        if p > PRIME_SEARCH_LIMIT:
            raise ModulusSearchFailure(f"no prime = 1 mod {exponent} below {PRIME_SEARCH_LIMIT}")
    return p


def _primitive_root(p: int) -> int:
    n = p - 1
    factors = [q for q in range(2, n + 1) if n % q == 0 and _is_prime(q)]
    for g in range(2, p):
        if all(pow(g, n // q, p) != 1 for q in factors):
            return g
    return 1  # p == 2


def _class_constants(G: PermGroup) -> np.ndarray:
    """``a[i, j, k] = #{x ∈ C_i : x⁻¹ z_k ∈ C_j}`` for class reps ``z_k``."""
    r = G.num_classes
    cls = G.class_index
    a = np.zeros((r, r, r), dtype=np.int64)
    inverses = [g.inverse() for g in G.elements]
    ci = [cls[g] for g in G.elements]
    for k, z in enumerate(G.class_reps):
        for x_inv, i in zip(inverses, ci):
            a[i, cls[x_inv * z], k] += 1
    return a


def _column_echelon(V: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Columns spanning the same space with an identity block on pivot rows."""
    R = V.T.copy() % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        R[[r, k]] = R[[k, r]]
        R[r] = (R[r] * pow(int(R[r, c]), p - 2, p)) % p
        for i in range(rows):
            if i != r and R[i, c]:
                R[i] = (R[i] - R[i, c] * R[r]) % p
        pivots.append(c)
        r += 1
    return R[:r].T.copy(), pivots


def _split_eigenspaces(mats: Sequence[np.ndarray], p: int) -> list[np.ndarray]:
    r = mats[0].shape[0]
    spaces = [np.eye(r, dtype=np.int64)]
    for M in mats:
        if all(V.shape[1] == 1 for V in spaces):
            break
        nxt = []
        for V in spaces:
            k = V.shape[1]
            if k == 1:
                nxt.append(V)
                continue
            V, piv = _column_echelon(V, p)
            X = ((M @ V) % p)[piv, :]
            pieces = []
            for lam in roots_mod_p(charpoly_mod_p(X, p), p):
                C = nullspace_mod_p((X - lam * np.eye(k, dtype=np.int64)) % p, p)
                pieces.append((V @ C) % p)
            if sum(P.shape[1] for P in pieces) != k:
                raise VerificationFailure("class matrices not simultaneously diagonalizable mod p")
            nxt.extend(pieces)
        spaces = nxt
    if any(V.shape[1] != 1 for V in spaces):
        raise VerificationFailure("common eigenspaces did not split to lines")
    return spaces


_TABLE_CACHE: "weakref.WeakKeyDictionary[PermGroup, CharTable]" = weakref.WeakKeyDictionary()


def character_table(G: PermGroup) -> CharTable:
    """Irreducible characters of ``G`` with exactly verified orthogonality."""
    cached = _TABLE_CACHE.get(G)
    if cached is not None:
        return cached
    order = G.order
    r = G.num_classes
    e = G.exponent
    p = dixon_prime(e, order)
    sizes = G.class_sizes
    inv = G.inverse_classes
    if r == 1:
        table = CharTable(G, ((Cyclotomic.rational(1, e),),), e, p)
        _TABLE_CACHE[G] = table
        return table
    a = _class_constants(G)
    vectors = _split_eigenspaces([a[i] for i in range(1, r)], p)

    z = pow(_primitive_root(p), (p - 1) // e, p)
    e_inv = pow(e, p - 2, p)
    rep_orders = [rep.order() for rep in G.class_reps]
    powers = {l: G.power_map(l) for l in range(e)}
    rows = []
    for V in vectors:
        w = V[:, 0] % p
        w = (w * pow(int(w[0]), p - 2, p)) % p
        s = sum(int(w[j]) * int(w[inv[j]]) * pow(sizes[j], p - 2, p) for j in range(r)) % p
        target = order * pow(s, p - 2, p) % p
        d = next((d for d in range(1, math.isqrt(order) + 1) if d * d % p == target), None)
        if d is None:
            raise VerificationFailure("no character degree matches the eigenvector norm")
        theta = [d * int(w[j]) * pow(sizes[j], p - 2, p) % p for j in range(r)]
        row = []
        for j in range(r):
            o = rep_orders[j]
            step = e // o
            zo = pow(z, step, p)
            o_inv = pow(o, p - 2, p)
            mult = {}
            for k in range(o):
                acc = 0
                for l in range(o):
                    acc += theta[powers[l][j]] * pow(zo, (-k * l) % o, p)
                m = acc * o_inv % p
                if m > d:
                    raise VerificationFailure("eigenvalue multiplicity exceeds degree")
                if m:
                    mult[k * step] = m
            if sum(mult.values()) != d:
                raise VerificationFailure("eigenvalue multiplicities do not sum to the degree")
            row.append(Cyclotomic.from_exponents(e, mult))
        rows.append(tuple(row))

    def key(row):
        trivial = all(v == 1 for v in row)
        return (int(row[0].to_fraction()), not trivial, tuple(v.sort_key() for v in row))

    rows.sort(key=key)
    table = CharTable(G, tuple(rows), e, p)
    checks = table.verify()
    if not all(checks.values()):
        raise VerificationFailure(f"character table checks failed: {checks}")
    _TABLE_CACHE[G] = table
    return table


# ---------------------------------------------------------------------------
# H-actions from an exact sequence

def _conj_classes_perm(N: PermGroup, g: Perm) -> tuple[int, ...]:
    """Index map ``[n] ↦ [g n g⁻¹]`` on classes of ``N``."""
    return tuple(N.class_of(rep.conj(g)) for rep in N.class_reps)


def h_action_on_classes(seq: ExactSequence) -> GSet:
    """``H`` acting on ``C(N)`` by ``h·[n] = [h̃ n h̃⁻¹]``; lift independence checked."""
    N, G, H = seq.N, seq.G, seq.H
    perms: dict[Perm, tuple[int, ...]] = {}
    for g in G.elements:
        h = seq.projection(g)
        pi = _conj_classes_perm(N, g)
        if perms.setdefault(h, pi) != pi:
            raise VerificationFailure("class action depends on the choice of lift")
    labels = [f"[{rep!r}]" for rep in N.class_reps]
    return GSet(H, labels, [perms[s] for s in H.generators], name="C(N)")


def h_action_on_irr(seq: ExactSequence) -> GSet:
    """``H`` acting on ``Irr(N)`` by ``(h·χ)(n) = χ(h̃⁻¹ n h̃)``."""
    N, G, H = seq.N, seq.G, seq.H
    table = character_table(N)
    rowpos = {row: i for i, row in enumerate(table.characters)}
    perms: dict[Perm, tuple[int, ...]] = {}
    for g in G.elements:
        h = seq.projection(g)
        if h in perms and g != seq.lifts[h]:
            continue
        ginv = g.inverse()
        cmap = _conj_classes_perm(N, ginv)
        pi = []
        for row in table.characters:
            moved = tuple(row[cmap[j]] for j in range(len(row)))
            if moved not in rowpos:
                raise VerificationFailure("conjugate of an irreducible is not irreducible")
            pi.append(rowpos[moved])
        perms[h] = tuple(pi)
    # lift independence: the class action already determines the row action
    for g in G.elements:
        if _conj_classes_perm(N, g) != _conj_classes_perm(N, seq.lifts[seq.projection(g)]):
            raise VerificationFailure("character action depends on the choice of lift")
    labels = [f"chi{i}" for i in range(len(table))]
    return GSet(H, labels, [perms[s] for s in H.generators], name="Irr(N)")


# ---------------------------------------------------------------------------
# group algebra and idempotents

class GroupAlgebraElement:
    """A finite sum ``Σ c_g g`` in ``k[G]`` with cyclotomic coefficients."""

    __slots__ = ("group", "coeffs")

    def __init__(self, group: PermGroup, coeffs: Mapping[Perm, Cyclotomic] | Iterable[tuple[Perm, object]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[Perm, Cyclotomic] = {}
        for g, c in items:
            c = c if isinstance(c, Cyclotomic) else Cyclotomic.rational(c)
            acc[g] = acc.get(g, Cyclotomic.rational(0)) + c
        self.group = group
        self.coeffs = {g: c for g, c in sorted(acc.items()) if c}

    @classmethod
    def one(cls, group: PermGroup) -> "GroupAlgebraElement":
        return cls(group, {group.identity: 1})

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.group, list(self.coeffs.items()) + list(other.coeffs.items()))

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, c) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.group, [(g, a * c) for g, a in self.coeffs.items()])

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        out = []
        for g, a in self.coeffs.items():
            for h, b in other.coeffs.items():
                out.append((g * h, a * b))
        return GroupAlgebraElement(self.group, out)

    def conjugate_by(self, g: Perm) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.group, [(x.conj(g), c) for x, c in self.coeffs.items()])

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(tuple(self.coeffs.items()))

    def __repr__(self) -> str:
        return " + ".join(f"({c})*{g!r}" for g, c in self.coeffs.items()) or "0"


def central_idempotents(N: PermGroup) -> list[GroupAlgebraElement]:
    """``e_W = (deg W/|N|) Σ_g χ_W(g⁻¹) g`` in character-table row order."""
    table = character_table(N)
    inv = N.inverse_classes
    cls = N.class_index
    out = []
    for row, d in zip(table.characters, table.degrees):
        c = Fraction(d, N.order)
        out.append(GroupAlgebraElement(N, [(g, row[inv[cls[g]]] * c) for g in N.elements]))
    return out


def idempotent_action(seq: ExactSequence) -> dict[Perm, tuple[int, ...]]:
    """Permutation of central idempotents of ``N`` under conjugation by lifts:
    ``h ↦ (i ↦ j)`` where ``h̃ e_i h̃⁻¹ = e_j``."""
    idem = central_idempotents(seq.N)
    pos = {e: i for i, e in enumerate(idem)}
    out = {}
    for h in seq.H.elements:
        g = seq.lifts[h]
        out[h] = tuple(pos[e.conjugate_by(g)] for e in idem)
    return out
