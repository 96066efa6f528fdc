"""Finite G-sets: orbits, inertia, extended quotients, induction, strata,
and the toy equivariant Grothendieck ring.

A :class:`GSet` stores a dense action table, one row of point indices per
group element (in the group's element order).  Points carry string labels;
derived sets (inertia, induced sets, products) build their labels from the
labels of their parts so results stay readable.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from .errors import (
    ActionNotHomomorphism,
    GroupMismatch,
    InvalidInput,
    NotASubgroup,
    PointNotInSet,
    VerificationFailure,
)
from .groups import (
    ExactSequence,
    Perm,
    PermGroup,
    are_isomorphic,
    direct_product,
    group_fingerprint,
    quotient_sequence,
    symmetric,
)

__all__ = [
    "GSet",
    "Stratum",
    "K0Class",
    "coset_space",
    "trivial_gset",
    "regular_gset",
    "disjoint_union",
    "power_gset",
    "gset_through",
    "restrict_gset",
    "product_gset",
    "orbits",
    "stabilizer",
    "quotient",
    "inertia",
    "extended_quotient",
    "extended_quotient_class_count",
    "induce",
    "stratify",
    "k0_class",
    "iner_k0",
    "gamma",
    "orbifold_euler",
]


class GSet:
    """A finite set with a left action of a permutation group."""

    def __init__(self, group: PermGroup, points: Sequence[str], generator_images: Sequence[Sequence[int]], name: str = ""):
        points = [str(p) for p in points]
        if len(set(points)) != len(points):
            raise InvalidInput("point labels must be distinct")
        if len(generator_images) != len(group.generators):
            raise InvalidInput(f"need {len(group.generators)} generator images, got {len(generator_images)}")
        m = len(points)
        gen_tabs = []
        for imgs in generator_images:
            imgs = tuple(int(i) for i in imgs)
            if sorted(imgs) != list(range(m)):
                raise ActionNotHomomorphism("generator does not act by a bijection")
            gen_tabs.append(imgs)
        self.group = group
        self.points = tuple(points)
        self.name = name
        self._pidx = {p: i for i, p in enumerate(self.points)}
        ident = tuple(range(m))
        tabs = group.extend_on_generators(gen_tabs, lambda a, b: tuple(a[i] for i in b), ident)
        for s, a in zip(group.generators, gen_tabs):
            for g in group.elements:
                if tabs[s * g] != tuple(a[i] for i in tabs[g]):
                    raise ActionNotHomomorphism("generator images do not define an action")
        self._table = [tabs[g] for g in group.elements]

    @classmethod
    def from_function(cls, group: PermGroup, points: Sequence[str], f: Callable[[Perm, str], str], name: str = "") -> "GSet":
        """Build from ``f(g, x)``; ``f`` is sampled on every element and checked
        against the action generated by its values on generators."""
        points = [str(p) for p in points]
        idx = {p: i for i, p in enumerate(points)}

        def row(g: Perm) -> tuple[int, ...]:
            try:
                return tuple(idx[f(g, p)] for p in points)
            except KeyError as exc:
                raise PointNotInSet(f"action leaves the point set: {exc}") from None

        X = cls(group, points, [row(s) for s in group.generators], name=name)
        for gi, g in enumerate(group.elements):
            if X._table[gi] != row(g):
                raise ActionNotHomomorphism("f is not a group action")
        return X

    # access -------------------------------------------------------------

    def __len__(self) -> int:
        return len(self.points)

    def __repr__(self) -> str:
        return f"<GSet {self.name or ''}: {len(self)} points under {self.group!r}>"

    def point_index(self, x: str) -> int:
        try:
            return self._pidx[x]
        except KeyError:
            raise PointNotInSet(f"{x!r} is not a point") from None

    def row(self, g: Perm) -> tuple[int, ...]:
        return self._table[self.group.index(g)]

    def act(self, g: Perm, x: str) -> str:
        return self.points[self.row(g)[self.point_index(x)]]

    def act_index(self, g: Perm, i: int) -> int:
        return self.row(g)[i]

    def generator_images(self) -> list[tuple[int, ...]]:
        return [self.row(s) for s in self.group.generators]

    def fixed_points(self, g: Perm) -> list[int]:
        r = self.row(g)
        return [i for i in range(len(self)) if r[i] == i]

    # orbits -------------------------------------------------------------

    @cached_property
    def _orbit_data(self) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
        where = [-1] * len(self)
        orbs: list[tuple[int, ...]] = []
        gens = self.generator_images()
        for start in range(len(self)):
            if where[start] >= 0:
                continue
            k = len(orbs)
            where[start] = k
            members = [start]
            for i in members:
                for a in gens:
                    j = a[i]
                    if where[j] < 0:
                        where[j] = k
                        members.append(j)
            orbs.append(tuple(sorted(members)))
        return tuple(orbs), tuple(where)

    def orbit_indices(self) -> tuple[tuple[int, ...], ...]:
        return self._orbit_data[0]

    def orbits(self) -> list[list[str]]:
        """Orbits as label lists, ordered by their first point."""
        return [[self.points[i] for i in orb] for orb in self.orbit_indices()]

    def orbit_of(self, x: str) -> list[str]:
        k = self._orbit_data[1][self.point_index(x)]
        return [self.points[i] for i in self.orbit_indices()[k]]

    def stabilizer(self, x: str) -> PermGroup:
        i = self.point_index(x)
        return self._stabilizer_index(i)

    def _stabilizer_index(self, i: int) -> PermGroup:
        members = [g for g, r in zip(self.group.elements, self._table) if r[i] == i]
        return self.group._from_members(members, name=f"Stab({self.points[i]})")

    def quotient(self) -> list[frozenset[str]]:
        return [frozenset(o) for o in self.orbits()]

    def is_free(self) -> bool:
        return all(
            r[i] != i for r in self._table[1:] for i in range(len(self))
        )

    # censuses -----------------------------------------------------------

    def point_census(self) -> Counter:
        """Multiset of stabilizer conjugacy classes over all points."""
        out: Counter = Counter()
        for orb in self.orbit_indices():
            key = self.group.subgroup_class_key(self._stabilizer_index(orb[0]))
            out[key] += len(orb)
        return out

    def orbit_census(self) -> Counter:
        """Multiset of stabilizer conjugacy classes over orbits.  Two G-sets
        are isomorphic iff their orbit censuses agree."""
        out: Counter = Counter()
        for orb in self.orbit_indices():
            out[self.group.subgroup_class_key(self._stabilizer_index(orb[0]))] += 1
        return out

    def is_isomorphic(self, other: "GSet") -> bool:
        if not self.group.same_elements(other.group):
            raise GroupMismatch("G-sets over different groups")
        return len(self) == len(other) and self.orbit_census() == other.orbit_census()

    # io -----------------------------------------------------------------

    def to_json(self, group_ref=None) -> dict:
        return {
            "group": group_ref if group_ref is not None else self.group.to_json(),
            "points": list(self.points),
            "action": {str(k): [self.points[j] for j in a] for k, a in enumerate(self.generator_images())},
        }

    @classmethod
    def from_json(cls, data: Mapping, resolve_group: Callable | None = None) -> "GSet":
        unknown = set(data) - {"group", "points", "action", "name"}
        if unknown:
            raise InvalidInput(f"unknown G-set keys: {sorted(unknown)}")
        try:
            ref = data["group"]
            if resolve_group is not None:
                group = resolve_group(ref)
            elif isinstance(ref, Mapping):
                group = PermGroup.from_json(ref)
            else:
                raise InvalidInput("group reference needs a resolver")
            points = [str(p) for p in data["points"]]
            idx = {p: i for i, p in enumerate(points)}
            action = data["action"]
            if set(action) != {str(k) for k in range(len(group.generators))}:
                raise InvalidInput("action must give images for every generator index")
            images = []
            for k in range(len(group.generators)):
                row = []
                for v in action[str(k)]:
                    if isinstance(v, int) and not isinstance(v, bool):
                        row.append(v)
                    elif str(v) in idx:
                        row.append(idx[str(v)])
                    else:
                        raise PointNotInSet(f"unknown point {v!r}")
                if len(row) != len(points):
                    raise InvalidInput("action row has the wrong length")
                images.append(row)
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad G-set description: {exc}") from exc
        return cls(group, points, images, name=str(data.get("name", "")))


# ---------------------------------------------------------------------------
# constructors

def trivial_gset(G: PermGroup, points: Sequence[str] = ("pt",)) -> GSet:
    m = len(points)
    return GSet(G, points, [tuple(range(m))] * len(G.generators), name="trivial")


def regular_gset(G: PermGroup) -> GSet:
    """``G`` acting on itself by left translation."""
    labels = [repr(g) for g in G.elements]
    return GSet(G, labels, [tuple(G.index(s * g) for g in G.elements) for s in G.generators], name="regular")


def coset_space(G: PermGroup, K: PermGroup, prefix: str = "") -> GSet:
    """``G/K`` with left multiplication; labels are the least coset members."""
    cosets = G.left_cosets(K)
    where = {g: i for i, (_, members) in enumerate(cosets) for g in members}
    labels = [f"{prefix}{rep!r}K" for rep, _ in cosets]
    images = [tuple(where[s * rep] for rep, _ in cosets) for s in G.generators]
    return GSet(G, labels, images, name=f"G/{K.name or 'K'}")


def disjoint_union(*sets: GSet) -> GSet:
    G = sets[0].group
    for X in sets[1:]:
        if not X.group.same_elements(G):
            raise GroupMismatch("disjoint union needs a common group")
    labels, images = [], [[] for _ in G.generators]
    offset = 0
    for k, X in enumerate(sets):
        labels += [f"{k}.{p}" for p in X.points]
        for row, s in zip(images, G.generators):
            row.extend(offset + j for j in X.row(s))
        offset += len(X)
    return GSet(G, labels, images, name="+".join(X.name or "?" for X in sets))


def product_gset(X: GSet, Y: GSet) -> GSet:
    """``X × Y`` with the diagonal action."""
    if not X.group.same_elements(Y.group):
        raise GroupMismatch("product needs a common group")
    m = len(Y)
    labels = [f"({x},{y})" for x in X.points for y in Y.points]
    images = [
        [X.row(s)[i] * m + Y.row(s)[j] for i in range(len(X)) for j in range(m)]
        for s in X.group.generators
    ]
    return GSet(X.group, labels, images, name=f"{X.name}x{Y.name}")


def power_gset(labels: Sequence[str], n: int, group: PermGroup | None = None) -> GSet:
    """``X^n`` for a plain set ``X`` under ``Σ_n`` permuting coordinates.

    ``σ·(x_1,…,x_n) = (x_{σ⁻¹(1)},…,x_{σ⁻¹(n)})``, a left action.
    """
    G = group if group is not None else symmetric(n)
    labels = [str(x) for x in labels]
    tuples = list(itertools.product(range(len(labels)), repeat=n))
    tidx = {t: i for i, t in enumerate(tuples)}

    def move(s: Perm, t: tuple[int, ...]) -> int:
        out = [0] * n
        for i in range(n):
            out[s[i]] = t[i]
        return tidx[tuple(out)]

    names = ["(" + ",".join(labels[i] for i in t) + ")" for t in tuples]
    images = [[move(s, t) for t in tuples] for s in G.generators] if n else []
    return GSet(G, names, images, name=f"X^{n}")


def restrict_gset(X: GSet, K: PermGroup) -> GSet:
    """The same points as a set over a subgroup ``K``."""
    if not X.group.is_subgroup(K):
        raise NotASubgroup("K must be a subgroup of the acting group")
    return GSet(K, X.points, [X.row(s) for s in K.generators], name=f"res({X.name})")


def gset_through(seq: ExactSequence, Y: GSet) -> GSet:
    """Pull an ``H``-set back to a ``G``-set along the projection."""
    if not Y.group.same_elements(seq.H):
        raise GroupMismatch("Y must be a set over H")
    images = [Y.row(seq.projection(s)) for s in seq.G.generators]
    return GSet(seq.G, Y.points, images, name=f"inf({Y.name})")


# ---------------------------------------------------------------------------
# functional interface

def orbits(X: GSet) -> list[list[str]]:
    return X.orbits()


def stabilizer(X: GSet, x: str) -> PermGroup:
    return X.stabilizer(x)


def quotient(X: GSet) -> list[frozenset[str]]:
    return X.quotient()


def inertia(X: GSet) -> GSet:
    """Pairs ``(g, x)`` with ``g·x = x``; ``h·(g, x) = (hgh⁻¹, h·x)``."""
    G = X.group
    pairs = [(gi, i) for gi, r in enumerate(X._table) for i in range(len(X)) if r[i] == i]
    pidx = {p: k for k, p in enumerate(pairs)}
    labels = [f"{G.elements[gi]!r}@{X.points[i]}" for gi, i in pairs]
    images = []
    for s in G.generators:
        sinv = s.inverse()
        row_s = X.row(s)
        conj = [G.index(s * g * sinv) for g in G.elements]
        images.append([pidx[(conj[gi], row_s[i])] for gi, i in pairs])
    return GSet(G, labels, images, name=f"I({X.name})")


def extended_quotient_class_count(X: GSet) -> int:
    """``Σ_{[g]} |X^g / Z(g)|``."""
    G = X.group
    total = 0
    for rep in G.class_reps:
        Z = G.centralizer(rep)
        fixed = X.fixed_points(rep)
        fset = set(fixed)
        seen: set[int] = set()
        for i in fixed:
            if i in seen:
                continue
            total += 1
            stack = [i]
            seen.add(i)
            while stack:
                j = stack.pop()
                for s in Z.generators:
                    k = X.row(s)[j]
                    if k not in seen:
                        assert k in fset
                        seen.add(k)
                        stack.append(k)
    return total


def extended_quotient(X: GSet) -> list[frozenset[str]]:
    """``X/^ex G``: the orbit set of the inertia.  The size is cross-checked
    against the class formula and a disagreement is raised, not returned."""
    orbs = inertia(X).quotient()
    other = extended_quotient_class_count(X)
    if len(orbs) != other:
        raise VerificationFailure(f"inertia orbits {len(orbs)} != class formula {other}")
    return orbs


def induce(K: PermGroup, Y: GSet, G: PermGroup) -> GSet:
    """``G ×_K Y``: points ``(r, y)`` for least coset representatives ``r``,
    with ``g·(r, y) = (r', k·y)`` where ``g r = r' k``."""
    if not G.is_subgroup(K):
        raise NotASubgroup("K must be a subgroup of G")
    if not Y.group.same_elements(K):
        raise GroupMismatch("Y must be a set over K")
    cosets = G.left_cosets(K)
    reps = [rep for rep, _ in cosets]
    where = {g: i for i, (_, members) in enumerate(cosets) for g in members}
    m = len(Y)
    labels = [f"{r!r}*{y}" for r in reps for y in Y.points]
    images = []
    for s in G.generators:
        row = []
        for r in reps:
            t = s * r
            j = where[t]
            k = reps[j].inverse() * t
            kr = Y.row(k)
            row.extend(j * m + kr[i] for i in range(m))
        images.append(row)
    return GSet(G, labels, images, name=f"ind({Y.name})")


@dataclass(frozen=True)
class Stratum:
    """Points whose stabilizer is exactly ``N``, as a set over ``G_λ = N_G(N)``
    on which ``H_λ = G_λ/N`` acts freely."""

    N: PermGroup
    G_lambda: PermGroup
    H_lambda: PermGroup
    Y: GSet
    sequence: ExactSequence
    ambient_order: int

    @property
    def induced_size(self) -> int:
        """``|ind_{G_λ}^G Y_λ| = [G : G_λ]·|Y_λ|``."""
        return len(self.Y) * (self.ambient_order // self.G_lambda.order)


def stratify(X: GSet) -> list[Stratum]:
    """One stratum per conjugacy class of occurring stabilizers, ordered by
    decreasing stabilizer order and then by class label."""
    G = X.group
    reps: dict[tuple, PermGroup] = {}
    for orb in X.orbit_indices():
        st = X._stabilizer_index(orb[0])
        key = G.subgroup_class_key(st)
        if key not in reps:
            reps[key] = st
    keys = sorted(reps, key=lambda k: (-len(k), k))
    out = []
    for key in keys:
        N = reps[key]
        Gl = G.normalizer(N)
        nset = N.element_set
        ys = [
            i for i in range(len(X))
            if {g for g, r in zip(G.elements, X._table) if r[i] == i} == nset
        ]
        images = [[ys.index(X.row(s)[i]) for i in ys] for s in Gl.generators]
        Y = GSet(Gl, [X.points[i] for i in ys], images, name=f"Y[{N.order}]")
        seq = quotient_sequence(Gl, N)
        for i in range(len(Y)):
            if Y._stabilizer_index(i).element_set != nset:
                raise VerificationFailure("H_lambda does not act freely on its stratum")
        out.append(Stratum(N, Gl, seq.H, Y, seq, G.order))
    return out


# ---------------------------------------------------------------------------
# toy K_0

class K0Class:
    """Finite integer combinations of symbols ``{pt}^K``.

    Terms are kept as ``(group, coefficient)`` with isomorphic groups merged
    (see :func:`groups.are_isomorphic` for the bounds of that test).
    """

    def __init__(self, terms: Iterable[tuple[PermGroup, int]] = ()):
        merged: list[list] = []
        buckets: dict[tuple, list[int]] = {}
        for K, c in terms:
            if not c:
                continue
            fp = group_fingerprint(K)
            for pos in buckets.get(fp, []):
                if are_isomorphic(merged[pos][0], K):
                    merged[pos][1] += c
                    break
            else:
                buckets.setdefault(fp, []).append(len(merged))
                merged.append([K, c])
        kept = [(K, c) for K, c in merged if c]
        kept.sort(key=lambda t: (group_fingerprint(t[0]), t[0].name))
        self.terms: tuple[tuple[PermGroup, int], ...] = tuple(kept)

    @classmethod
    def point(cls, K: PermGroup) -> "K0Class":
        return cls([(K, 1)])

    def __add__(self, other: "K0Class") -> "K0Class":
        return K0Class(self.terms + other.terms)

    def __neg__(self) -> "K0Class":
        return K0Class((K, -c) for K, c in self.terms)

    def __sub__(self, other: "K0Class") -> "K0Class":
        return self + (-other)

    def __mul__(self, other: "K0Class") -> "K0Class":
        return K0Class(
            (direct_product(K, L), a * b) for K, a in self.terms for L, b in other.terms
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, K0Class):
            return NotImplemented
        return (self - other).terms == ()

    __hash__ = None  # type: ignore[assignment]

    def total(self) -> int:
        return sum(c for _, c in self.terms)

    def summary(self) -> list[tuple[int, str, int]]:
        return [(K.order, K.name, c) for K, c in self.terms]

    def __repr__(self) -> str:
        inner = " + ".join(f"{c}*{{pt}}^[{K.name or '?'}:{K.order}]" for K, c in self.terms)
        return f"K0Class({inner or '0'})"


def k0_class(X: GSet) -> K0Class:
    return K0Class((X._stabilizer_index(orb[0]), 1) for orb in X.orbit_indices())


def iner_k0(c: K0Class) -> K0Class:
    """``{pt}^K ↦ Σ_{[g]∈C(K)} {pt}^{Z_K(g)}``, extended linearly."""
    return K0Class((K.centralizer(rep), a) for K, a in c.terms for rep in K.class_reps)


def gamma(c: K0Class) -> int:
    return c.total()


def orbifold_euler(X: GSet, m: int = 1) -> int:
    if m < 1:
        raise InvalidInput("m >= 1 required")
    c = k0_class(X)
    for _ in range(m):
        c = iner_k0(c)
    return gamma(c)
