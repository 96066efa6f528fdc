"""Finite permutation groups with fully enumerated element lists.

Elements are :class:`Perm` tuples on ``{0, ..., m-1}``; the product ``g * h``
is "first ``h``, then ``g``", so ``(g * h)(i) == g[h[i]]`` and every action in
this package is a left action.

Groups here are small (a few thousand elements at most), so everything is
brute force: closure by breadth-first search, classes by conjugation orbits,
centralizers and normalizers by filtering.  That is the point; every
statement the rest of the package makes about a group can be checked
exhaustively.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Mapping, Sequence

from . import citations
from .errors import (
    ActionNotHomomorphism,
    ElementNotInGroup,
    InvalidInput,
    NotASubgroup,
)
from .proof import Proof

__all__ = [
    "Perm",
    "PermGroup",
    "GroupHom",
    "ExactSequence",
    "Partition",
    "symmetric",
    "alternating",
    "cyclic",
    "trivial_group",
    "direct_product",
    "semidirect_product",
    "wreath_product",
    "heisenberg",
    "unitriangular_extension",
    "binary_tetrahedral",
    "a4cover",
    "quotient_sequence",
    "partitions",
    "g_of_partition",
    "cycle_type",
    "young_subgroup",
    "block_permuting_subgroup",
    "block_cycle_subgroup",
    "centralizer_report",
    "are_isomorphic",
    "group_fingerprint",
]


class Perm(tuple):
    """A permutation of ``range(len(self))`` stored as its image list.

    Ordering is the tuple ordering, i.e. lexicographic on images.
    """

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        return super().__new__(cls, images)

    @classmethod
    def checked(cls, images: Iterable[int]) -> "Perm":
        p = cls(images)
        if sorted(p) != list(range(len(p))):
            raise InvalidInput(f"not a permutation: {list(p)}")
        return p

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + list(cyc[:1])):
                images[a] = b
        return cls.checked(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __mul__(self, other: "Perm") -> "Perm":  # type: ignore[override]
        return Perm([self[i] for i in other])

    def __rmul__(self, other):  # pragma: no cover - tuple repetition guard
        return NotImplemented

    def inverse(self) -> "Perm":
        inv = [0] * len(self)
        for i, j in enumerate(self):
            inv[j] = i
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(len(self))
        base = self
        while k:
            if k & 1:
                result = base * result
            base = base * base
            k >>= 1
        return result

    def conj(self, g: "Perm") -> "Perm":
        """``g * self * g^-1``."""
        out = [0] * len(self)
        for i, j in enumerate(self):
            out[g[i]] = g[j]
        return Perm(out)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * len(self)
        out = []
        for start in range(len(self)):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self[i]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return math.lcm(*(len(c) for c in self.cycles())) if len(self) else 1

    def __repr__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


class PermGroup:
    """A finite group given by permutation generators.

    The full element list is computed once, sorted lexicographically, and
    cached; ``elements[0]`` is always the identity.
    """

    def __init__(
        self,
        generators: Iterable[Sequence[int]],
        degree: int | None = None,
        name: str = "",
    ):
        gens = [Perm.checked(g) for g in generators]
        if degree is None:
            if not gens:
                raise InvalidInput("degree required for a group without generators")
            degree = len(gens[0])
        if any(len(g) != degree for g in gens):
            raise InvalidInput("generators of mixed degree")
        ident = Perm.identity(degree)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(g for g in gens if g != ident)
        self.name = name
        # BFS spanning tree: element -> (generator index, parent element)
        tree: dict[Perm, tuple[int, Perm] | None] = {ident: None}
        order = [ident]
        queue = deque(order)
        while queue:
            p = queue.popleft()
            for k, s in enumerate(self.generators):
                q = s * p
                if q not in tree:
                    tree[q] = (k, p)
                    order.append(q)
                    queue.append(q)
        self._tree = tree
        self._bfs = order
        self.elements: tuple[Perm, ...] = tuple(sorted(order))
        self._index = {g: i for i, g in enumerate(self.elements)}

    # basic structure -----------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return g in self._index

    def index(self, g: Perm) -> int:
        try:
            return self._index[g]
        except KeyError:
            raise ElementNotInGroup(f"{g!r} not in {self.name or 'group'}") from None

    @property
    def identity(self) -> Perm:
        return self.elements[0]

    @cached_property
    def element_set(self) -> frozenset[Perm]:
        return frozenset(self.elements)

    def __repr__(self) -> str:
        label = self.name or "PermGroup"
        return f"<{label}: order {self.order}, degree {self.degree}>"

    def same_elements(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.element_set == other.element_set

    def word_tree(self) -> list[tuple[Perm, int | None, Perm | None]]:
        """BFS order of elements with the generator edge that reached each one."""
        out = []
        for p in self._bfs:
            edge = self._tree[p]
            out.append((p, None, None) if edge is None else (p, edge[0], edge[1]))
        return out

    def extend_on_generators(self, gen_images: Sequence, mul: Callable, one) -> dict:
        """Extend generator images along the BFS tree (no homomorphism check)."""
        images = {self.identity: one}
        for p, k, parent in self.word_tree()[1:]:
            images[p] = mul(gen_images[k], images[parent])
        return images

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a, b in itertools.combinations(gens, 2))

    @cached_property
    def exponent(self) -> int:
        return math.lcm(*(g.order() for g in self.elements))

    # classes ------------------------------------------------------------

    @cached_property
    def conjugacy_classes(self) -> tuple[tuple[Perm, frozenset[Perm]], ...]:
        """Classes as ``(least member, members)``, sorted by representative."""
        seen: set[Perm] = set()
        classes = []
        gens_inv = [(s, s.inverse()) for s in self.generators]
        for g in self.elements:
            if g in seen:
                continue
            orbit = {g}
            queue = [g]
            while queue:
                x = queue.pop()
                for s, _ in gens_inv:
                    y = x.conj(s)
                    if y not in orbit:
                        orbit.add(y)
                        queue.append(y)
            seen |= orbit
            classes.append((min(orbit), frozenset(orbit)))
        classes.sort(key=lambda c: c[0])
        return tuple(classes)

    @property
    def class_reps(self) -> list[Perm]:
        return [rep for rep, _ in self.conjugacy_classes]

    @property
    def class_sizes(self) -> list[int]:
        return [len(m) for _, m in self.conjugacy_classes]

    @property
    def num_classes(self) -> int:
        return len(self.conjugacy_classes)

    @cached_property
    def class_index(self) -> dict[Perm, int]:
        out = {}
        for i, (_, members) in enumerate(self.conjugacy_classes):
            for g in members:
                out[g] = i
        return out

    def class_of(self, g: Perm) -> int:
        self.index(g)
        return self.class_index[g]

    @cached_property
    def inverse_classes(self) -> list[int]:
        return [self.class_index[rep.inverse()] for rep in self.class_reps]

    def power_map(self, k: int) -> list[int]:
        return [self.class_index[rep ** k] for rep in self.class_reps]

    # subgroups ----------------------------------------------------------

    def subgroup(self, generators: Iterable[Perm], name: str = "") -> "PermGroup":
        gens = list(generators)
        for g in gens:
            self.index(g)
        return PermGroup(gens, degree=self.degree, name=name)

    def is_subgroup(self, K: "PermGroup") -> bool:
        return K.degree == self.degree and K.element_set <= self.element_set

    def _require_subgroup(self, K: "PermGroup") -> None:
        if not self.is_subgroup(K):
            raise NotASubgroup(f"{K!r} is not a subgroup of {self!r}")

    def centralizer(self, g: Perm) -> "PermGroup":
        self.index(g)
        members = [h for h in self.elements if h * g == g * h]
        return self._from_members(members, name=f"Z({g!r})")

    def center(self) -> "PermGroup":
        members = [h for h in self.elements if all(h * s == s * h for s in self.generators)]
        return self._from_members(members, name="center")

    def normalizer(self, K: "PermGroup") -> "PermGroup":
        self._require_subgroup(K)
        kset = K.element_set
        members = [g for g in self.elements if all(s.conj(g) in kset for s in K.generators)]
        return self._from_members(members, name=f"N({K.name or 'K'})")

    def is_normal(self, K: "PermGroup") -> bool:
        self._require_subgroup(K)
        kset = K.element_set
        return all(s.conj(g) in kset for g in self.generators for s in K.generators)

    def conjugate_subgroup(self, K: "PermGroup", g: Perm) -> "PermGroup":
        return PermGroup([s.conj(g) for s in K.generators], degree=self.degree)

    def subgroup_class_key(self, K: "PermGroup") -> tuple:
        """Canonical label of the conjugacy class of ``K`` in this group.

        The label is the lexicographically least sorted element list among all
        conjugates, so two subgroups get equal labels iff they are conjugate.
        """
        self._require_subgroup(K)
        best = None
        seen = set()
        for g in self.elements:
            conj = tuple(sorted(k.conj(g) for k in K.elements))
            if conj in seen:
                continue
            seen.add(conj)
            if best is None or conj < best:
                best = conj
        return best

    def _from_members(self, members: Sequence[Perm], name: str = "") -> "PermGroup":
        # greedy generating set, so BFS closure reproduces exactly ``members``
        mset = set(members)
        gens: list[Perm] = []
        span = {self.identity}
        for g in sorted(mset):
            if g not in span:
                gens.append(g)
                span = set(PermGroup(gens, degree=self.degree).elements)
        if span != mset:
            raise NotASubgroup("member list is not closed")
        return PermGroup(gens, degree=self.degree, name=name)

    def small_generating_set(self) -> list[Perm]:
        gens: list[Perm] = []
        span = {self.identity}
        for g in self.elements:
            if g not in span:
                gens.append(g)
                span = set(PermGroup(gens, degree=self.degree).elements)
        return gens

    def left_cosets(self, K: "PermGroup") -> list[tuple[Perm, frozenset[Perm]]]:
        """Left cosets ``gK`` as (least member, members), sorted."""
        self._require_subgroup(K)
        seen: set[Perm] = set()
        out = []
        for g in self.elements:
            if g in seen:
                continue
            coset = frozenset(g * k for k in K.elements)
            seen |= coset
            out.append((min(coset), coset))
        out.sort(key=lambda c: c[0])
        return out

    # serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "generators": [list(g) for g in self.generators],
            "name": self.name,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "PermGroup":
        try:
            unknown = set(data) - {"degree", "generators", "name"}
            if unknown:
                raise InvalidInput(f"unknown group keys: {sorted(unknown)}")
            return cls(data["generators"], degree=int(data["degree"]), name=data.get("name", ""))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad group description: {exc}") from exc


class GroupHom:
    """A homomorphism given on the source generators.

    Construction extends the generator images along the source BFS tree and
    then checks ``f(s*g) == f(s)*f(g)`` for every generator ``s`` and every
    element ``g``; that is enough for the map to respect all products.
    """

    def __init__(self, source: PermGroup, target: PermGroup, images: Sequence[Perm], name: str = ""):
        if len(images) != len(source.generators):
            raise InvalidInput("need one image per source generator")
        images = [Perm(im) for im in images]
        for im in images:
            target.index(im)
        self.source = source
        self.target = target
        self.name = name
        self.images = tuple(images)
        table = source.extend_on_generators(images, lambda a, b: a * b, target.identity)
        for s, im in zip(source.generators, images):
            for g in source.elements:
                if table[s * g] != im * table[g]:
                    raise ActionNotHomomorphism(f"map {name or ''} does not respect products")
        self._table = table

    @classmethod
    def from_function(cls, source: PermGroup, target: PermGroup, f: Callable[[Perm], Perm], name: str = ""):
        return cls(source, target, [f(s) for s in source.generators], name=name)

    def __call__(self, g: Perm) -> Perm:
        try:
            return self._table[g]
        except KeyError:
            raise ElementNotInGroup(f"{g!r} not in source") from None

    def kernel(self) -> PermGroup:
        ident = self.target.identity
        return self.source._from_members([g for g in self.source.elements if self._table[g] == ident], name="ker")

    def image_set(self) -> frozenset[Perm]:
        return frozenset(self._table.values())

    def is_surjective(self) -> bool:
        return len(self.image_set()) == self.target.order

    def is_injective(self) -> bool:
        return len(self.image_set()) == self.source.order

    def fiber(self, h: Perm) -> list[Perm]:
        return [g for g in self.source.elements if self._table[g] == h]

    def lift(self, h: Perm) -> Perm:
        """Least preimage of ``h``."""
        for g in self.source.elements:
            if self._table[g] == h:
                return g
        raise ElementNotInGroup(f"{h!r} has no preimage")


class ExactSequence:
    """``1 -> N -> G -> H -> 1`` with ``N`` stored as a subgroup of ``G``."""

    def __init__(self, N: PermGroup, G: PermGroup, H: PermGroup, projection: GroupHom, name: str = ""):
        if not G.is_subgroup(N):
            raise NotASubgroup("N must be a subgroup of G")
        if projection.source is not G or projection.target is not H:
            raise InvalidInput("projection must go from G to H")
        if not G.is_normal(N):
            raise InvalidInput("N is not normal in G")
        if not projection.is_surjective():
            raise InvalidInput("projection is not surjective")
        kernel = {g for g in G.elements if projection(g) == H.identity}
        if kernel != N.element_set:
            raise InvalidInput("kernel of projection differs from N")
        if G.order != N.order * H.order:
            raise InvalidInput("|G| != |N|*|H|")
        self.N = N
        self.G = G
        self.H = H
        self.projection = projection
        self.inclusion = GroupHom(N, G, list(N.generators), name="inclusion")
        self.name = name

    def __repr__(self) -> str:
        return f"<ExactSequence {self.name or ''}: |N|={self.N.order} |G|={self.G.order} |H|={self.H.order}>"

    def lift(self, h: Perm) -> Perm:
        return self.projection.lift(h)

    @cached_property
    def lifts(self) -> dict[Perm, Perm]:
        out: dict[Perm, Perm] = {}
        for g in self.G.elements:
            out.setdefault(self.projection(g), g)
        return out

    def validate(self) -> dict[str, bool]:
        """Recheck the invariants and return them by name."""
        ident = self.H.identity
        fibers = Counter(self.projection(g) for g in self.G.elements)
        return {
            "normal": self.G.is_normal(self.N),
            "composite_trivial": all(self.projection(n) == ident for n in self.N.elements),
            "fibers_of_size_N": set(fibers.values()) == {self.N.order},
            "order": self.G.order == self.N.order * self.H.order,
        }


# ---------------------------------------------------------------------------
# constructors

def trivial_group(degree: int = 1) -> PermGroup:
    return PermGroup([], degree=degree, name="1")


def symmetric(n: int) -> PermGroup:
    if n < 0:
        raise InvalidInput("n >= 0 required")
    m = max(n, 1)
    if n <= 1:
        return PermGroup([], degree=m, name=f"S{n}")
    gens = [Perm.from_cycles(n, (0, 1))]
    if n > 2:
        gens.append(Perm.from_cycles(n, tuple(range(n))))
    return PermGroup(gens, degree=n, name=f"S{n}")


def alternating(n: int) -> PermGroup:
    if n < 3:
        return PermGroup([], degree=max(n, 1), name=f"A{n}")
    gens = [Perm.from_cycles(n, (0, 1, i)) for i in range(2, n)]
    return PermGroup(gens, degree=n, name=f"A{n}")


def cyclic(n: int) -> PermGroup:
    if n < 1:
        raise InvalidInput("n >= 1 required")
    if n == 1:
        return PermGroup([], degree=1, name="C1")
    return PermGroup([Perm.from_cycles(n, tuple(range(n)))], degree=n, name=f"C{n}")


def _embed(p: Perm, offset: int, degree: int) -> Perm:
    images = list(range(degree))
    for i, j in enumerate(p):
        images[offset + i] = offset + j
    return Perm(images)


def direct_product(*groups: PermGroup, name: str = "") -> PermGroup:
    """Direct product acting on the disjoint union of the domains."""
    degree = sum(G.degree for G in groups)
    gens = []
    offset = 0
    for G in groups:
        gens += [_embed(s, offset, degree) for s in G.generators]
        offset += G.degree
    return PermGroup(gens, degree=degree, name=name or "x".join(G.name or "?" for G in groups))


def product_element(groups: Sequence[PermGroup], parts: Sequence[Perm]) -> Perm:
    images: list[int] = []
    offset = 0
    for G, p in zip(groups, parts):
        images += [offset + j for j in p]
        offset += G.degree
    return Perm(images)


def semidirect_product(
    N: PermGroup,
    H: PermGroup,
    action: Mapping[Perm, Callable[[Perm], Perm] | Mapping[Perm, Perm]] | None = None,
    name: str = "",
) -> ExactSequence:
    """``N ⋊ H`` realized by left multiplication on the set ``N × H``.

    ``action`` maps each generator of ``H`` to an automorphism of ``N`` (a
    callable or a dict); ``None`` means the trivial action.  The action is
    extended to all of ``H`` and checked to be a homomorphism into ``Aut(N)``.
    """
    nelts, helts = N.elements, H.elements
    nidx = {n: i for i, n in enumerate(nelts)}
    ident_auto = tuple(range(len(nelts)))

    def as_table(f) -> tuple[int, ...]:
        get = f.__getitem__ if isinstance(f, Mapping) else f
        try:
            table = tuple(nidx[get(n)] for n in nelts)
        except KeyError as exc:
            raise ActionNotHomomorphism(f"automorphism leaves N: {exc}") from None
        if sorted(table) != list(range(len(nelts))):
            raise ActionNotHomomorphism("automorphism is not bijective")
        for a in N.generators:
            for b in nelts:
                if table[nidx[a * b]] != nidx[nelts[table[nidx[a]]] * nelts[table[nidx[b]]]]:
                    raise ActionNotHomomorphism("map is not an automorphism of N")
        return table

    if action is None:
        gen_auts = [ident_auto for _ in H.generators]
    else:
        missing = [h for h in H.generators if h not in action]
        if missing:
            raise ActionNotHomomorphism(f"no automorphism given for generators {missing}")
        gen_auts = [as_table(action[h]) for h in H.generators]

    def compose(a, b):
        return tuple(a[i] for i in b)

    auts = H.extend_on_generators(gen_auts, compose, ident_auto)
    for s, a in zip(H.generators, gen_auts):
        for h in helts:
            if auts[s * h] != compose(a, auts[h]):
                raise ActionNotHomomorphism("H -> Aut(N) is not a homomorphism")

    nh, hh = len(nelts), len(helts)
    hidx = {h: i for i, h in enumerate(helts)}
    ntab = [[nidx[a * b] for b in nelts] for a in nelts]
    htab = [[hidx[a * b] for b in helts] for a in helts]
    aut_list = [auts[h] for h in helts]
    degree = nh * hh

    def element(ni: int, hi: int) -> Perm:
        # (n, h) * (n', h') = (n * phi_h(n'), h h'); point (n', h') -> index n'*|H| + h'
        phi = aut_list[hi]
        images = [0] * degree
        for n2 in range(nh):
            row = ntab[ni][phi[n2]] * hh
            for h2 in range(hh):
                images[n2 * hh + h2] = row + htab[hi][h2]
        return Perm(images)

    id_n, id_h = nidx[N.identity], hidx[H.identity]
    n_gens = [element(nidx[s], id_h) for s in N.generators]
    h_gens = [element(id_n, hidx[t]) for t in H.generators]
    G = PermGroup(n_gens + h_gens, degree=degree, name=name or f"{N.name}:{H.name}")
    Nsub = PermGroup(n_gens, degree=degree, name=N.name)
    proj = GroupHom(G, H, [H.identity] * len(n_gens) + list(H.generators), name="projection")
    seq = ExactSequence(Nsub, G, H, proj, name=name or f"{N.name}:{H.name}")
    seq.section = {h: element(id_n, hidx[h]) for h in helts}  # type: ignore[attr-defined]
    seq.n_embedding = {n: element(nidx[n], id_h) for n in nelts}  # type: ignore[attr-defined]
    return seq


def wreath_product(T: PermGroup, n: int) -> ExactSequence:
    """``T ≀ Σ_n`` acting imprimitively on ``n`` blocks of ``T.degree`` points.

    A block permutation σ sends the copy of ``T`` in block ``i`` to block
    ``σ(i)``, matching ``σ(t_1,…,t_n) = (t_{σ⁻¹(1)},…,t_{σ⁻¹(n)})``.
    """
    if n < 1:
        raise InvalidInput("n >= 1 required")
    m = T.degree
    degree = m * n
    base_gens = [_embed(s, i * m, degree) for i in range(n) for s in T.generators]
    Sn = symmetric(n)

    def block_perm(sigma: Perm) -> Perm:
        images = [0] * degree
        for i in range(n):
            for a in range(m):
                images[i * m + a] = sigma[i] * m + a
        return Perm(images)

    top_gens = [block_perm(s) for s in Sn.generators]
    G = PermGroup(base_gens + top_gens, degree=degree, name=f"{T.name}wr S{n}")
    Nsub = PermGroup(base_gens, degree=degree, name=f"{T.name}^{n}")

    def to_sn(g: Perm) -> Perm:
        return Perm(g[i * m] // m for i in range(n))

    proj = GroupHom.from_function(G, Sn, to_sn, name="projection")
    return ExactSequence(Nsub, G, Sn, proj, name=f"{T.name} wr S{n}")


def _abelian_coords(n: int, rank: int) -> tuple[PermGroup, Callable[[Sequence[int]], Perm], Callable[[Perm], tuple[int, ...]]]:
    """``(Z/n)^rank`` as a direct product of cycles, with coordinate maps."""
    C = cyclic(n)
    A = direct_product(*([C] * rank), name=f"C{n}^{rank}")
    shift = Perm.from_cycles(n, tuple(range(n))) if n > 1 else Perm.identity(1)

    def elt(v: Sequence[int]) -> Perm:
        return product_element([C] * rank, [shift ** (x % n) for x in v])

    def coords(p: Perm) -> tuple[int, ...]:
        return tuple((p[i * n] - i * n) % n for i in range(rank))

    return A, elt, coords


def heisenberg(n: int) -> ExactSequence:
    """Unitriangular 3×3 matrices over ``Z/n`` acting on ``(Z/n)^3``.

    ``N`` is the center, generated by ``[x, y]`` for the standard lifts
    ``x = 1 + E12``, ``y = 1 + E23``; ``H = (Z/n)^2`` with ``x, y`` mapping to
    the two coordinate generators.  The lifts are stored as ``seq.x``,
    ``seq.y`` and the central generator as ``seq.z``.
    """
    if n < 2:
        raise InvalidInput("n >= 2 required")
    vecs = list(itertools.product(range(n), repeat=3))
    vidx = {v: i for i, v in enumerate(vecs)}

    def matrix_perm(a: int, b: int, c: int) -> Perm:
        # [[1,a,c],[0,1,b],[0,0,1]] acting on column vectors
        return Perm(vidx[((v0 + a * v1 + c * v2) % n, (v1 + b * v2) % n, v2)] for v0, v1, v2 in vecs)

    x, y = matrix_perm(1, 0, 0), matrix_perm(0, 1, 0)
    G = PermGroup([x, y], degree=len(vecs), name=f"Heis({n})")
    z = x * y * x.inverse() * y.inverse()
    N = PermGroup([z], degree=G.degree, name=f"C{n}")
    H, helt, _ = _abelian_coords(n, 2)
    H.name = f"C{n}^2"
    proj = GroupHom(G, H, [helt((1, 0)), helt((0, 1))], name="projection")
    seq = ExactSequence(N, G, H, proj, name=f"heisenberg({n})")
    seq.x, seq.y, seq.z = x, y, z  # type: ignore[attr-defined]
    seq.matrix = matrix_perm  # type: ignore[attr-defined]
    return seq


def unitriangular_extension(n: int) -> ExactSequence:
    """``(Z/n)^3 ⋊ (Z/n)^2`` with ``(a, b)`` acting by ``[[1,a,b],[0,1,0],[0,0,1]]``."""
    N, nelt, ncoord = _abelian_coords(n, 3)
    H, helt, hcoord = _abelian_coords(n, 2)

    def act(h: Perm):
        a, b = hcoord(h)

        def phi(v: Perm) -> Perm:
            v1, v2, v3 = ncoord(v)
            return nelt(((v1 + a * v2 + b * v3) % n, v2, v3))

        return phi

    seq = semidirect_product(N, H, {h: act(h) for h in H.generators}, name=f"exS0({n})")
    seq.n_coords = {seq.n_embedding[v]: ncoord(v) for v in N.elements}  # type: ignore[attr-defined]
    seq.h_coords = {h: hcoord(h) for h in H.elements}  # type: ignore[attr-defined]
    return seq


def binary_tetrahedral() -> tuple[PermGroup, PermGroup, GroupHom]:
    """``SL(2,3)`` on the 8 nonzero vectors of ``F_3^2`` and its image ``A_4``
    on the 4 lines, with the projection ``SL(2,3) -> PSL(2,3) = A_4``."""
    vecs = [v for v in itertools.product(range(3), repeat=2) if v != (0, 0)]
    vidx = {v: i for i, v in enumerate(vecs)}
    lines = sorted({min(v, ((2 * v[0]) % 3, (2 * v[1]) % 3)) for v in vecs})
    lidx = {}
    for i, l in enumerate(lines):
        lidx[l] = i
        lidx[((2 * l[0]) % 3, (2 * l[1]) % 3)] = i

    def mat(a, b, c, d) -> Perm:
        return Perm(vidx[((a * v0 + b * v1) % 3, (c * v0 + d * v1) % 3)] for v0, v1 in vecs)

    N = PermGroup([mat(1, 1, 0, 1), mat(0, 2, 1, 0)], degree=8, name="SL(2,3)")

    def to_lines(g: Perm) -> Perm:
        return Perm(lidx[vecs[g[vidx[l]]]] for l in lines)

    H = PermGroup([to_lines(s) for s in N.generators], degree=4, name="A4")
    proj = GroupHom.from_function(N, H, to_lines, name="SL(2,3)->A4")
    return N, H, proj


def a4cover() -> ExactSequence:
    """``SL(2,3) ⋊ A_4`` with ``A_4 = PSL(2,3)`` acting by conjugation through lifts.

    The sequence splits by construction while ``A_4`` does not lift to
    ``SL(2,3)``.
    """
    N, H, proj = binary_tetrahedral()
    action = {}
    for h in H.generators:
        lift = proj.lift(h)
        action[h] = (lambda lt: (lambda n: n.conj(lt)))(lift)
    return semidirect_product(N, H, action, name="a4cover")


def quotient_sequence(G: PermGroup, N: PermGroup, name: str = "") -> ExactSequence:
    """``1 -> N -> G -> G/N -> 1`` with ``G/N`` acting on the cosets of ``N``."""
    if not G.is_normal(N):
        raise InvalidInput("N is not normal in G")
    if N.order == 1:
        ident = G
        proj = GroupHom(G, ident, list(G.generators), name="identity")
        return ExactSequence(N, G, ident, proj, name=name)
    cosets = G.left_cosets(N)
    where = {}
    for i, (_, members) in enumerate(cosets):
        for g in members:
            where[g] = i

    def coset_action(g: Perm) -> Perm:
        return Perm(where[g * rep] for rep, _ in cosets)

    gens = [coset_action(s) for s in G.generators]
    H = PermGroup(gens, degree=len(cosets), name=f"{G.name}/{N.name}" if G.name else "G/N")
    proj = GroupHom(G, H, gens, name="projection")
    return ExactSequence(N, G, H, proj, name=name)


# ---------------------------------------------------------------------------
# partitions

@dataclass(frozen=True, order=True)
class Partition:
    """A partition of ``n`` as multiplicities ``(n_1, …, n_r)`` with ``n = Σ i·n_i``."""

    multiplicities: tuple[int, ...]

    def __post_init__(self):
        m = tuple(int(x) for x in self.multiplicities)
        if any(x < 0 for x in m):
            raise InvalidInput("negative multiplicity")
        while m and m[-1] == 0:
            m = m[:-1]
        object.__setattr__(self, "multiplicities", m)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        parts = list(parts)
        if any(p <= 0 for p in parts):
            raise InvalidInput("parts must be positive")
        r = max(parts, default=0)
        return cls(tuple(parts.count(i) for i in range(1, r + 1)))

    @property
    def n(self) -> int:
        return sum(i * k for i, k in enumerate(self.multiplicities, start=1))

    def parts(self) -> list[int]:
        """Parts in ascending block order (the layout used by ``g_of_partition``)."""
        return [i for i, k in enumerate(self.multiplicities, start=1) for _ in range(k)]

    def centralizer_order(self) -> int:
        return math.prod(i ** k * math.factorial(k) for i, k in enumerate(self.multiplicities, start=1))

    def __repr__(self) -> str:
        return f"Partition{self.multiplicities}"


def partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, in decreasing lexicographic order of the
    descending part lists (``[n]`` first, ``[1]*n`` last)."""
    if n < 0:
        raise InvalidInput("n >= 0 required")

    def gen(rest: int, cap: int):
        if rest == 0:
            yield []
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in gen(rest - first, first):
                yield [first] + tail

    return [Partition.from_parts(p) for p in gen(n, n)]


def _blocks(p: Partition) -> list[tuple[int, ...]]:
    out, start = [], 0
    for size in p.parts():
        out.append(tuple(range(start, start + size)))
        start += size
    return out


def g_of_partition(p: Partition) -> Perm:
    """The block-cyclic element: ``n_1`` fixed points, then ``n_2`` consecutive
    2-cycles, and so on."""
    n = p.n
    images = list(range(n))
    for block in _blocks(p):
        for a, b in zip(block, block[1:] + block[:1]):
            images[a] = b
    return Perm(images)


def cycle_type(g: Perm) -> Partition:
    return Partition.from_parts(len(c) for c in g.cycles()) if len(g) else Partition(())


def young_subgroup(p: Partition) -> PermGroup:
    """``Σ_1^{n_1} × Σ_2^{n_2} × …`` on the blocks of ``g_of_partition(p)``."""
    n = max(p.n, 1)
    gens = []
    for block in _blocks(p):
        if len(block) >= 2:
            gens.append(Perm.from_cycles(n, block[:2]))
        if len(block) >= 3:
            gens.append(Perm.from_cycles(n, block))
    return PermGroup(gens, degree=n, name=f"Young{p.multiplicities}")


def block_permuting_subgroup(p: Partition) -> PermGroup:
    """``H_ϖ = Σ_{n_1} × Σ_{n_2} × …`` permuting equal-size blocks in order."""
    n = max(p.n, 1)
    by_size: dict[int, list[tuple[int, ...]]] = {}
    for block in _blocks(p):
        by_size.setdefault(len(block), []).append(block)
    gens = []
    for blocks in by_size.values():
        for b1, b2 in zip(blocks, blocks[1:]):
            images = list(range(n))
            for a, b in zip(b1, b2):
                images[a], images[b] = b, a
            gens.append(Perm(images))
    return PermGroup(gens, degree=n, name=f"H{p.multiplicities}")


def block_cycle_subgroup(p: Partition) -> PermGroup:
    """``A_ϖ = ∏_i (ℤ/i)^{n_i}``: independent rotations of each block."""
    n = max(p.n, 1)
    gens = [Perm.from_cycles(n, block) for block in _blocks(p) if len(block) >= 2]
    return PermGroup(gens, degree=n, name=f"A{p.multiplicities}")


def centralizer_report(p: Partition) -> Proof:
    """Checks on ``Z(g_ϖ)`` inside ``Σ_n``.

    Two decompositions are tested.  The first is the internal direct product
    ``⟨g_ϖ⟩ × H_ϖ``: the factors commute and meet trivially, but their
    product has order ``lcm(parts)·∏ n_i!``, which is smaller than
    ``|Z(g_ϖ)|`` as soon as two parts share a prime factor (for instance
    ``[2, 2]``).  The second is ``A_ϖ ⋊ H_ϖ`` with ``A_ϖ`` the block rotations,
    which holds for every partition.
    """
    n = max(p.n, 1)
    Sn = symmetric(n)
    g = g_of_partition(p) if p.n else Perm.identity(1)
    Z = Sn.centralizer(g)
    H = block_permuting_subgroup(p)
    C = PermGroup([g], degree=n, name="<g>")
    A = block_cycle_subgroup(p)
    zset = Z.element_set
    proof = Proof(f"structure of the centralizer of g for partition {list(reversed(p.parts()))}",
                  citations.CENTRALIZER)
    proof.add("|Z(g)| = prod i^n_i n_i!", Z.order == p.centralizer_order(),
              f"{Z.order} vs {p.centralizer_order()}")
    proof.add("<g> and H lie in Z(g)", C.element_set <= zset and H.element_set <= zset)
    proof.add("<g> and H commute", all(a * b == b * a for a in C.generators for b in H.generators))
    proof.add("<g> meets H trivially", len(C.element_set & H.element_set) == 1)
    proof.add("|<g>|·|H| = |Z(g)|  (direct product)", C.order * H.order == Z.order,
              f"{C.order}·{H.order} vs {Z.order}")
    proof.add("A normal in Z(g)", A.element_set <= zset and Z.is_normal(A))
    proof.add("A meets H trivially", len(A.element_set & H.element_set) == 1)
    proof.add("|A|·|H| = |Z(g)|  (semidirect product)", A.order * H.order == Z.order,
              f"{A.order}·{H.order} vs {Z.order}")
    proof.data = {"partition": list(reversed(p.parts())), "Z": Z.order, "cyclic": C.order,
                  "H": H.order, "A": A.order}
    return proof


# ---------------------------------------------------------------------------
# isomorphism testing

ISO_SEARCH_LIMIT = 64


def group_fingerprint(G: PermGroup) -> tuple:
    """Isomorphism invariants: order, center order, and the multiset of
    (element order, class size) over classes."""
    stats = Counter((rep.order(), size) for rep, size in zip(G.class_reps, G.class_sizes))
    return (G.order, G.center().order, tuple(sorted(stats.items())))


def _find_isomorphism(K: PermGroup, L: PermGroup) -> dict | None:
    gens = K.small_generating_set()
    Kg = PermGroup(gens, degree=K.degree)
    tree = Kg.word_tree()
    csize = {g: len(m) for _, m in L.conjugacy_classes for g in m}
    ksize = {g: len(m) for _, m in K.conjugacy_classes for g in m}
    candidates = [
        [x for x in L.elements if x.order() == g.order() and csize[x] == ksize[g]] for g in gens
    ]
    lset = L.element_set
    for choice in itertools.product(*candidates):
        images = {Kg.identity: L.identity}
        for p, k, parent in tree[1:]:
            images[p] = choice[k] * images[parent]
        if len(set(images.values())) != L.order:
            continue
        ok = all(images[s * g] == choice[k] * images[g] for k, s in enumerate(gens) for g in K.elements)
        if ok and set(images.values()) <= lset:
            return images
    return None


def are_isomorphic(K: PermGroup, L: PermGroup) -> bool:
    """Brute-force isomorphism test for orders up to 64.

    Above that bound the groups compare equal only if they have the same
    element set, or the same fingerprint and the same (non-empty) name.
    """
    if K.order != L.order:
        return False
    if K.same_elements(L):
        return True
    if group_fingerprint(K) != group_fingerprint(L):
        return False
    if K.order > ISO_SEARCH_LIMIT:
        return bool(K.name) and K.name == L.name
    return _find_isomorphism(K, L) is not None
