"""Finite-dimensional algebras attached to an exact sequence, checked exactly.

Algebras are given by sparse structure constants over cyclotomic numbers.
Linear maps between spaces are sparse column dicts.  Every verification
returns a :class:`Proof`, a record of each individual check, rather than a
bare boolean.

Convention.  Endomorphism algebras are multiplied by composition,
``(a·b)(v) = a(b(v))``.  An opposite algebra is always named as such in
the reports; nothing is flipped silently.
"""
from __future__ import annotations

import itertools
from typing import Mapping, Sequence

from . import citations
from .char_theory import ClassFunction, central_idempotents, character_table, induce_char, inner
from .cyclotomic import Cyclotomic, zeta
from .errors import InvalidInput, VerificationFailure
from .proof import Check, Proof
from .groups import ExactSequence, Perm, PermGroup, heisenberg
from .linalg import sparse_nullspace, sparse_rank

__all__ = [
    "Check",
    "Proof",
    "FinAlgebra",
    "MatRep",
    "regular_rep",
    "commutant",
    "group_algebra",
    "center_of",
    "verify_center",
    "skew_group_algebra",
    "verify_xi",
    "verify_heisenberg_lemma",
]

ZERO = Cyclotomic.rational(0)
ONE = Cyclotomic.rational(1)

Vec = dict  # sparse vector {index: Cyclotomic}


def _axpy(acc: Vec, c: Cyclotomic, v: Mapping) -> None:
    for k, x in v.items():
        nv = acc.get(k, ZERO) + c * x
        if nv:
            acc[k] = nv
        else:
            acc.pop(k, None)


# ---------------------------------------------------------------------------
# algebras

class FinAlgebra:
    """A unital associative algebra with basis ``e_0, …, e_{d-1}``.

    ``mult[i][j]`` is the sparse vector ``e_i e_j``.  Associativity and the
    unit are verified on all basis triples at construction, and an optional
    ``H``-action (``h -> linear map``) is checked to consist of algebra
    automorphisms.
    """

    def __init__(
        self,
        mult: Sequence[Sequence[Mapping[int, Cyclotomic]]],
        unit: Mapping[int, Cyclotomic],
        labels: Sequence[str] | None = None,
        h_action: Mapping[Perm, Sequence[Mapping[int, Cyclotomic]]] | None = None,
        name: str = "",
        verify: bool = True,
    ):
        self.dim = len(mult)
        self.mult = [[dict(v) for v in row] for row in mult]
        self.unit = dict(unit)
        self.labels = list(labels) if labels is not None else [f"e{i}" for i in range(self.dim)]
        self.h_action = {h: [dict(c) for c in m] for h, m in (h_action or {}).items()}
        self.name = name
        if verify:
            bad = self.check_structure()
            if bad:
                raise VerificationFailure(f"algebra {name}: {bad}")

    def mul(self, u: Mapping, v: Mapping) -> Vec:
        out: Vec = {}
        for i, a in u.items():
            row = self.mult[i]
            for j, b in v.items():
                _axpy(out, a * b, row[j])
        return out

    def basis(self, i: int) -> Vec:
        return {i: ONE}

    def apply(self, lin: Sequence[Mapping], v: Mapping) -> Vec:
        out: Vec = {}
        for i, a in v.items():
            _axpy(out, a, lin[i])
        return out

    def check_structure(self) -> list[str]:
        bad = []
        d = self.dim
        for i in range(d):
            e = {i: ONE}
            if self.mul(self.unit, e) != e or self.mul(e, self.unit) != e:
                bad.append(f"unit fails on {self.labels[i]}")
                break
        for i, j in itertools.product(range(d), repeat=2):
            ij = self.mult[i][j]
            for k in range(d):
                left = self.mul(ij, {k: ONE})
                right = self.mul({i: ONE}, self.mult[j][k])
                if left != right:
                    bad.append(f"associativity fails on ({i},{j},{k})")
                    return bad
        for h, lin in self.h_action.items():
            if self.apply(lin, self.unit) != self.unit:
                bad.append(f"action of {h!r} does not fix the unit")
            for i, j in itertools.product(range(d), repeat=2):
                if self.apply(lin, self.mult[i][j]) != self.mul(lin[i], lin[j]):
                    bad.append(f"action of {h!r} is not multiplicative")
                    break
        return bad


class MatRep:
    """A matrix representation given on generators.

    Matrices are dense lists of rows of :class:`Cyclotomic`.  All element
    images are generated along the group's BFS tree and the relation
    ``ρ(s g) = ρ(s) ρ(g)`` is checked for every generator ``s`` and element
    ``g``.
    """

    def __init__(self, group: PermGroup, images: Sequence[Sequence[Sequence]], name: str = ""):
        if len(images) != len(group.generators):
            raise InvalidInput("one matrix per generator required")
        mats = [_as_matrix(m) for m in images]
        d = len(mats[0]) if mats else 0
        self.group = group
        self.degree = d
        self.name = name
        ident = _identity(d)
        table = group.extend_on_generators(mats, _matmul, ident)
        for s, m in zip(group.generators, mats):
            for g in group.elements:
                if table[s * g] != _matmul(m, table[g]):
                    raise VerificationFailure("matrices do not define a representation")
        self._table = table

    def __call__(self, g: Perm) -> list[list[Cyclotomic]]:
        return self._table[g]

    def character(self) -> ClassFunction:
        return ClassFunction.from_function(
            self.group, lambda g: sum((self._table[g][i][i] for i in range(self.degree)), ZERO)
        )

    def restrict(self, K: PermGroup) -> "MatRep":
        return MatRep(K, [self._table[s] for s in K.generators], name=f"res({self.name})")


def _as_matrix(m) -> list[list[Cyclotomic]]:
    return [[x if isinstance(x, Cyclotomic) else Cyclotomic.rational(x) for x in row] for row in m]


def _identity(d: int) -> list[list[Cyclotomic]]:
    return [[ONE if i == j else ZERO for j in range(d)] for i in range(d)]


def _matmul(a, b):
    n, m = len(a), len(b[0]) if b else 0
    out = [[ZERO] * m for _ in range(n)]
    for i in range(n):
        row = a[i]
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(m):
                    y = bk[j]
                    if y:
                        out[i][j] = out[i][j] + x * y
    return out


def regular_rep(G: PermGroup) -> MatRep:
    """``k[G]`` with ``ρ(g) e_x = e_{gx}`` (left regular representation)."""
    d = G.order
    mats = []
    for s in G.generators:
        m = [[ZERO] * d for _ in range(d)]
        for j, x in enumerate(G.elements):
            m[G.index(s * x)][j] = ONE
        mats.append(m)
    return MatRep(G, mats, name=f"k[{G.name}]")


def _flat(m: Sequence[Sequence[Cyclotomic]]) -> Vec:
    d = len(m)
    return {i * d + j: x for i, row in enumerate(m) for j, x in enumerate(row) if x}


def _unflat(v: Mapping, d: int) -> list[list[Cyclotomic]]:
    out = [[ZERO] * d for _ in range(d)]
    for k, x in v.items():
        out[k // d][k % d] = x
    return out


def commutant(V: MatRep, K: PermGroup | None = None) -> FinAlgebra:
    """``End_K(V)`` by solving ``[M, ρ(k)] = 0`` for generators ``k`` of ``K``
    (default: the whole group of ``V``).  Product is composition."""
    K = K if K is not None else V.group
    d = V.degree
    rows = []
    for s in K.generators:
        P = V(s)
        # (M P - P M)_{ij} = Σ_k M_{ik} P_{kj} - P_{ik} M_{kj}
        for i in range(d):
            for j in range(d):
                eq: Vec = {}
                for k in range(d):
                    if P[k][j]:
                        _axpy(eq, P[k][j], {i * d + k: ONE})
                    if P[i][k]:
                        _axpy(eq, -P[i][k], {k * d + j: ONE})
                if eq:
                    rows.append(eq)
    basis, free = sparse_nullspace(rows, d * d, ZERO, ONE, return_free=True)
    coord = {f: i for i, f in enumerate(free)}
    mats = [_unflat(v, d) for v in basis]

    def coords(m) -> Vec:
        flat = _flat(m)
        out = {coord[f]: flat[f] for f in free if f in flat}
        recon: Vec = {}
        for i, c in out.items():
            _axpy(recon, c, basis[i])
        if recon != flat:
            raise VerificationFailure("commutant is not closed under composition")
        return out

    mult = [[coords(_matmul(a, b)) for b in mats] for a in mats]
    unit = coords(_identity(d))
    alg = FinAlgebra(mult, unit, name=f"End_{K.name}({V.name})", verify=len(mats) <= 40)
    alg.matrices = mats  # type: ignore[attr-defined]
    return alg


def group_algebra(G: PermGroup) -> FinAlgebra:
    idx = {g: i for i, g in enumerate(G.elements)}
    mult = [[{idx[g * h]: ONE} for h in G.elements] for g in G.elements]
    return FinAlgebra(mult, {0: ONE}, labels=[repr(g) for g in G.elements], name=f"k[{G.name}]",
                      verify=G.order <= 24)


def center_of(A: FinAlgebra) -> list[Vec]:
    """Basis of the center: solutions of ``a e_i = e_i a`` for all ``i``."""
    rows = []
    d = A.dim
    for i in range(d):
        # Σ_j a_j (e_j e_i - e_i e_j) = 0, one equation per output coordinate
        eqs: dict[int, Vec] = {}
        for j in range(d):
            diff: Vec = dict(A.mult[j][i])
            _axpy(diff, -ONE, A.mult[i][j])
            for k, x in diff.items():
                eqs.setdefault(k, {})
                _axpy(eqs[k], x, {j: ONE})
        rows.extend(e for e in eqs.values() if e)
    return sparse_nullspace(rows, d, ZERO, ONE)


def verify_center(N: PermGroup, strict: bool = True) -> Proof:
    """``Z(k[N])`` has dimension ``|C(N)|`` and contains the central
    idempotents from the character table, which are orthogonal, idempotent
    and sum to 1."""
    proof = Proof("center of k[N] is spanned by the central idempotents", citations.PLUMBING)
    A = group_algebra(N)
    Z = center_of(A)
    proof.add("dim Z(k[N]) = |C(N)|", len(Z) == N.num_classes, f"dim {len(Z)}")
    idx = {g: i for i, g in enumerate(N.elements)}
    idem = [{idx[g]: c for g, c in e.coeffs.items()} for e in central_idempotents(N)]
    proof.add("one idempotent per class", len(idem) == N.num_classes)
    central = all(A.mul(e, {i: ONE}) == A.mul({i: ONE}, e) for e in idem for i in range(A.dim))
    proof.add("idempotents are central", central)
    orth = all(A.mul(a, b) == (a if i == j else {}) for i, a in enumerate(idem) for j, b in enumerate(idem))
    proof.add("pairwise orthogonal idempotents", orth)
    total: Vec = {}
    for e in idem:
        _axpy(total, ONE, e)
    proof.add("sum to 1", total == {0: ONE})
    span = sparse_rank(Z + idem, ZERO, ONE) == len(Z) == sparse_rank(idem, ZERO, ONE)
    proof.add("idempotents span the solved center", span)
    return proof.raise_if_failed() if strict else proof


# ---------------------------------------------------------------------------
# skew group algebra and ξ

def skew_group_algebra(seq: ExactSequence, verify: bool = True) -> FinAlgebra:
    """``O(H)*G`` on the basis ``δ_h ⊗ g`` (index ``h·|G| + g``).

    ``(δ_h⊗g)(δ_{h'}⊗g') = [h' = h π(g)] δ_h⊗gg'`` and ``x ∈ H`` acts by
    ``δ_h⊗g ↦ δ_{xh}⊗g``.
    """
    G, H, pi = seq.G, seq.H, seq.projection
    nG = G.order
    gidx = {g: i for i, g in enumerate(G.elements)}
    hidx = {h: i for i, h in enumerate(H.elements)}
    basis = [(h, g) for h in H.elements for g in G.elements]
    mult = []
    for h, g in basis:
        target = h * pi(g)
        row = []
        for h2, g2 in basis:
            row.append({hidx[h] * nG + gidx[g * g2]: ONE} if h2 == target else {})
        mult.append(row)
    unit = {hidx[h] * nG + gidx[G.identity]: ONE for h in H.elements}
    action = {
        x: [{hidx[x * h] * nG + gidx[g]: ONE} for h, g in basis] for x in H.generators
    }
    labels = [f"d[{h!r}]x{g!r}" for h, g in basis]
    return FinAlgebra(mult, unit, labels, action, name=f"O(H)*G[{seq.name}]", verify=verify)


def _xi_operator(seq: ExactSequence, h: Perm, g: Perm) -> dict[int, int]:
    """``ξ(δ_h⊗g)`` as a partial map on basis indices of ``O(G)``:
    ``δ_y ↦ [π(y g⁻¹) = h] δ_{y g⁻¹}``."""
    G, pi = seq.G, seq.projection
    ginv = g.inverse()
    out = {}
    for j, y in enumerate(G.elements):
        t = y * ginv
        if pi(t) == h:
            out[j] = G.index(t)
    return out


def _compose(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    return {j: a[k] for j, k in b.items() if k in a}


def verify_xi(seq: ExactSequence, strict: bool = True) -> Proof:
    """Certify that ``ξ: O(H)*G → End_N(O(G))`` is an isomorphism of
    ``H``-equivariant algebras."""
    G, H, N = seq.G, seq.H, seq.N
    proof = Proof("xi is an isomorphism of H-equivariant algebras", citations.XI,
                  conventions=["End_N(O(G)) multiplied by composition (not the opposite algebra)",
                               "N acts on O(G) by left translations"])
    A = skew_group_algebra(seq, verify=G.order * H.order <= 48)
    proof.add("skew algebra associative and unital", True if A.dim else False,
              "checked on all basis triples" if G.order * H.order <= 48 else "checked on products only")
    basis = [(h, g) for h in H.elements for g in G.elements]
    ops = [_xi_operator(seq, h, g) for h, g in basis]
    nG = G.order

    # multiplicativity on all basis pairs
    mult_ok = True
    for a, opa in enumerate(ops):
        for b, opb in enumerate(ops):
            prod = A.mult[a][b]
            expected = ops[next(iter(prod))] if prod else {}
            if _compose(opa, opb) != expected:
                mult_ok = False
                break
        if not mult_ok:
            break
    proof.add("multiplicative on all basis pairs", mult_ok, f"{len(ops)**2} pairs")
    unit_op: dict[int, int] = {}
    for k in A.unit:
        unit_op.update(ops[k])
    proof.add("unit maps to identity", unit_op == {j: j for j in range(nG)})

    # lands in End_N: commutes with left translation by generators of N
    def left(n: Perm) -> dict[int, int]:
        return {j: G.index(n * y) for j, y in enumerate(G.elements)}

    lands = all(_compose(left(n), op) == _compose(op, left(n)) for n in N.generators for op in ops)
    proof.add("image commutes with N", lands)

    rank = sparse_rank([{k * nG + j: ONE for j, k in op.items()} for op in ops], ZERO, ONE)
    proof.add("injective (rank = |H||G|)", rank == H.order * G.order, f"rank {rank}")

    E = commutant(regular_rep(G), N) if G.order <= 24 else None
    dim_end = E.dim if E is not None else None
    if E is not None:
        proof.add("dim End_N(O(G)) = |H||G| (solved independently)", dim_end == H.order * G.order,
                  f"dim {dim_end}")
    proof.add("|H||G| = |H|^2 |N|", H.order * G.order == H.order ** 2 * N.order)
    TN = character_table(N)
    mults = [H.order * d for d in TN.degrees]
    proof.add("dim from character multiplicities", sum(m * m for m in mults) == H.order * G.order)

    # H-equivariance: L_h~ ξ(a) L_h~^{-1} = ξ(h·a) for generators h and all lifts
    eq_ok = True
    for x in H.generators:
        for lt in (g for g in G.elements if seq.projection(g) == x):
            L, Linv = left(lt), left(lt.inverse())
            for a, op in enumerate(ops):
                moved = next(iter(A.h_action[x][a]))
                if _compose(L, _compose(op, Linv)) != ops[moved]:
                    eq_ok = False
                    break
            if not eq_ok:
                break
    proof.add("H-equivariant for every lift of every generator", eq_ok)
    proof.data = {
        "sequence": seq.name,
        "dim_skew": A.dim,
        "dim_End_N": dim_end,
        "H_sq_N": H.order ** 2 * N.order,
        "rank_xi": rank,
    }
    return proof.raise_if_failed() if strict else proof


# ---------------------------------------------------------------------------
# Heisenberg lemma

def verify_heisenberg_lemma(n: int, strict: bool = True) -> Proof:
    """Check the finite content behind the Heisenberg lemma for ``Z/n``.

    With ``x = 1+E12``, ``y = 1+E23``, ``z = [x, y] = 1+E13`` and
    ``χ(z) = ζ = ζ_n``: ``V_ζ = ind_{G'}^G χ'`` for ``G' = ⟨y, z⟩`` and
    ``χ'(y^b z^c) = ζ^c``.  Verified: irreducibility, that
    ``k[G]/I_ζ → End(V_ζ)`` is bijective, the inversion anti-isomorphism
    ``(k[G]/I_ζ)^op ≅ k[G]/I_{ζ⁻¹}``, and an ``H``-equivariant isomorphism
    ``k[G]/I_{ζ⁻¹} ≅ C_{ζ⁻¹}`` given by ``l ↦ Y⁻¹``, ``l' ↦ X``.
    """
    seq = heisenberg(n)
    G, H, N = seq.G, seq.H, seq.N
    x, y, z = seq.x, seq.y, seq.z  # type: ignore[attr-defined]
    zt = zeta(n)
    zinv = zt.inverse()
    proof = Proof("class of C_{zeta^-1} equals theta_zeta (finite shadow)", citations.HEIS,
                  conventions=["zeta = exp(2 pi i/n)", "z = x y x^-1 y^-1",
                               "k[G]/I acts on V by rho; End(V) multiplied by composition"])
    proof.add("z = 1 + E13", z == seq.matrix(0, 0, 1))  # type: ignore[attr-defined]

    # normal form g = z^c x^a y^b
    nf: dict[Perm, tuple[int, int, int]] = {}
    for a, b, c in itertools.product(range(n), repeat=3):
        nf[(z ** c) * (x ** a) * (y ** b)] = (a, b, c)
    proof.add("every element is z^c x^a y^b uniquely", len(nf) == G.order)

    Gp = G.subgroup([y, z], name="G'")
    proof.add("G' normal of index n containing N", G.is_normal(Gp) and G.order // Gp.order == n
              and N.element_set <= Gp.element_set)
    chi_p = ClassFunction.from_function(Gp, lambda g: zt ** nf[g][2])
    V_char = induce_char(chi_p, G)
    ip = inner(V_char, V_char)
    proof.add("<chi_V, chi_V> = 1 (V_zeta irreducible)", ip == 1, f"inner product {ip}")
    proof.add("deg V_zeta = n", V_char.degree == n)
    res = [V_char(g) for g in N.elements]
    proof.add("restriction to N is chi-isotypic", all(res[i] == n * (zt ** nf[g][2]) for i, g in enumerate(N.elements)))

    # explicit model: transversal t_i = x^i, rho(g)_{ij} = chi'(t_i^-1 g t_j)
    trans = [x ** i for i in range(n)]
    gp_set = Gp.element_set

    def rho_of(g: Perm) -> list[list[Cyclotomic]]:
        m = [[ZERO] * n for _ in range(n)]
        for i, ti in enumerate(trans):
            for j, tj in enumerate(trans):
                w = ti.inverse() * g * tj
                if w in gp_set:
                    m[i][j] = zt ** nf[w][2]
        return m

    V = MatRep(G, [rho_of(s) for s in G.generators], name="V_zeta")
    proof.add("matrix model has the induced character", V.character() == V_char)
    proof.add("rho(z) = zeta * Id", V(z) == [[zt if i == j else ZERO for j in range(n)] for i in range(n)])

    # I_zeta = span{ g (z - zeta) } since z is central
    gidx = {g: i for i, g in enumerate(G.elements)}

    def ideal(c: Cyclotomic) -> list[Vec]:
        return [{gidx[g * z]: ONE, gidx[g]: -c} for g in G.elements]

    I_z = ideal(zt)
    dim_quot = G.order - sparse_rank(I_z, ZERO, ONE)
    proof.add("dim k[G]/I_zeta = n^2", dim_quot == n * n, f"dim {dim_quot}")
    kills = all(_matmul(V(g), V(z)) == [[v * zt for v in row] for row in V(g)] for g in G.generators)
    proof.add("rho vanishes on I_zeta", kills)
    rank_img = sparse_rank([_flat(V(g)) for g in G.elements], ZERO, ONE)
    proof.add("k[G]/I_zeta -> End(V_zeta) bijective (rank n^2 = dim)", rank_img == n * n == dim_quot,
              f"rank {rank_img}")
    # H acts on End(V) by conjugation with rho(lift); the identity is fixed
    fixed = all(_matmul(_matmul(V(seq.lifts[h]), _identity(n)), V(seq.lifts[h].inverse())) == _identity(n)
                for h in H.generators)
    proof.add("H-action on End(V_zeta) fixes the identity", fixed)

    # inversion maps I_zeta onto I_{zeta^-1}
    I_zi = ideal(zinv)
    inv_image = [{gidx[G.elements[k].inverse()]: c for k, c in v.items()} for v in I_z]
    r1 = sparse_rank(I_zi, ZERO, ONE)
    proof.add("g -> g^-1 maps I_zeta onto I_{zeta^-1}",
              sparse_rank(I_zi + inv_image, ZERO, ONE) == r1 == sparse_rank(inv_image, ZERO, ONE))

    # k[G]/I_{zeta^-1} on basis X^a Y^b via q(z^c x^a y^b) = zeta^{-c} X^a Y^b
    def q(g: Perm) -> tuple[tuple[int, int], Cyclotomic]:
        a, b, c = nf[g]
        return (a, b), zinv ** c

    def quot_mul(u: tuple[int, int], v: tuple[int, int]) -> tuple[tuple[int, int], Cyclotomic]:
        # product of basis monomials, computed through group representatives
        g = (x ** u[0]) * (y ** u[1])
        h = (x ** v[0]) * (y ** v[1])
        return q(g * h)

    qmult_ok = q(z) == ((0, 0), zinv)
    for g in G.elements:
        for h in G.elements:
            (ku, cu), (kv, cv) = q(g), q(h)
            kw, cw = quot_mul(ku, kv)
            kg, cg = q(g * h)
            if kg != kw or cg != cu * cv * cw:
                qmult_ok = False
                break
        if not qmult_ok:
            break
    proof.add("q: k[G] -> span{X^a Y^b} is multiplicative (kernel I_{zeta^-1})", qmult_ok)
    X, Y = (1, 0), (0, 1)
    kxy, cxy = quot_mul(X, Y)
    kyx, cyx = quot_mul(Y, X)
    proof.add("XY = zeta^-1 YX", kxy == kyx and cxy == zinv * cyx)
    proof.add("X^n = Y^n = 1", q(x ** n) == ((0, 0), ONE) and q(y ** n) == ((0, 0), ONE))

    # C_{zeta^-1} on the basis l^i l'^j with l l' = zeta^-1 l' l, i.e. l' l = zeta l l'
    def c_mul(u, v):
        i, j = u
        k, m = v
        # l^i l'^j l^k l'^m = zeta^{jk} l^{i+k} l'^{j+m}
        return ((i + k) % n, (j + m) % n), zt ** (j * k)

    def phi(u) -> tuple[tuple[int, int], Cyclotomic]:
        i, j = u
        # l^i l'^j -> Y^{-i} X^j
        return q((y ** ((-i) % n)) * (x ** j))

    iso_ok = True
    images = set()
    for u in itertools.product(range(n), repeat=2):
        images.add(phi(u)[0])
        for v in itertools.product(range(n), repeat=2):
            kw, cw = c_mul(u, v)
            k1, c1 = phi(u)
            k2, c2 = phi(v)
            k12, c12 = quot_mul(k1, k2)
            kp, cp = phi(kw)
            if kp != k12 or cw * cp != c1 * c2 * c12:
                iso_ok = False
    proof.add("C_{zeta^-1} -> k[G]/I_{zeta^-1} multiplicative", iso_ok)
    proof.add("C_{zeta^-1} -> k[G]/I_{zeta^-1} bijective on bases", len(images) == n * n)
    proof.add("l l' = zeta^-1 l' l in C", c_mul((1, 0), (0, 1)) == ((1, 1), ONE)
              and c_mul((0, 1), (1, 0))[1] == zt)

    # H-equivariance: H acts on k[G]/I by conjugation with lifts, on C by psi, psi'
    def conj_q(hl: Perm, key: tuple[int, int]) -> tuple[tuple[int, int], Cyclotomic]:
        g = (x ** key[0]) * (y ** key[1])
        k, c = q(hl * g * hl.inverse())
        k0, c0 = q(g)
        return k, c / c0

    eq_ok = True
    for hgen, (psi, psi_p) in zip((x, y), ((zt, ONE), (ONE, zt))):
        for u in itertools.product(range(n), repeat=2):
            i, j = u
            weight = (psi ** i) * (psi_p ** j)
            k, c = phi(u)
            k2, c2 = conj_q(hgen, k)
            if k2 != k or c2 != weight:
                eq_ok = False
    proof.add("isomorphism is H-equivariant (L by psi, L' by psi')", eq_ok)
    proof.data = {"n": n, "deg_V": n, "dim_quotient": dim_quot, "rank_image": rank_img, "inner_product": str(ip)}
    return proof.raise_if_failed() if strict else proof
