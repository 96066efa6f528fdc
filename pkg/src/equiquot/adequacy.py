"""Decision procedures for the class ``S0`` and ``S0``-adequacy.

Over an algebraically closed field of characteristic 0 (the only ground
field this package models), condition (i) holds automatically and θ
vanishes exactly when ``⊕_{W ∈ Irr(N)} W`` extends to ``G``.  Extension is
decided by an exact cover search over restrictions of ``Irr(G)``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from . import citations
from .char_theory import ClassFunction, character_table, h_action_on_classes, h_action_on_irr, inner, restrict
from .errors import HypothesesViolated, VerificationFailure
from .groups import ExactSequence, PermGroup, quotient_sequence
from .gset import GSet, restrict_gset

__all__ = [
    "S0Report",
    "AdequacyReport",
    "restriction_matrix",
    "extension_exists",
    "theta_vanishes",
    "condition_iii",
    "in_s0",
    "is_s0_adequate",
    "components_free_case",
]


def restriction_matrix(seq: ExactSequence) -> list[list[int]]:
    """``R[i][w] = mult(W_w, Res^G_N χ_i)`` over character-table rows."""
    TG = character_table(seq.G)
    TN = character_table(seq.N)
    irr_n = TN.irreducibles()
    out = []
    for chi in TG.irreducibles():
        res = restrict(chi, seq.N)
        row = []
        for w in irr_n:
            m = inner(res, w)
            if not isinstance(m, Fraction) or m.denominator != 1 or m < 0:
                raise VerificationFailure(f"restriction multiplicity {m} is not a natural number")
            row.append(int(m))
        out.append(row)
    return out


def extension_exists(seq: ExactSequence) -> tuple[bool, list[int] | None]:
    """Natural numbers ``m_i`` with ``Σ m_i Res χ_i = Σ_W W``, if any.

    Every coefficient of the target is 1, so each ``m_i`` is 0 or 1 and only
    characters restricting multiplicity-free can be used: this is an exact
    cover of ``Irr(N)``.  Candidates are tried by descending degree, and the
    first uncovered ``W`` always picks the branch, so the answer and the
    witness are deterministic.
    """
    R = restriction_matrix(seq)
    degrees = character_table(seq.G).degrees
    n_w = len(R[0]) if R else 0
    usable = [i for i, row in enumerate(R) if all(c <= 1 for c in row) and any(row)]
    usable.sort(key=lambda i: (-degrees[i], i))
    covers = {i: frozenset(w for w, c in enumerate(R[i]) if c) for i in usable}
    by_w = {w: [i for i in usable if w in covers[i]] for w in range(n_w)}

    chosen: list[int] = []

    def search(covered: frozenset) -> bool:
        if len(covered) == n_w:
            return True
        w = next(w for w in range(n_w) if w not in covered)
        for i in by_w[w]:
            if covers[i] & covered:
                continue
            chosen.append(i)
            if search(covered | covers[i]):
                return True
            chosen.pop()
        return False

    if not search(frozenset()):
        return False, None
    witness = [0] * len(R)
    for i in chosen:
        witness[i] = 1
    _check_witness(seq, witness)
    return True, witness


def _check_witness(seq: ExactSequence, witness: list[int]) -> None:
    TG, TN = character_table(seq.G), character_table(seq.N)
    total = ClassFunction(seq.N, [0] * seq.N.num_classes)
    for m, chi in zip(witness, TG.irreducibles()):
        if m:
            total = total + restrict(chi, seq.N) * m
    target = ClassFunction(seq.N, [0] * seq.N.num_classes)
    for w in TN.irreducibles():
        target = target + w
    if total != target:
        raise VerificationFailure("extension witness does not restrict to the sum of Irr(N)")


def theta_vanishes(seq: ExactSequence) -> bool:
    return extension_exists(seq)[0]


def _census_rows(H: PermGroup, X: GSet, keys: dict) -> list[dict]:
    rows = []
    orbit_counts: Counter = Counter()
    point_counts: Counter = Counter()
    for orb in X.orbit_indices():
        st = X._stabilizer_index(orb[0])
        key = H.subgroup_class_key(st)
        keys.setdefault(key, len(key))
        orbit_counts[key] += 1
        point_counts[key] += len(orb)
    for key in sorted(orbit_counts, key=lambda k: (-len(k), k)):
        rows.append({
            "key": key,
            "stabilizer_order": len(key),
            "index_in_H": H.order // len(key),
            "orbits": orbit_counts[key],
            "points": point_counts[key],
        })
    return rows


@dataclass
class ConditionIII:
    holds: bool
    classes: list[dict]
    characters: list[dict]

    def to_json(self) -> dict:
        def strip(rows):
            return [{k: v for k, v in r.items() if k != "key"} | {"type": r["type"]} for r in rows]

        return {"holds": self.holds, "classes": strip(self.classes), "characters": strip(self.characters)}

    def by_index(self, side: str, count: str) -> dict[int, int]:
        """Multiset ``{index in H: count}`` of one side, counting ``"points"``
        or ``"orbits"``."""
        rows = self.classes if side == "classes" else self.characters
        out: Counter = Counter()
        for r in rows:
            out[r["index_in_H"]] += r[count]
        return dict(out)


def condition_iii(seq: ExactSequence) -> ConditionIII:
    """Compare the multisets of ``H``-stabilizer conjugacy classes over
    ``H``-orbits on ``C(N)`` and on ``Irr(N)``."""
    H = seq.H
    C = h_action_on_classes(seq)
    I = h_action_on_irr(seq)
    keys: dict = {}
    crow = _census_rows(H, C, keys)
    irow = _census_rows(H, I, keys)
    # stable type labels: T0, T1, … by decreasing stabilizer order then key
    order = sorted(keys, key=lambda k: (-len(k), k))
    label = {k: f"T{i}" for i, k in enumerate(order)}
    for r in crow + irow:
        r["type"] = label[r["key"]]
    holds = Counter({r["key"]: r["orbits"] for r in crow}) == Counter({r["key"]: r["orbits"] for r in irow})
    return ConditionIII(holds, crow, irow)


@dataclass
class S0Report:
    sequence: str
    orders: dict
    cond_i: str
    cond_ii: bool
    witness: list[int] | None
    cond_iii: ConditionIII
    in_s0: bool
    citations: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "sequence": self.sequence,
            "orders": self.orders,
            "cond_i": {"verdict": self.cond_i, "citation": citations.CLOSED_FIELD},
            "cond_ii": {
                "verdict": self.cond_ii,
                "witness": self.witness,
                "theta_vanishes": self.cond_ii,
                "citations": [citations.S0_II, citations.SPLIT, citations.BRTRIV],
            },
            "cond_iii": self.cond_iii.to_json() | {"citation": citations.S0_III},
            "in_s0": {"verdict": self.in_s0, "citation": citations.S0_DEF},
        }


def in_s0(seq: ExactSequence) -> S0Report:
    ok, witness = extension_exists(seq)
    c3 = condition_iii(seq)
    return S0Report(
        sequence=seq.name or repr(seq),
        orders={"N": seq.N.order, "G": seq.G.order, "H": seq.H.order},
        cond_i="assumed",
        cond_ii=ok,
        witness=witness,
        cond_iii=c3,
        in_s0=ok and c3.holds,
        citations=[citations.S0_DEF],
    )


@dataclass
class AdequacyReport:
    gset: str
    strata: list[dict]
    reports: list[S0Report]
    adequate: bool
    theorem_a_conclusion: str

    def to_json(self) -> dict:
        return {
            "gset": self.gset,
            "stabilizer_types": [
                s | {"s0": r.to_json()} for s, r in zip(self.strata, self.reports)
            ],
            "adequate": {"verdict": self.adequate, "citation": citations.ADEQUATE},
            "theorem_a": {"conclusion": self.theorem_a_conclusion, "citation": citations.THEOREM_A},
        }


def is_s0_adequate(X: GSet) -> AdequacyReport:
    """Run ``in_s0`` on ``1 → N_x → N_G(N_x) → N_G(N_x)/N_x → 1`` for one
    point ``x`` per conjugacy class of stabilizers."""
    G = X.group
    seen: dict = {}
    for orb in X.orbit_indices():
        st = X._stabilizer_index(orb[0])
        key = G.subgroup_class_key(st)
        if key not in seen:
            seen[key] = (X.points[orb[0]], st)
    strata, reports = [], []
    for key in sorted(seen, key=lambda k: (-len(k), k)):
        x, N = seen[key]
        Gx = G.normalizer(N)
        seq = quotient_sequence(Gx, N, name=f"stabilizer of {x}")
        strata.append({"point": x, "N_order": N.order, "G_x_order": Gx.order})
        reports.append(in_s0(seq))
    adequate = all(r.in_s0 for r in reports)
    if adequate:
        text = "X is S0-adequate, so mu^G(X) = mu(X/^ex G) holds by the main theorem"
    else:
        text = "not asserted: some stabilizer sequence lies outside S0"
    return AdequacyReport(X.name or repr(X), strata, reports, adequate, text)


def components_free_case(seq: ExactSequence, X: GSet) -> tuple[int, list[int]]:
    """Number of summands ``|Irr(N)/H|`` and the sizes ``|X/H_r|``.

    ``X`` is an ``H``-set on which ``H`` acts freely; ``seq`` must satisfy
    conditions (i) and (ii).
    """
    if not X.group.same_elements(seq.H):
        raise HypothesesViolated("X must be a set over H")
    if not X.is_free():
        raise HypothesesViolated("H must act freely on X")
    if not theta_vanishes(seq):
        raise HypothesesViolated("condition (ii) fails for this sequence")
    I = h_action_on_irr(seq)
    sizes = []
    for orb in I.orbit_indices():
        Hr = I._stabilizer_index(orb[0])
        sizes.append(len(restrict_gset(X, Hr).orbit_indices()))
    return len(sizes), sizes
