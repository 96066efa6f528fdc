"""Named constructions used by the command line and the corpus.

A group reference is either a JSON group description or a string
``name[:arg[:arg…]]``:

    sym:4  alt:4  cyclic:6  trivial  dihedral:5
    heisenberg:3  exS0:2  a4cover  s3ext  c3c2
    wreath:cyclic:2:3    (T ≀ Σ_n with T = ℤ/2, n = 3)
    partition:2,1,1      (the stabilizer sequence N_ϖ ⋊ H_ϖ inside Σ_n)

Strings that name an exact sequence resolve to its middle group when a
group is asked for.  Orders are estimated before anything is enumerated, so
an oversized request fails with :class:`BudgetExceeded` rather than hanging.
"""
from __future__ import annotations

import math
import os
from typing import Callable, Mapping

from .errors import BudgetExceeded, InvalidInput
from .groups import (
    ExactSequence,
    Partition,
    Perm,
    PermGroup,
    a4cover,
    alternating,
    cyclic,
    direct_product,
    heisenberg,
    quotient_sequence,
    semidirect_product,
    symmetric,
    trivial_group,
    unitriangular_extension,
    wreath_product,
)
from .gset import GSet, gset_through, power_gset, regular_gset, trivial_gset

__all__ = [
    "MAX_GROUP_ORDER",
    "GROUP_PRESETS",
    "SEQUENCE_PRESETS",
    "resolve_group",
    "resolve_sequence",
    "resolve_gset",
    "preset_ref",
]

MAX_GROUP_ORDER = int(os.environ.get("EQUIQUOT_MAX_GROUP_ORDER", "50000"))


def _int(arg: str, what: str, low: int = 0) -> int:
    try:
        v = int(arg)
    except ValueError:
        raise InvalidInput(f"{what} must be an integer, got {arg!r}") from None
    if v < low:
        raise InvalidInput(f"{what} must be >= {low}")
    return v


def _budget(order: int, ref: str, limit: int | None) -> None:
    limit = MAX_GROUP_ORDER if limit is None else limit
    if order > limit:
        raise BudgetExceeded(f"{ref}: order {order} exceeds the group-order budget {limit}")


def dihedral(n: int) -> PermGroup:
    if n < 3:
        raise InvalidInput("dihedral group needs n >= 3")
    r = Perm([(i + 1) % n for i in range(n)])
    s = Perm([(-i) % n for i in range(n)])
    return PermGroup([r, s], degree=n, name=f"D{n}")


def s3_extension() -> ExactSequence:
    """``1 → A_3 → Σ_3 → ℤ/2 → 1``."""
    S3 = symmetric(3)
    return quotient_sequence(S3, S3.subgroup(alternating(3).generators, name="A3"), name="A3 -> S3 -> C2")


def c3_c2() -> ExactSequence:
    """``ℤ/3 ⋊ ℤ/2`` by inversion, realized on ``N × H``."""
    N, H = cyclic(3), cyclic(2)
    return semidirect_product(N, H, {H.generators[0]: lambda n: n.inverse()}, name="C3:C2")


def abelian_semidirect(k: int) -> ExactSequence:
    """``(ℤ/k)² ⋊ ℤ/2`` swapping the factors."""
    N = direct_product(cyclic(k), cyclic(k), name=f"C{k}^2")
    swap = Perm(list(range(k, 2 * k)) + list(range(k)))
    H = cyclic(2)
    return semidirect_product(N, H, {H.generators[0]: lambda n: n.conj(swap)}, name=f"C{k}^2:C2")


def _partition(arg: str) -> Partition:
    try:
        parts = [int(x) for x in arg.split(",") if x]
    except ValueError:
        raise InvalidInput(f"bad partition {arg!r}") from None
    return Partition.from_parts(parts)


# name -> (argument count, order estimate, builder)
GROUP_PRESETS: dict[str, tuple[int, Callable, Callable]] = {
    "sym": (1, lambda n: math.factorial(n), lambda n: symmetric(n)),
    "alt": (1, lambda n: max(math.factorial(n) // 2, 1), lambda n: alternating(n)),
    "cyclic": (1, lambda n: n, lambda n: cyclic(n)),
    "dihedral": (1, lambda n: 2 * n, lambda n: dihedral(n)),
    "trivial": (0, lambda: 1, lambda: trivial_group()),
}

SEQUENCE_PRESETS: dict[str, tuple[int, Callable, Callable]] = {
    "heisenberg": (1, lambda n: n ** 3, lambda n: heisenberg(n)),
    "exS0": (1, lambda n: n ** 5, lambda n: unitriangular_extension(n)),
    "a4cover": (0, lambda: 288, lambda: a4cover()),
    "s3ext": (0, lambda: 6, lambda: s3_extension()),
    "c3c2": (0, lambda: 6, lambda: c3_c2()),
    "abelian": (1, lambda k: 2 * k * k, lambda k: abelian_semidirect(k)),
}


def _split(ref: str) -> tuple[str, list[str]]:
    name, *args = ref.strip().split(":")
    return name, args


def _wreath(args: list[str], limit: int | None) -> ExactSequence:
    if len(args) != 3:
        raise InvalidInput("wreath reference is wreath:<group name>:<arg>:<n>, e.g. wreath:cyclic:2:3")
    T = resolve_group(f"{args[0]}:{args[1]}", limit)
    n = _int(args[2], "n", 1)
    _budget(T.order ** n * math.factorial(n), "wreath", limit)
    return wreath_product(T, n)


def _partition_sequence(arg: str, limit: int | None) -> ExactSequence:
    from .zeta import partition_sequence

    p = _partition(arg)
    _budget(math.factorial(p.n), "partition", limit)
    return partition_sequence(p)


def resolve_sequence(ref: str | Mapping, limit: int | None = None) -> ExactSequence:
    if isinstance(ref, Mapping):
        if "preset" in ref:
            return resolve_sequence(preset_ref(ref), limit)
        raise InvalidInput("exact sequences are given by preset name")
    name, args = _split(ref)
    if name == "wreath":
        return _wreath(args, limit)
    if name == "partition":
        if len(args) != 1:
            raise InvalidInput("partition reference is partition:<parts>, e.g. partition:2,1,1")
        return _partition_sequence(args[0], limit)
    if name not in SEQUENCE_PRESETS:
        raise InvalidInput(f"unknown sequence preset {name!r}; known: "
                           f"{sorted(SEQUENCE_PRESETS) + ['partition', 'wreath']}")
    nargs, order, build = SEQUENCE_PRESETS[name]
    if len(args) != nargs:
        raise InvalidInput(f"{name} takes {nargs} argument(s)")
    vals = [_int(a, "argument", 2 if name in ("heisenberg", "exS0", "abelian") else 0) for a in args]
    _budget(order(*vals), ref, limit)
    return build(*vals)


def resolve_group(ref: str | Mapping, limit: int | None = None) -> PermGroup:
    if isinstance(ref, Mapping):
        if "preset" in ref:
            return resolve_group(preset_ref(ref), limit)
        G = PermGroup.from_json(ref)
        _budget(G.order, G.name or "group", limit)
        return G
    if not isinstance(ref, str):
        raise InvalidInput(f"bad group reference {ref!r}")
    name, args = _split(ref)
    if name in GROUP_PRESETS:
        nargs, order, build = GROUP_PRESETS[name]
        if len(args) != nargs:
            raise InvalidInput(f"{name} takes {nargs} argument(s)")
        vals = [_int(a, "argument", 1) for a in args]
        _budget(order(*vals), ref, limit)
        return build(*vals)
    if name in SEQUENCE_PRESETS or name in ("wreath", "partition"):
        return resolve_sequence(ref, limit).G
    raise InvalidInput(f"unknown group preset {name!r}; known: "
                       f"{sorted(GROUP_PRESETS) + sorted(SEQUENCE_PRESETS) + ['partition', 'wreath']}")


def preset_ref(data: Mapping) -> str:
    """``{"preset": "wreath", "t": "cyclic:2", "n": 3}`` → ``"wreath:cyclic:2:3"``."""
    unknown = set(data) - {"preset", "n", "t"}
    if unknown:
        raise InvalidInput(f"unknown preset keys: {sorted(unknown)}")
    parts = [str(data["preset"])]
    if "t" in data:
        parts.append(str(data["t"]))
    if "n" in data:
        parts.append(str(data["n"]))
    return ":".join(parts)


def resolve_gset(ref: str | Mapping, group: PermGroup | None = None, limit: int | None = None) -> GSet:
    """A JSON G-set, or one of ``regular:<group>``, ``trivial:<group>``,
    ``power:<labels>:<n>`` (``Σ_n`` on ``X^n``) and ``through:<sequence>``
    (the regular ``H``-set pulled back to ``G``)."""
    if isinstance(ref, Mapping):
        return GSet.from_json(ref, resolve_group=lambda r: resolve_group(r, limit))
    name, args = _split(ref)
    rest = ":".join(args)
    if name == "regular":
        return regular_gset(resolve_group(rest, limit) if rest else _need(group))
    if name == "trivial":
        return trivial_gset(resolve_group(rest, limit) if rest else _need(group))
    if name == "power":
        if len(args) != 2:
            raise InvalidInput("power reference is power:<labels>:<n>, e.g. power:abc:3")
        n = _int(args[1], "n", 0)
        _budget(math.factorial(n), ref, limit)
        return power_gset(list(args[0]), n)
    if name == "through":
        seq = resolve_sequence(rest, limit)
        return gset_through(seq, regular_gset(seq.H))
    raise InvalidInput(f"unknown G-set reference {ref!r}")


def _need(group: PermGroup | None) -> PermGroup:
    if group is None:
        raise InvalidInput("this G-set reference needs a group")
    return group
