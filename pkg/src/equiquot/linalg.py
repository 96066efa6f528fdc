"""Small exact linear algebra helpers.

Two flavours: dense matrices over ``F_p`` (numpy ``int64``, used by the
Dixon character computation) and row reduction over any exact field whose
elements support ``+ - * /`` and truthiness (``Fraction`` or
:class:`~equiquot.cyclotomic.Cyclotomic`).
"""
from __future__ import annotations

from typing import Any, Sequence

import numpy as np

__all__ = [
    "nullspace_mod_p",
    "charpoly_mod_p",
    "roots_mod_p",
    "rref",
    "rank",
    "nullspace",
    "solve",
    "sparse_nullspace",
    "sparse_rank",
]


def _inv_mod(a: int, p: int) -> int:
    return pow(int(a) % p, p - 2, p)


def nullspace_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{v : A v = 0}`` over ``F_p`` as the columns of the result."""
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            A[[r, k]] = A[[k, r]]
        A[r] = (A[r] * _inv_mod(A[r, c], p)) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            A[nzr] = (A[nzr] - np.outer(col[nzr], A[r])) % p
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-A[i, f]) % p
    return basis


def charpoly_mod_p(X: np.ndarray, p: int) -> list[int]:
    """Characteristic polynomial ``det(tI - X)`` over ``F_p``, lowest degree first.

    Reduces to upper Hessenberg form by similarity and then runs the usual
    three-term recurrence, so it works for every prime ``p``.
    """
    A = [[int(v) % p for v in row] for row in np.asarray(X)]
    n = len(A)
    for j in range(n - 2):
        piv = next((i for i in range(j + 1, n) if A[i][j]), None)
        if piv is None:
            continue
        if piv != j + 1:
            A[piv], A[j + 1] = A[j + 1], A[piv]
            for row in A:
                row[piv], row[j + 1] = row[j + 1], row[piv]
        t_inv = _inv_mod(A[j + 1][j], p)
        for i in range(j + 2, n):
            u = A[i][j] * t_inv % p
            if not u:
                continue
            A[i] = [(a - u * b) % p for a, b in zip(A[i], A[j + 1])]
            for row in A:
                row[j + 1] = (row[j + 1] + u * row[i]) % p
    polys: list[list[int]] = [[1]]
    for m in range(n):
        # (t - h_mm) * p_m
        prev = polys[-1]
        cur = [0] + prev
        for k, c in enumerate(prev):
            cur[k] = (cur[k] - A[m][m] * c) % p
        prod = 1
        for i in range(m - 1, -1, -1):
            prod = prod * A[i + 1][i] % p
            coef = A[i][m] * prod % p
            if coef:
                for k, c in enumerate(polys[i]):
                    cur[k] = (cur[k] - coef * c) % p
        polys.append(cur)
    return polys[-1]


def roots_mod_p(poly: Sequence[int], p: int) -> list[int]:
    """All roots in ``F_p`` by evaluating at every field element."""
    xs = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(list(poly)):
        acc = (acc * xs + c) % p
    return [int(x) for x in np.nonzero(acc == 0)[0]]


# ---------------------------------------------------------------------------
# generic exact fields

def rref(M: Sequence[Sequence[Any]]) -> tuple[list[list[Any]], list[int]]:
    """Reduced row echelon form and its pivot columns."""
    A = [list(row) for row in M]
    if not A:
        return A, []
    rows, cols = len(A), len(A[0])
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        k = next((i for i in range(r, rows) if A[i][c]), None)
        if k is None:
            continue
        A[r], A[k] = A[k], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv if x else x for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c]:
                f = A[i][c]
                A[i] = [a - f * b if b else a for a, b in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def rank(M: Sequence[Sequence[Any]]) -> int:
    return len(rref(M)[1])


def nullspace(M: Sequence[Sequence[Any]], zero: Any = 0, one: Any = 1) -> list[list[Any]]:
    """Basis vectors ``v`` with ``M v = 0``."""
    if not M:
        return []
    cols = len(M[0])
    R, pivots = rref(M)
    pset = set(pivots)
    out = []
    for f in range(cols):
        if f in pset:
            continue
        v = [zero] * cols
        v[f] = one
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        out.append(v)
    return out


def solve(M: Sequence[Sequence[Any]], b: Sequence[Any], zero: Any = 0) -> list[Any] | None:
    """One solution of ``M x = b`` or ``None``."""
    aug = [list(row) + [bi] for row, bi in zip(M, b)]
    R, pivots = rref(aug)
    cols = len(M[0]) if M else 0
    if cols in pivots:
        return None
    x = [zero] * cols
    for i, pc in enumerate(pivots):
        x[pc] = R[i][cols]
    return x


def sparse_nullspace(rows: Sequence[dict], ncols: int, zero: Any = 0, one: Any = 1,
                     return_free: bool = False):
    """Nullspace of a sparse system given as ``{column: value}`` rows.

    Each returned vector is a dict with value ``one`` on its free column and
    ``zero`` (absent) on every other free column, so coordinates of a vector
    in the span are read off at the free columns.  With ``return_free`` the
    list of free columns is returned as well.
    """
    pivots: dict[int, dict] = {}
    for row in rows:
        r = {k: v for k, v in row.items() if v}
        while r:
            c = min(r)
            if c not in pivots:
                break
            f = r[c]
            for k, v in pivots[c].items():
                nv = r.get(k, zero) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        if r:
            c = min(r)
            inv = one / r[c]
            pivots[c] = {k: v * inv for k, v in r.items()}
    for c in sorted(pivots, reverse=True):
        row = pivots[c]
        for k in [k for k in row if k != c and k in pivots]:
            f = row.get(k)
            if not f:
                continue
            for kk, v in pivots[k].items():
                nv = row.get(kk, zero) - f * v
                if nv:
                    row[kk] = nv
                else:
                    row.pop(kk, None)
    out, free = [], []
    for f in range(ncols):
        if f in pivots:
            continue
        v = {f: one}
        for c, row in pivots.items():
            x = row.get(f)
            if x:
                v[c] = -x
        out.append(v)
        free.append(f)
    return (out, free) if return_free else out


def sparse_rank(vectors: Sequence[dict], zero: Any = 0, one: Any = 1) -> int:
    """Rank of a family of sparse vectors."""
    pivots: dict[int, dict] = {}
    for vec in vectors:
        r = {k: v for k, v in vec.items() if v}
        while r:
            c = min(r)
            if c not in pivots:
                break
            f = r[c]
            for k, v in pivots[c].items():
                nv = r.get(k, zero) - f * v
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
        if r:
            c = min(r)
            inv = one / r[c]
            pivots[c] = {k: v * inv for k, v in r.items()}
    return len(pivots)
