"""Derive the bundled cohomology fixtures from Betti numbers and known torsion.

Inputs are homology data of closed oriented manifolds: Betti numbers and the
torsion of H_1.  Poincaré duality gives the remaining homology torsion,
the universal coefficient theorem turns homology into cohomology, and the
full Künneth formula (with Tor terms, computed here independently of the
package) gives the cohomology of products.

    python3 scripts/derive_fixtures.py [--out src/equiquot/data]
"""
from __future__ import annotations

import argparse
import json
import math
from pathlib import Path


def canon(torsion):
    """Invariant factors of ⊕ ℤ/t via prime-power decomposition."""
    powers: dict[int, list[int]] = {}
    for t in torsion:
        n, p = t, 2
        while n > 1:
            if n % p == 0:
                q = 1
                while n % p == 0:
                    n //= p
                    q *= p
                powers.setdefault(p, []).append(q)
            p += 1
    k = max((len(v) for v in powers.values()), default=0)
    for v in powers.values():
        v.sort()
        v[:0] = [1] * (k - len(v))
    out = [math.prod(v[i] for v in powers.values()) for i in range(k)]
    return [d for d in out if d > 1]


def manifold_cohomology(betti, h1_torsion):
    """H^k for a closed oriented manifold of dimension len(betti) - 1.

    Homology torsion: T_1 given, T_{dim-2} = T_1 by duality (T_{k} ≅ T_{dim-k-1}),
    other torsion zero; this covers dimensions <= 4.  UCT: H^k = ℤ^{b_k} ⊕ T_{k-1}.
    """
    dim = len(betti) - 1
    T = {k: [] for k in range(dim + 1)}
    T[1] = list(h1_torsion)
    if dim - 2 > 1:
        T[dim - 2] = list(h1_torsion)
    H = {}
    for k in range(dim + 1):
        tors = T.get(k - 1, []) if k >= 1 else []
        H[k] = {"rank": betti[k], "torsion": canon(tors)}
    return H


def _tensor(a, b):
    rank = a["rank"] * b["rank"]
    tors = [t for t in a["torsion"] for _ in range(b["rank"])]
    tors += [t for t in b["torsion"] for _ in range(a["rank"])]
    tors += [math.gcd(s, t) for s in a["torsion"] for t in b["torsion"]]
    return rank, tors


def _tor(a, b):
    return [math.gcd(s, t) for s in a["torsion"] for t in b["torsion"]]


def kunneth(HA, HB):
    """Full cohomological Künneth: H^p = ⊕ H^i ⊗ H^j  ⊕  ⊕_{i+j=p+1} Tor(H^i, H^j)."""
    out: dict[int, dict] = {}
    for i, a in HA.items():
        for j, b in HB.items():
            r, t = _tensor(a, b)
            e = out.setdefault(i + j, {"rank": 0, "torsion": []})
            e["rank"] += r
            e["torsion"] += t
            if i + j - 1 >= 0:
                e = out.setdefault(i + j - 1, {"rank": 0, "torsion": []})
                e["torsion"] += _tor(a, b)
    return {k: {"rank": v["rank"], "torsion": canon(v["torsion"])} for k, v in sorted(out.items())}


def graded_json(H, name, derivation):
    return {
        "name": name,
        "derivation": derivation,
        "degrees": {str(k): v for k, v in sorted(H.items()) if v["rank"] or v["torsion"]},
    }


def partition_numbers(n_max):
    """p(0..n_max) by the pentagonal-number recurrence (independent of the package)."""
    p = [1] + [0] * n_max
    for n in range(1, n_max + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def series_coefficients(x, D):
    """Coefficients of prod_i (1 - t^i)^(-x) up to t^D by repeated division."""
    c = [1] + [0] * D
    for i in range(1, D + 1):
        for _ in range(x):
            for k in range(i, D + 1):
                c[k] += c[k - i]
    return c


def corpus_expectations():
    return {
        "partition_numbers": partition_numbers(7)[1:],
        "gs_coefficients": {str(x): series_coefficients(x, 6) for x in range(4)},
        "theta": {
            "abelian:2": True, "abelian:3": True, "s3ext": True, "c3c2": True,
            "wreath:cyclic:2:2": True, "wreath:cyclic:3:2": True, "wreath:cyclic:2:3": True,
            "heisenberg:2": False, "heisenberg:3": False, "a4cover": False,
            "exS0:2": True,
        },
        "exS0_condition_iii": {
            "holds": False,
            "class_points_by_index": {"1": 2, "2": 6},
            "character_orbits_by_index": {"1": 4, "4": 1},
        },
        "xi_sequences": ["heisenberg:2", "s3ext", "c3c2"],
        "heisenberg_n": [2, 3],
        "snf_trials": 1000,
        "snf_max_size": 8,
        "snf_entry_bound": 50,
        "tau0_trials": 500,
        "page_trials": 100,
        "extquot_trials": 200,
        "audit": {"base": "enriques_x_curve_g1", "d3": "d3_enriques_x_curve_g1", "d": 2,
                  "base_odd_tau": 2 ** 4},
        "sigma_n_max": 5,
        "centralizer_n_max": 6,
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "src" / "equiquot" / "data"))
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    enriques = manifold_cohomology([1, 0, 10, 0, 1], [2])
    files = {
        "enriques": graded_json(enriques, "Enriques surface",
                                "Betti (1,0,10,0,1), H_1 = Z/2; Poincare duality and universal coefficients"),
        "point": graded_json({0: {"rank": 1, "torsion": []}}, "point", "trivial"),
    }
    for g in (1, 2, 3):
        curve = manifold_cohomology([1, 2 * g, 1], [])
        files[f"curve_g{g}"] = graded_json(curve, f"curve of genus {g}", f"Betti (1,{2 * g},1), torsion-free")
        prod = kunneth(enriques, curve)
        files[f"enriques_x_curve_g{g}"] = graded_json(
            prod, f"Enriques x curve of genus {g}", "full Kunneth formula with Tor terms")
        odd_tau = math.prod(t for k, v in prod.items() if k % 2 for t in v["torsion"])
        assert odd_tau == 2 ** (2 * g + 2), (g, odd_tau)
        # d3 sends the generator of H^0 to the first Z/2 generator of H^3
        h3 = prod[3]
        n3 = len(h3["torsion"]) + h3["rank"]
        files[f"d3_enriques_x_curve_g{g}"] = {"rows": [[1]] + [[0]] * (n3 - 1), "cols": 1}
        files[f"d3_zero_enriques_x_curve_g{g}"] = {"rows": [[0]] * n3, "cols": 1}
    files["corpus"] = corpus_expectations()
    for name, data in files.items():
        (out / f"{name}.json").write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {len(files)} fixtures to {out}")


if __name__ == "__main__":
    main()
