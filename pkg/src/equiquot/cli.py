"""The ``equiquot`` command line.

Every subcommand builds a :class:`~equiquot.report.Report` through
:func:`run` and prints it as JSON (default) or text.  Exit status is 0 when
every verdict passes, 1 on a failed verdict, 2 on bad input and 3 when a
budget is exceeded.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path
from typing import Sequence

from . import citations
from .adequacy import in_s0, is_s0_adequate
from .char_theory import character_table
from .corpus import run_corpus
from .errors import BudgetExceeded, EquiquotError, InvalidInput
from .groups import Partition, centralizer_report, cycle_type, partitions
from .gset import extended_quotient_class_count, inertia, orbifold_euler
from .presets import preset_ref, resolve_group, resolve_gset, resolve_sequence
from .proof import Proof
from .report import Report, RunConfig
from .skew_algebra import verify_heisenberg_lemma, verify_xi
from .torsion import GradedGroup, IntMatrix, audit_theorem_c, load_fixture, smith_normal_form
from .zeta import verify_gs_identity

__all__ = ["run", "main", "build_parser"]


# ---------------------------------------------------------------------------
# input helpers


def _load_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from None


def _ref_or_file(ref: str):
    """A preset string, or the parsed content of a JSON file."""
    if ref.endswith(".json") or Path(ref).is_file():
        return _load_json(ref)
    return ref


def _fixture_or_file(ref: str) -> dict:
    return _load_json(ref) if Path(ref).is_file() else load_fixture(ref)


def _preset(inputs: dict, key: str = "group"):
    """``--preset/--n/--t`` or an explicit ``--group`` reference."""
    if inputs.get(key):
        return _ref_or_file(inputs[key])
    if not inputs.get("preset"):
        raise InvalidInput(f"give --{key} or --preset")
    data = {"preset": inputs["preset"]}
    for k in ("t", "n"):
        if inputs.get(k) is not None:
            data[k] = inputs[k]
    return preset_ref(data)


def _add_proof(rep: Report, proof: Proof, prefix: str = "") -> None:
    for c in proof.checks:
        rep.add(f"{prefix}{c.name}", c.passed, proof.citation, c.detail)
    rep.data.setdefault("proofs", []).append(proof)


# ---------------------------------------------------------------------------
# commands


def _cmd_group(cfg: RunConfig, rep: Report) -> None:
    inp = cfg.inputs
    G = resolve_group(_preset(inp), cfg.max_group_order)
    sizes = G.class_sizes
    rep.data["group"] = {"name": G.name, "order": G.order, "degree": G.degree,
                         "generators": [list(g) for g in G.generators], "num_classes": G.num_classes}
    rep.add("class equation: class sizes sum to |G|", sum(sizes) == G.order, citations.PLUMBING,
            f"{G.num_classes} classes")
    if inp.get("classes"):
        rep.data["classes"] = [
            {"representative": list(g), "cycle_type": list(reversed(cycle_type(g).parts())), "size": s,
             "order": g.order()}
            for g, s in zip(G.class_reps, sizes)
        ]
    is_sym = inp.get("preset") == "sym" or (isinstance(inp.get("group"), str) and inp["group"].startswith("sym:"))
    if is_sym:
        n = G.degree if G.order > 1 else int(inp.get("n") or 1)
        p = partitions(n)
        types = {cycle_type(g) for g in G.class_reps}
        rep.add(f"classes of S_{n} biject with the {len(p)} partitions of {n}",
                G.num_classes == len(p) and types == set(p), citations.CLASSES)
    if inp.get("centralizer"):
        try:
            parts = [int(x) for x in inp["centralizer"].split(",") if x]
        except ValueError:
            raise InvalidInput(f"bad partition {inp['centralizer']!r}") from None
        if math.factorial(sum(parts)) > cfg.max_group_order:
            raise BudgetExceeded("--centralizer partition exceeds the group-order budget")
        proof = centralizer_report(Partition.from_parts(parts))
        for c in proof.checks:
            defect = ""
            if not c.passed and "direct product" in c.name:
                defect = "the centralizer is the block rotations semidirect H, not <g> x H"
            rep.add(c.name, c.passed, proof.citation, c.detail, defect)
        rep.data["centralizer"] = proof


def _gset(cfg: RunConfig):
    inp = cfg.inputs
    group = resolve_group(_preset(inp), cfg.max_group_order) if (inp.get("group") or inp.get("preset")) else None
    ref = inp.get("gset")
    if not ref:
        raise InvalidInput("give --gset")
    return resolve_gset(_ref_or_file(ref), group, cfg.max_group_order)


def _cmd_gset(cfg: RunConfig, rep: Report) -> None:
    X = _gset(cfg)
    I = inertia(X)
    a = len(I.quotient())
    b = extended_quotient_class_count(X)
    census = sorted(X.orbit_census().items())
    rep.data["gset"] = {"name": X.name, "group_order": X.group.order, "points": len(X.points),
                        "orbits": [sorted(o) for o in X.orbits()],
                        "stabilizer_orders": [{"order": k, "orbits": v} for k, v in census]}
    rep.data["extended_quotient"] = {"inertia_points": len(I.points), "size": a}
    rep.data["orbifold_euler"] = {str(m): orbifold_euler(X, m) for m in (1, 2)}
    rep.add("|X/^ex G| = sum over classes of |X^g/Z(g)|", a == b, citations.EXTQUOT, f"{a} = {b}")
    rep.add("orbifold Euler number of order 1 = |X/^ex G|", rep.data["orbifold_euler"]["1"] == a,
            citations.ORBIFOLD_EULER)


def _cmd_chartable(cfg: RunConfig, rep: Report) -> None:
    G = resolve_group(_preset(cfg.inputs), cfg.max_group_order)
    T = character_table(G)
    for k, ok in T.verify().items():
        rep.add(f"character table: {k.replace('_', ' ')}", ok, citations.PLUMBING)
    rep.data["table"] = T


def _cmd_adequacy(cfg: RunConfig, rep: Report) -> None:
    inp = cfg.inputs
    if inp.get("gset"):
        X = _gset(cfg)
        ar = is_s0_adequate(X)
        rep.data["adequacy"] = ar
        rep.add(f"adequacy decided for {X.name or 'X'}: adequate = {ar.adequate}", True,
                [citations.ADEQUATE, citations.THEOREM_A], ar.theorem_a_conclusion)
        return
    if inp.get("group"):
        raise InvalidInput("--group needs --gset; use --preset for an exact sequence")
    seq = resolve_sequence(_preset(inp, "sequence"), cfg.max_group_order)
    r = in_s0(seq)
    rep.data["s0"] = r
    rep.add(f"condition (ii) decided by exhaustive extension search: {r.cond_ii}", True,
            [citations.S0_II, citations.SPLIT], "witness verified" if r.cond_ii else "no extension exists")
    rep.add(f"condition (iii) decided from stabilizer multisets: {r.cond_iii.holds}", True, citations.S0_III)
    rep.add(f"in_s0 = {r.in_s0}", True, citations.S0_DEF)
    if inp.get("regular_gset"):
        X = resolve_gset(f"through:{_preset(inp, 'sequence')}", None, cfg.max_group_order)
        ar = is_s0_adequate(X)
        rep.data["adequacy"] = ar
        rep.add(f"G-set pulled back from regular H-set: adequate = {ar.adequate}", ar.adequate == r.in_s0,
                [citations.ADEQUATE, citations.THEOREM_A], ar.theorem_a_conclusion)


def _cmd_verify(cfg: RunConfig, rep: Report) -> None:
    inp = cfg.inputs
    what = inp.get("what")
    if what == "xi":
        seq = resolve_sequence(_preset(inp, "sequence"), cfg.max_group_order)
        proof = verify_xi(seq, strict=False)
        _add_proof(rep, proof, "xi: ")
        d = proof.data
        rep.add("dim O(H)*G = |H||G| = dim End_N(O(G)) = |H|^2|N|",
                d["dim_skew"] == d["dim_End_N"] == d["H_sq_N"], citations.XI)
    elif what == "heisenberg":
        if inp.get("n") is None:
            raise InvalidInput("verify heisenberg needs --n")
        n = int(inp["n"])
        if n < 2:
            raise InvalidInput("--n must be >= 2")
        resolve_sequence(f"heisenberg:{n}", cfg.max_group_order)  # budget check
        _add_proof(rep, verify_heisenberg_lemma(n, strict=False))
    else:
        raise InvalidInput("verify takes xi or heisenberg")


def _cmd_zeta(cfg: RunConfig, rep: Report) -> None:
    inp = cfg.inputs
    x, D = int(inp.get("x", 1)), int(inp.get("degree", 6))
    if D > cfg.max_series_degree:
        raise InvalidInput(f"--degree {D} exceeds the series budget {cfg.max_series_degree}")
    proof = verify_gs_identity(x, D, brute_max=int(inp.get("brute_max", 4)), strict=False,
                               budget=cfg.max_brute_force)
    _add_proof(rep, proof)
    rep.data["coefficients"] = proof.data["product"]


def _cmd_torsion(cfg: RunConfig, rep: Report) -> None:
    inp = cfg.inputs
    what = inp.get("what")
    if what == "audit":
        for k in ("base", "d", "d3"):
            if inp.get(k) is None:
                raise InvalidInput(f"torsion audit needs --{k.replace('_', '-')}")
        base = GradedGroup.from_json(_fixture_or_file(inp["base"]))
        d3 = IntMatrix.from_json(_fixture_or_file(inp["d3"]))
        report = audit_theorem_c(base, int(inp["d"]), d3, row=int(inp.get("row") or 1),
                                 r_max=inp.get("r_max"))
        for c in report["checks"]["checks"]:
            rep.add(c["name"], c["passed"], citations.TAU_SS if "E" in c["name"] else citations.BOUND,
                    c["detail"])
        rep.add(f"tau(K1(E)) < d tau(K1(B)) certified ({report['status']})", report["certified"],
                [citations.BOUND, citations.MAIN_EXAMPLE])
        rep.data["audit"] = report
    elif what == "snf":
        if not inp.get("matrix"):
            raise InvalidInput("torsion snf needs --matrix")
        src = _load_json(inp["matrix"]) if Path(inp["matrix"]).is_file() else json.loads(inp["matrix"])
        A = IntMatrix.from_json(src) if isinstance(src, dict) else IntMatrix.from_rows(src)
        snf = smith_normal_form(A, verify=True)
        rep.add("U A V = D with U, V unimodular and a divisibility chain", True, citations.PLUMBING)
        rep.data["snf"] = {"U": snf.U, "D": snf.D, "V": snf.V, "diagonal": snf.diagonal, "rank": snf.rank}
    else:
        raise InvalidInput("torsion takes audit or snf")


def _cmd_corpus(cfg: RunConfig, rep: Report) -> None:
    inp = cfg.inputs
    out = run_corpus(seed=cfg.seed, filter=inp.get("filter"), fixtures=inp.get("fixtures"))
    rep.verdicts.extend(out.verdicts)
    rep.data.update(out.data)


COMMANDS = {
    "group": _cmd_group,
    "gset": _cmd_gset,
    "chartable": _cmd_chartable,
    "adequacy": _cmd_adequacy,
    "verify": _cmd_verify,
    "zeta": _cmd_zeta,
    "torsion": _cmd_torsion,
    "corpus": _cmd_corpus,
}


def run(config: RunConfig) -> Report:
    if config.command not in COMMANDS:
        raise InvalidInput(f"unknown command {config.command!r}")
    echo = {"command": config.command, "inputs": dict(sorted(config.inputs.items())), "seed": config.seed}
    rep = Report(echo)
    COMMANDS[config.command](config, rep)
    if not rep.verdicts:
        raise InvalidInput("command produced no verdicts")
    return rep


# ---------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InvalidInput(f"{self.prog}: {message}")


def _group_args(p: argparse.ArgumentParser, sequence: bool = False) -> None:
    p.add_argument("--preset", help="preset name, e.g. sym, heisenberg, wreath, exS0, a4cover")
    p.add_argument("--n", type=int, help="preset size parameter")
    p.add_argument("--t", help="wreath factor, e.g. cyclic:2")
    if sequence:
        p.add_argument("--sequence", help="sequence reference, e.g. heisenberg:2 or partition:2,1")
    p.add_argument("--group", help="group reference (preset string or JSON file)")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", choices=["json", "text"], default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--max-group-order", type=int, default=None)
    common.add_argument("--max-brute-force", type=int, default=None)
    common.add_argument("--max-degree", type=int, default=None, dest="max_series_degree")
    common.add_argument("--config", help="JSON RunConfig file")

    ap = _Parser(prog="equiquot", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("group", parents=[common], help="group summary and conjugacy classes")
    _group_args(p)
    p.add_argument("--classes", action="store_true", help="list conjugacy classes")
    p.add_argument("--centralizer", help="partition, e.g. 2,2,1: centralizer structure in S_n")

    p = sub.add_parser("gset", parents=[common], help="orbits, inertia and extended quotient")
    _group_args(p)
    p.add_argument("--gset", required=True, help="G-set reference or JSON file")

    p = sub.add_parser("chartable", parents=[common], help="verified character table")
    _group_args(p)

    p = sub.add_parser("adequacy", parents=[common], help="S0 test for a sequence or a G-set")
    _group_args(p, sequence=True)
    p.add_argument("--gset", help="G-set reference or JSON file")
    p.add_argument("--regular-gset", action="store_true",
                   help="also test the regular H-set pulled back to G")

    p = sub.add_parser("verify", parents=[common], help="certify xi or the Heisenberg lemma")
    p.add_argument("what", choices=["xi", "heisenberg"])
    _group_args(p, sequence=True)

    p = sub.add_parser("zeta", parents=[common], help="Galkin-Shinder identity under counting")
    p.add_argument("--x", type=int, default=1)
    p.add_argument("--degree", type=int, default=6)
    p.add_argument("--brute-max", type=int, default=4)

    p = sub.add_parser("torsion", parents=[common], help="Smith normal form and the torsion audit")
    p.add_argument("what", choices=["audit", "snf"])
    p.add_argument("--base", help="graded group file or bundled fixture name")
    p.add_argument("--d", type=int)
    p.add_argument("--d3", help="d3 matrix file or bundled fixture name")
    p.add_argument("--row", type=int)
    p.add_argument("--r-max", type=int)
    p.add_argument("--matrix", help="JSON matrix file or inline rows")

    p = sub.add_parser("corpus", parents=[common], help="run every acceptance scenario")
    p.add_argument("--filter", help="scenario name substring or tag")
    p.add_argument("--fixtures", help="directory of fixture JSON files")
    return ap


_GLOBAL = {"output", "seed", "max_group_order", "max_brute_force", "max_series_degree", "config", "command"}


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    inputs = {k: v for k, v in vars(ns).items() if k not in _GLOBAL and v not in (None, False)}
    if ns.config:
        base = RunConfig.from_dict(_load_json(ns.config)).to_json()
        if base["command"] != ns.command:
            raise InvalidInput(f"config is for {base['command']!r}, not {ns.command!r}")
        inputs = {**base["inputs"], **inputs}
        env = {k: base[k] for k in ("max_group_order", "max_brute_force", "max_series_degree", "seed", "output")}
    else:
        env = {}
    for k in ("max_group_order", "max_brute_force", "max_series_degree", "seed", "output"):
        if getattr(ns, k) is not None:
            env[k] = getattr(ns, k)
    return RunConfig.from_env(ns.command, inputs=inputs, **env)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        cfg = config_from_args(ns)
        rep = run(cfg)
    except EquiquotError as exc:
        print(f"equiquot: {type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(rep.dumps() if cfg.output == "json" else rep.render_text() + "\n")
    return 0 if rep.passed else 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
