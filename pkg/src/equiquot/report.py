"""Run configuration and the report format shared by every command.

A :class:`Report` is a command echo, a list of verdicts (each naming the
statement it certifies) and free-form data.  Serialization is canonical
(sorted keys, fixed separators) and carries no timing, so identical inputs
give byte-identical output.
"""
from __future__ import annotations

import dataclasses
import json
import os
from dataclasses import dataclass, field
from typing import Any, Mapping

from .errors import InvalidInput

__all__ = ["RunConfig", "Verdict", "Report", "to_jsonable", "dumps"]


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        v = int(raw)
    except ValueError:
        raise InvalidInput(f"{name} must be an integer") from None
    if v <= 0:
        raise InvalidInput(f"{name} must be positive")
    return v


@dataclass
class RunConfig:
    command: str
    inputs: dict = field(default_factory=dict)
    max_group_order: int = 50000
    max_brute_force: int = 200000
    max_series_degree: int = 60
    output: str = "json"
    seed: int = 0

    _KEYS = ("command", "inputs", "max_group_order", "max_brute_force", "max_series_degree", "output", "seed")

    def __post_init__(self):
        for k in ("max_group_order", "max_brute_force", "max_series_degree"):
            if int(getattr(self, k)) <= 0:
                raise InvalidInput(f"{k} must be positive")
        if self.output not in ("json", "text"):
            raise InvalidInput("output must be json or text")

    @classmethod
    def from_env(cls, command: str, **kw) -> "RunConfig":
        base = dict(
            max_group_order=_env_int("EQUIQUOT_MAX_GROUP_ORDER", 50000),
            max_brute_force=_env_int("EQUIQUOT_BRUTE_BUDGET", 200000),
            max_series_degree=_env_int("EQUIQUOT_MAX_DEGREE", 60),
        )
        base.update({k: v for k, v in kw.items() if v is not None})
        return cls(command=command, **base)

    @classmethod
    def from_dict(cls, data: Mapping) -> "RunConfig":
        unknown = set(data) - set(cls._KEYS)
        if unknown:
            raise InvalidInput(f"unknown config keys: {sorted(unknown)}")
        if "command" not in data:
            raise InvalidInput("config needs a command")
        return cls(**dict(data))

    def to_json(self) -> dict:
        return {k: getattr(self, k) for k in self._KEYS}


@dataclass
class Verdict:
    name: str
    passed: bool
    citations: list[str]
    detail: str = ""
    known_defect: str = ""

    def __post_init__(self):
        if not self.citations:
            raise InvalidInput(f"verdict {self.name!r} carries no citation")

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": bool(self.passed), "citations": list(self.citations)}
        if self.detail:
            out["detail"] = self.detail
        if self.known_defect:
            out["known_defect"] = self.known_defect
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "Verdict":
        return cls(data["name"], data["passed"], list(data["citations"]),
                   data.get("detail", ""), data.get("known_defect", ""))


@dataclass
class Report:
    command: dict
    verdicts: list[Verdict] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, name: str, passed: bool, citation: str | list[str], detail: str = "",
            known_defect: str = "") -> Verdict:
        cites = [citation] if isinstance(citation, str) else list(citation)
        v = Verdict(name, bool(passed), cites, detail, known_defect)
        self.verdicts.append(v)
        return v

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "verdicts": [v.to_json() for v in self.verdicts],
            "all_pass": self.passed,
            "data": to_jsonable(self.data),
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "Report":
        return cls(dict(data["command"]), [Verdict.from_json(v) for v in data["verdicts"]], dict(data["data"]))

    def dumps(self) -> str:
        return dumps(self.to_json())

    def render_text(self) -> str:
        lines = [f"equiquot {self.command.get('command', '')}"]
        for v in self.verdicts:
            mark = "PASS" if v.passed else "FAIL"
            line = f"  [{mark}] {v.name}"
            if v.detail:
                line += f"  ({v.detail})"
            lines.append(line)
            if v.known_defect:
                lines.append(f"         known defect: {v.known_defect}")
            lines.append(f"         cites: {'; '.join(v.citations)}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def to_jsonable(obj: Any) -> Any:
    """Convert report payloads (dataclasses, tuples, frozensets, objects with
    ``to_json``) into plain JSON values, deterministically."""
    if hasattr(obj, "to_json") and not isinstance(obj, type):
        return to_jsonable(obj.to_json())
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return to_jsonable(dataclasses.asdict(obj))
    if isinstance(obj, Mapping):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted((to_jsonable(v) for v in obj), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(obj, (bool, int, float, str)) or obj is None:
        return obj
    return str(obj)


def dumps(obj: Any) -> str:
    return json.dumps(to_jsonable(obj), sort_keys=True, indent=1, ensure_ascii=False) + "\n"
