"""Structured verification records.

A :class:`Proof` lists every individual check behind a claim, each with a
pass flag and a short detail string, together with the statement it
supports and a citation naming that statement.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import VerificationFailure

__all__ = ["Check", "Proof"]


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class Proof:
    """A structured certificate: named checks plus the statement they support."""

    statement: str
    citation: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)
    conventions: list[str] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]

    def raise_if_failed(self) -> "Proof":
        if not self.passed:
            raise VerificationFailure(f"{self.statement}: failed checks {self.failures()}")
        return self

    def to_json(self) -> dict:
        return {
            "statement": self.statement,
            "citation": self.citation,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks],
            "conventions": self.conventions,
            "data": self.data,
        }
