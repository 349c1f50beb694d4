"""Verdict values shared by the decision procedures, with JSON forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any


class Kind(str, Enum):
    SIMPLE = "Simple"
    NOT_SIMPLE = "NotSimple"
    TRIVIAL = "Trivial"
    INAPPLICABLE = "Inapplicable"
    UNDECIDED = "Undecided"
    SCALARS = "ScalarMultiplesOfIdentity"
    ZERO = "Zero"


class InvariantBreach(RuntimeError):
    """Two independent computations that must agree did not."""


@dataclass(frozen=True)
class Verdict:
    kind: Kind
    reason: str = ""
    certificate: tuple = ()
    witness: Any = None
    theorems: tuple[str, ...] = field(default=())

    @property
    def is_simple(self) -> bool:
        return self.kind is Kind.SIMPLE

    @property
    def applicable(self) -> bool:
        return self.kind is not Kind.INAPPLICABLE

    def to_json(self, field_spec=None) -> dict:
        fmt = field_spec.format_scalar if field_spec is not None else str
        out: dict[str, Any] = {"verdict": self.kind.value}
        if self.certificate:
            out["certificate"] = [fmt(c) for c in self.certificate]
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness"] = _plain(self.witness)
        if self.theorems:
            out["theorems"] = list(self.theorems)
        return out


def _plain(obj):
    if isinstance(obj, (frozenset, set)):
        return sorted(_plain(x) for x in obj)
    if isinstance(obj, (list, tuple)):
        return [_plain(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _plain(v) for k, v in obj.items()}
    if isinstance(obj, Enum):
        return obj.value
    return obj
