"""Structured pass/fail records for one identity instance."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from .exactnum import Polynomial, format_rational

Value = Union[Fraction, Polynomial]


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    parameters: dict[str, int]
    lhs: Value
    rhs: Value
    residual: Value
    holds: bool
    notes: dict[str, str] = field(default_factory=dict)

    @classmethod
    def build(cls, identity_id: str, parameters: dict[str, int], lhs, rhs,
              notes: dict[str, str] | None = None) -> IdentityReport:
        if isinstance(lhs, Polynomial) != isinstance(rhs, Polynomial):
            raise TypeError("lhs and rhs must both be scalars or both be polynomials")
        if not isinstance(lhs, Polynomial):
            lhs, rhs = Fraction(lhs), Fraction(rhs)
            residual = lhs - rhs
            holds = residual == 0
        else:
            residual = lhs - rhs
            holds = residual.is_zero()
        return cls(identity_id, dict(parameters), lhs, rhs, residual, holds, dict(notes or {}))

    @property
    def kind(self) -> str:
        return "polynomial" if isinstance(self.lhs, Polynomial) else "scalar"

    def to_dict(self) -> dict:
        def enc(v: Value):
            return v.to_dict() if isinstance(v, Polynomial) else format_rational(v)

        out = {
            "identity_id": self.identity_id,
            "parameters": dict(self.parameters),
            "kind": self.kind,
            "lhs": enc(self.lhs),
            "rhs": enc(self.rhs),
            "residual": enc(self.residual),
            "holds": self.holds,
        }
        if self.notes:
            out["notes"] = dict(self.notes)
        return out
