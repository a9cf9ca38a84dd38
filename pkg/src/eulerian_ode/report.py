from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .kernel import IntPoly, IntSeries
from .render import value_from_json, value_to_json

Value = Union[IntPoly, IntSeries]


def first_mismatch(lhs: Value, rhs: Value) -> int | None:
    """Index of the first coefficient where the two sides differ."""
    a, b = lhs.coeffs, rhs.coeffs
    n = max(len(a), len(b))
    for k in range(n):
        x = a[k] if k < len(a) else 0
        y = b[k] if k < len(b) else 0
        if x != y:
            return k
    return None


@dataclass(frozen=True)
class VerificationReport:
    identity: str
    params: dict
    passed: bool
    first_mismatch: int | None = None
    lhs: Value | None = None
    rhs: Value | None = None
    extra: dict = field(default_factory=dict)

    @classmethod
    def compare(cls, identity: str, params: dict, lhs: Value, rhs: Value) -> VerificationReport:
        if isinstance(lhs, IntSeries) and isinstance(rhs, IntSeries) and lhs.order != rhs.order:
            raise ValueError(f"order mismatch: {lhs.order} vs {rhs.order}")
        k = first_mismatch(lhs, rhs)
        if k is None:
            return cls(identity, dict(params), True)
        return cls(identity, dict(params), False, k, lhs, rhs)

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "params": self.params,
            "verdict": self.verdict,
            "first_mismatch": self.first_mismatch,
            "lhs": value_to_json(self.lhs),
            "rhs": value_to_json(self.rhs),
        }
        if self.extra:
            out["extra"] = self.extra
        return out

    @classmethod
    def from_json(cls, obj: dict) -> VerificationReport:
        return cls(
            obj["identity"],
            dict(obj["params"]),
            obj["verdict"] == "pass",
            obj["first_mismatch"],
            value_from_json(obj["lhs"]),
            value_from_json(obj["rhs"]),
            dict(obj.get("extra", {})),
        )

    def summary(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        line = f"{self.identity} {params}: {self.verdict}"
        if not self.passed and self.first_mismatch is not None:
            line += f" (first mismatch at t^{self.first_mismatch})"
        return line
