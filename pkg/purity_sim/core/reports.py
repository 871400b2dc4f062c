"""
core/reports.py — Pydantic models for pass/fail verification reports.

Exact checks carry rationals as strings ("3/4") so nothing is rounded;
sampled checks carry floats plus the statistical allowance added to the bound.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, computed_field

Relation = Literal["<=", ">=", "=="]


def _fmt(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return repr(float(value))


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    observed: str
    relation: Relation
    bound: str
    allowance: float = Field(default=0.0, ge=0.0, description="Statistical slack added to the bound")
    passed: bool

    @classmethod
    def exact(cls, name: str, observed: Fraction, relation: Relation, bound: Fraction) -> CheckResult:
        if relation == "<=":
            passed = observed <= bound
        elif relation == ">=":
            passed = observed >= bound
        else:
            passed = observed == bound
        return cls(name=name, observed=_fmt(observed), relation=relation, bound=_fmt(bound), passed=passed)

    @classmethod
    def sampled(cls, name: str, observed: float, relation: Relation, bound: float, allowance: float) -> CheckResult:
        """One-sided check with the bound loosened by `allowance` in the permissive direction."""
        if relation == "<=":
            passed = observed <= bound + allowance
        elif relation == ">=":
            passed = observed >= bound - allowance
        else:
            passed = abs(observed - bound) <= allowance
        return cls(
            name=name,
            observed=_fmt(observed),
            relation=relation,
            bound=_fmt(bound),
            allowance=allowance,
            passed=passed,
        )


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    title: str
    parameters: dict[str, str | int | float]
    checks: list[CheckResult]

    @computed_field
    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)
