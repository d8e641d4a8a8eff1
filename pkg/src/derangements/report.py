"""Pass/fail records shared by the identity checks and the moment checks."""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from .exact import BiPoly, GaussianRational, Poly, rational_to_str


class Mode(enum.Enum):
    EXACT_POLY = "ExactPoly"
    EXACT_POINT = "ExactPoint"
    NUMERIC_TOLERANCE = "NumericTolerance"


class Status(enum.Enum):
    PASS = "Pass"
    FAIL = "Fail"


@dataclass(frozen=True)
class IdentityCheck:
    id: str
    statement: str
    mode: Mode
    params: dict = field(default_factory=dict)
    tolerance: float | None = None

    def __post_init__(self):
        if self.mode is Mode.NUMERIC_TOLERANCE and self.tolerance is None:
            raise ValueError(f"{self.id}: numeric checks need an explicit tolerance")


@dataclass
class IdentityReport:
    check_id: str
    status: Status
    mode: Mode
    statement: str = ""
    params: dict = field(default_factory=dict)
    witness: dict | None = None
    elapsed: float = 0.0
    max_residual: float | None = None

    @property
    def passed(self) -> bool:
        return self.status is Status.PASS

    def to_json(self) -> dict:
        out = {
            "id": self.check_id,
            "status": self.status.value,
            "mode": self.mode.value,
            "statement": self.statement,
            "params": {k: jsonable(v) for k, v in self.params.items()},
            "witness": None if self.witness is None else {k: jsonable(v) for k, v in self.witness.items()},
            "elapsed": round(self.elapsed, 6),
        }
        if self.max_residual is not None:
            out["max_residual"] = self.max_residual
        return out


REPORT_SCHEMA = {
    "type": "array",
    "items": {
        "type": "object",
        "required": ["id", "status", "mode", "params", "witness", "elapsed"],
        "properties": {
            "id": {"type": "string"},
            "status": {"enum": ["Pass", "Fail"]},
            "mode": {"enum": [m.value for m in Mode]},
            "statement": {"type": "string"},
            "params": {"type": "object"},
            "witness": {"type": ["object", "null"]},
            "elapsed": {"type": "number", "minimum": 0},
            "max_residual": {"type": "number"},
        },
    },
}


def jsonable(value: Any):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return rational_to_str(value)
    if isinstance(value, GaussianRational):
        return {"re": rational_to_str(value.re), "im": rational_to_str(value.im)}
    if isinstance(value, (Poly, BiPoly)):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (int, float, str)):
        return value
    return str(value)


class Mismatch(Exception):
    """Raised inside a check body to stop at the first failing point."""

    def __init__(self, **witness):
        super().__init__(witness)
        self.witness = witness


def expect_equal(lhs, rhs, **where) -> None:
    if lhs != rhs:
        raise Mismatch(**where, lhs=lhs, rhs=rhs)


def run_check(check: IdentityCheck, body: Callable[[], float | None]) -> IdentityReport:
    """Run ``body``; a raised :class:`Mismatch` becomes a Fail with witness.

    Numeric bodies return their largest residual; exact bodies return None.
    """
    start = time.perf_counter()
    witness = None
    residual = None
    try:
        residual = body()
    except Mismatch as exc:
        witness = exc.witness
    elapsed = time.perf_counter() - start
    return IdentityReport(
        check_id=check.id,
        status=Status.PASS if witness is None else Status.FAIL,
        mode=check.mode,
        statement=check.statement,
        params=dict(check.params),
        witness=witness,
        elapsed=elapsed,
        max_residual=residual,
    )
