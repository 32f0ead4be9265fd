"""Exception hierarchy.

Every error carries a machine-readable ``reason`` code and an optional
``witness`` payload; the CLI maps exceptions to exit codes through
``exit_code``.
"""
from __future__ import annotations

from typing import Any, Optional


class MTLError(Exception):
    reason = "ERROR"
    exit_code = 1

    def __init__(self, message: str, witness: Optional[dict] = None):
        super().__init__(message)
        self.witness = witness or {}

    def to_dict(self) -> dict[str, Any]:
        return {"error": str(self), "reason": self.reason, "witness": self.witness}


class OutOfRange(MTLError):
    reason = "OUT_OF_RANGE"


class AxiomViolation(MTLError):
    reason = "AXIOM_VIOLATION"
    exit_code = 2

    def __init__(self, report):
        failed = ", ".join(report.failures())
        super().__init__(f"table is not a finite MTL-chain ({failed})", report.witnesses)
        self.report = report


class TrivialChain(MTLError):
    reason = "TRIVIAL_CHAIN"
    exit_code = 3


class NotIdempotent(MTLError):
    reason = "NOT_IDEMPOTENT"
    exit_code = 3


class NotAFilter(MTLError):
    reason = "NOT_A_FILTER"
    exit_code = 3


class NotLocallyUnital(MTLError):
    reason = "NOT_LOCALLY_UNITAL"
    exit_code = 3


class NotExact(MTLError):
    reason = "NOT_EXACT"
    exit_code = 3


class MalformedSpec(MTLError):
    reason = "MALFORMED_SPEC"


class ConditionsFailed(MTLError):
    reason = "CONDITIONS_FAILED"
    exit_code = 3


class AssembledNotMTL(MTLError):
    reason = "ASSEMBLED_NOT_MTL"
    exit_code = 2


class EmptyFamily(MTLError):
    reason = "EMPTY_FAMILY"
    exit_code = 3


class ComponentTooSmall(MTLError):
    reason = "COMPONENT_TOO_SMALL"
    exit_code = 3


class UnknownClaim(MTLError):
    reason = "UNKNOWN_CLAIM"
