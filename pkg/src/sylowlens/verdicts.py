"""Structured check results shared by the claim checkers and scans."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

KNOWN_CLAIMS = (
    "thm_1_1",
    "thm_1_2a",
    "thm_1_2b",
    "lemma_2_6",
    "lemma_2_7",
    "hall",
    "zhang_pnilp",
    "conj_1_4",
    "bea_2_1",
    "bea_2_2",
    "bea_2_3",
    "bea_2_4",
    "bea_2_5",
)


@dataclass
class BoundVerdict:
    """One checked claim instance with an exact comparison encoding.

    When a claim is an inequality, ``lhs <= rhs`` is the exact integer form
    (logarithms cleared), so the verdict can never flip on floating-point
    rounding; ``display`` carries the decimal rendering for reports. ``holds``
    is defined only when ``preconditions_met``; an ``error`` marks instances
    the scan had to skip (caps), which count neither as held nor failed.
    """

    claim_id: str
    inputs: dict = field(default_factory=dict)
    lhs: Optional[int] = None
    rhs: Optional[int] = None
    holds: Optional[bool] = None
    preconditions_met: bool = True
    precondition_detail: dict = field(default_factory=dict)
    display: str = ""
    error: Optional[str] = None

    @property
    def failed(self) -> bool:
        return self.preconditions_met and self.holds is False and self.error is None

    @property
    def slack(self) -> Optional[int]:
        if self.lhs is None or self.rhs is None:
            return None
        return self.rhs - self.lhs

    @property
    def is_equality(self) -> bool:
        return (self.holds is True and self.lhs is not None
                and self.lhs == self.rhs)

    def to_json(self) -> dict:
        out = {
            "claim_id": self.claim_id,
            "inputs": self.inputs,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "holds": self.holds,
            "preconditions_met": self.preconditions_met,
            "precondition_detail": self.precondition_detail,
            "display": self.display,
        }
        if self.error is not None:
            out["error"] = self.error
        return out

    @classmethod
    def from_json(cls, data: dict) -> "BoundVerdict":
        return cls(
            claim_id=data["claim_id"],
            inputs=data.get("inputs", {}),
            lhs=data.get("lhs"),
            rhs=data.get("rhs"),
            holds=data.get("holds"),
            preconditions_met=data.get("preconditions_met", True),
            precondition_detail=data.get("precondition_detail", {}),
            display=data.get("display", ""),
            error=data.get("error"),
        )
