"""Machine-readable verdicts for coefficientwise identity checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

VERIFIED = "verified"
MISMATCH = "mismatch"
PRINTED_MISMATCH = "printed_form_mismatch_corrected_form_verified"

#: JSON schema for one serialized report (draft 2020-12 subset)
REPORT_SCHEMA = {
    "type": "object",
    "required": ["identity", "params", "order", "status", "first_divergence"],
    "additionalProperties": False,
    "properties": {
        "identity": {"type": "string"},
        "params": {"type": "object"},
        "order": {"type": "integer", "minimum": 0},
        "status": {
            "type": "string",
            "enum": [VERIFIED, MISMATCH, PRINTED_MISMATCH],
        },
        "first_divergence": {
            "oneOf": [
                {"type": "null"},
                {
                    "type": "object",
                    "required": ["v", "lhs", "rhs"],
                    "additionalProperties": False,
                    "properties": {
                        "v": {"type": "integer", "minimum": 0},
                        "lhs": {"type": "string"},
                        "rhs": {"type": "string"},
                    },
                },
            ]
        },
    },
}


@dataclass(frozen=True)
class Divergence:
    v: int
    lhs: str
    rhs: str


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of checking one identity at one parameter point.

    status is "verified" exactly when first_divergence is None; the
    printed/corrected dual status carries the printed form's first
    divergence for inspection.
    """

    identity_id: str
    params: dict
    order_checked: int
    status: str
    first_divergence: Optional[Divergence] = None

    def __post_init__(self):
        if (self.status == VERIFIED) != (self.first_divergence is None):
            raise ValueError("verified reports and only those omit a divergence")

    @property
    def failed(self) -> bool:
        return self.status == MISMATCH

    def to_json_dict(self) -> dict:
        div = None
        if self.first_divergence is not None:
            div = {
                "v": self.first_divergence.v,
                "lhs": self.first_divergence.lhs,
                "rhs": self.first_divergence.rhs,
            }
        return {
            "identity": self.identity_id,
            "params": self.params,
            "order": self.order_checked,
            "status": self.status,
            "first_divergence": div,
        }
