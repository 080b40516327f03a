"""Verdict records shared by every check in the package."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

PASS = "PASS"
FAIL = "FAIL"
INDETERMINATE = "INDETERMINATE"


@dataclass(frozen=True)
class VerificationReport:
    """One checked claim: verdict plus enough evidence to replay it."""

    claim_id: str
    regime: str
    verdict: str
    evidence: dict
    runtime_ms: int

    def as_dict(self) -> dict:
        return {
            "claim_id": self.claim_id,
            "regime": self.regime,
            "verdict": self.verdict,
            "evidence": self.evidence,
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        """Stable wire form: omits the wall-clock field so identical
        invocations emit identical bytes."""
        d = self.as_dict()
        del d["runtime_ms"]
        return json.dumps(d)


def start_clock() -> float:
    return time.perf_counter()


def finish(claim_id: str, regime: str, verdict: str, evidence: dict, t0: float) -> VerificationReport:
    ms = int(round((time.perf_counter() - t0) * 1000))
    return VerificationReport(claim_id, regime, verdict, evidence, ms)
