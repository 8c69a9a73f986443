"""
Verification report schemas
"""
import json
from typing import Dict, List

from pydantic import BaseModel, Field

from app.models.enums import VerificationMode


class Counterexample(BaseModel):
    """One failed check: what went in, what should have come out, what did"""

    input: str
    expected: str
    got: str


class ChunkResult(BaseModel):
    """Partial result of one sweep chunk, merged in chunk order"""

    index: int
    checked: int = 0
    failure_count: int = 0
    failures: List[Counterexample] = []
    details: Dict[str, int] = {}


class VerificationReport(BaseModel):
    """Outcome of one verification run"""

    mode: VerificationMode
    parameters: Dict[str, int] = {}
    checked: int = 0
    failure_count: int = 0
    # capped at MAX_STORED_FAILURES, in sweep order
    failures: List[Counterexample] = []
    details: Dict[str, int] = {}
    elapsed_ms: int = Field(default=0, ge=0)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    def record_failure(self, failure: Counterexample, max_stored: int) -> None:
        self.failure_count += 1
        if len(self.failures) < max_stored:
            self.failures.append(failure)

    def merge(self, chunk: ChunkResult, max_stored: int) -> None:
        self.checked += chunk.checked
        self.failure_count += chunk.failure_count
        room = max_stored - len(self.failures)
        if room > 0:
            self.failures.extend(chunk.failures[:room])
        for key, value in chunk.details.items():
            self.details[key] = self.details.get(key, 0) + value

    def to_record(self, include_timing: bool = True) -> str:
        """One JSON object, stable key order"""
        exclude = None if include_timing else {"elapsed_ms"}
        payload = self.model_dump(mode="json", exclude=exclude)
        payload["verdict"] = self.verdict
        return json.dumps(payload, separators=(",", ":"))

    def fingerprint(self) -> str:
        """The record without timing: identical for serial and parallel runs"""
        return self.to_record(include_timing=False)

    def summary_line(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in self.parameters.items())
        head = f"{self.mode.value}"
        if params:
            head = f"{head} [{params}]"
        return (
            f"{head}: {self.verdict.upper()} checked={self.checked} "
            f"failures={self.failure_count} elapsed={self.elapsed_ms}ms"
        )
