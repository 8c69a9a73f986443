"""
Common schemas for structured CLI output
"""
import json
from typing import Any, Optional

from pydantic import BaseModel


class RecordBase(BaseModel):
    """One newline-delimited JSON record"""

    command: str
    success: bool = True

    def to_record(self) -> str:
        # stdlib json keeps arbitrarily large ints exact
        return json.dumps(self.model_dump(), separators=(",", ":"))


class CommandRecord(RecordBase):
    """Structured result of a non-verify subcommand"""

    input: Optional[Any] = None
    result: Optional[Any] = None
    message: Optional[str] = None


class ErrorRecord(RecordBase):
    """Structured error"""

    success: bool = False
    error: str
    detail: Optional[Any] = None
