"""Pydantic schemas for report files.

Only `results` is covered by `results_digest`; timing and run metadata live
outside it so repeated runs produce identical digests.
"""

import hashlib
import json
from typing import Any

from pydantic import BaseModel, Field


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"), ensure_ascii=True)


def digest_of(data: Any) -> str:
    return hashlib.sha256(canonical_json(data).encode("utf-8")).hexdigest()


class RunInfo(BaseModel):
    """Settings that shaped the run (outside the digest)."""

    threads: int = Field(..., ge=1)
    cover_cap: int
    section_cap: int
    include_trivial_context: bool


class ReportFile(BaseModel):
    """Schema for the JSON report written by `check` and `ks`."""

    tool: str
    version: str
    command: str
    input_name: str
    input_digest: str
    results: dict[str, Any]
    results_digest: str = ""
    run: RunInfo
    timing: dict[str, Any] = Field(default_factory=dict)

    def seal(self) -> "ReportFile":
        """Fill in the digest of the results section."""
        return self.model_copy(update={"results_digest": digest_of(self.results)})

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.model_dump(mode="json"), sort_keys=True, indent=indent)
