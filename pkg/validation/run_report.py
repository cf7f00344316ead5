"""
Run Report Module

The JSON document every CLI command prints to stdout.
"""

import json
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, List, Optional

SCHEMA_VERSION = 1


@dataclass
class RunReport:
    """
    Reports are byte-identical for identical inputs apart from elapsed_ms and generated_at.

    verification is "passed" whenever a witness is present, "not-applicable"
    when there is nothing to verify, and "failed" only on internal errors.
    """

    command: str
    arguments: Dict[str, Any]
    status: str = "ok"
    instance: Optional[Dict[str, Any]] = None
    answer: Optional[str] = None
    witness: Optional[List] = None
    pi_before: Optional[int] = None
    pi_after: Optional[int] = None
    verification: str = "not-applicable"
    elapsed_ms: float = 0.0
    generated_at: Optional[str] = None
    details: Dict[str, Any] = field(default_factory=dict)
    error: Optional[str] = None
    schema: int = SCHEMA_VERSION

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True, default=str)

    @classmethod
    def failure(cls, command: str, arguments: Dict[str, Any], error: Exception) -> "RunReport":
        return cls(command=command, arguments=arguments, status="error",
                   error=f"{type(error).__name__}: {error}")
