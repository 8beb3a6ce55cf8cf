import difflib
import logging
import typing
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel

logger = logging.getLogger(__name__)


class DriftSeverity(str, Enum):
    """Severity levels for drift detection."""
    INFO = "info"
    WARNING = "warning"
    CRITICAL = "critical"


@dataclass
class DriftResult:
    """Result of a drift detection check."""
    drift_type: str
    severity: DriftSeverity
    confidence: float  # 0.0 to 1.0
    message: str
    details: dict[str, Any]


def _nested_model(annotation: Any) -> Optional[type[BaseModel]]:
    """The BaseModel inside Optional[...] / list[...] annotations, if any."""
    if isinstance(annotation, type) and issubclass(annotation, BaseModel):
        return annotation
    for arg in typing.get_args(annotation):
        found = _nested_model(arg)
        if found is not None:
            return found
    return None


class SchemaDriftDetector:
    """
    Detects unknown keys in an input document, walking nested sections of the schema.

    Unknown keys with a close expected key are reported as likely renames
    (warning); others as critical. The schema itself rejects them, so this only
    improves the diagnostic.
    """

    def __init__(self, schema: type[BaseModel], fuzzy_match_threshold: float = 0.75):
        self.schema = schema
        self.fuzzy_match_threshold = fuzzy_match_threshold

    def check_keys(self, raw: dict[str, Any]) -> list[DriftResult]:
        results: list[DriftResult] = []
        self._walk(raw, self.schema, "", results)
        return results

    def _walk(
        self, value: Any, model: type[BaseModel], path: str, results: list[DriftResult]
    ) -> None:
        if isinstance(value, list):
            for k, item in enumerate(value):
                self._walk(item, model, f"{path}[{k}]", results)
            return
        if not isinstance(value, dict):
            return
        fields = model.model_fields
        expected = list(fields)
        for key in value:
            if key in fields:
                nested = _nested_model(fields[key].annotation)
                if nested is not None:
                    self._walk(value[key], nested, f"{path}.{key}" if path else key, results)
                continue
            where = f"{path}.{key}" if path else key
            matches = difflib.get_close_matches(
                key, expected, n=1, cutoff=self.fuzzy_match_threshold
            )
            if matches:
                best_match = matches[0]
                confidence = difflib.SequenceMatcher(None, key, best_match).ratio()
                results.append(DriftResult(
                    drift_type="schema_rename",
                    severity=DriftSeverity.WARNING,
                    confidence=confidence,
                    message=f"Key '{where}' is unknown; did you mean '{best_match}'?",
                    details={
                        "key": where,
                        "suggestion": best_match,
                        "similarity_score": round(confidence, 3),
                    },
                ))
                logger.warning(
                    f"Schema Drift: unknown key '{where}' → '{best_match}' "
                    f"(confidence: {confidence:.2%})"
                )
            else:
                results.append(DriftResult(
                    drift_type="schema_unknown",
                    severity=DriftSeverity.CRITICAL,
                    confidence=1.0,
                    message=f"Key '{where}' is not part of the schema",
                    details={"key": where, "expected": expected},
                ))
                logger.warning(f"Schema Drift: unknown key '{where}'")
