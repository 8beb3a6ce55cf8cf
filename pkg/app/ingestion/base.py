"""Abstract base class for all input-file loaders."""

import hashlib
import json
from abc import ABC, abstractmethod
from pathlib import Path
from typing import Any, Generic, TypeVar

from pydantic import BaseModel, ValidationError

from app.core.exceptions import SpecParseException, SpecValidationException
from app.core.logging import logger
from app.ingestion.drift import DriftSeverity, SchemaDriftDetector

ModelT = TypeVar("ModelT", bound=BaseModel)
DomainT = TypeVar("DomainT")


class BaseLoader(ABC, Generic[ModelT, DomainT]):
    """
    Abstract base class defining the contract for all input loaders.
    Each loader must declare its schema and implement to_domain().
    """

    schema: type[ModelT]

    def __init__(self) -> None:
        self.drift_detector = SchemaDriftDetector(self.schema)
        self.last_digest = ""

    def read_raw(self, path: Path) -> dict[str, Any]:
        """
        Read and parse the JSON file.

        Raises:
            SpecParseException: missing file, unreadable file or malformed JSON.
        """
        try:
            data = path.read_bytes()
        except OSError as e:
            raise SpecParseException(
                message=f"Cannot read input file: {path}",
                details={"path": str(path), "error": str(e)},
            ) from e
        self.last_digest = hashlib.sha256(data).hexdigest()
        try:
            raw = json.loads(data.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as e:
            raise SpecParseException(
                message=f"Malformed JSON in {path}: {e}",
                details={"path": str(path), "error": str(e)},
            ) from e
        if not isinstance(raw, dict):
            raise SpecParseException(
                message=f"Top-level JSON value in {path} must be an object",
                details={"path": str(path)},
            )
        return raw

    def hints(self, raw: dict[str, Any]) -> list[dict[str, Any]]:
        """Hook for value-level suggestions attached to a schema error."""
        return []

    def normalize(self, raw: dict[str, Any]) -> ModelT:
        """
        Validate raw data against the schema.

        Unknown keys are reported with close-match suggestions from the drift detector.
        """
        drift = self.drift_detector.check_keys(raw)
        try:
            return self.schema.model_validate(raw)
        except ValidationError as e:
            errors = [
                {"loc": ".".join(str(p) for p in err["loc"]), "msg": err["msg"]}
                for err in e.errors()
            ]
            suggestions = [
                r.details for r in drift if r.severity != DriftSeverity.INFO and r.details
            ]
            suggestions.extend(self.hints(raw))
            first = errors[0] if errors else {"loc": "", "msg": str(e)}
            logger.warning(f"Schema validation failed: {len(errors)} error(s)")
            raise SpecValidationException(
                message=f"Schema error at '{first['loc']}': {first['msg']}",
                details={"errors": errors, "suggestions": suggestions},
            ) from None

    @abstractmethod
    def to_domain(self, model: ModelT, path: Path) -> DomainT:
        """Convert the validated model into exact domain objects."""
        pass

    def load(self, path: Path) -> DomainT:
        """Execute the full pipeline: read, validate, convert."""
        raw = self.read_raw(path)
        model = self.normalize(raw)
        return self.to_domain(model, path)
