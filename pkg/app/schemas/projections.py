"""Pydantic schema for Kochen-Specker projection datasets."""

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.algebra.matrices import Mat
from app.algebra.scalars import ExactScalar
from app.algebra.spectral import GeneratorDecl, projection_decl
from app.schemas.netspec import parse_scalar


class ProjectionSpec(BaseModel):
    """A projection given by a vector (rank one) or by its full matrix."""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    label: str = Field(..., min_length=1)
    vector: Optional[list[ExactScalar]] = None
    matrix: Optional[list[list[ExactScalar]]] = None

    @field_validator("vector", mode="before")
    @classmethod
    def coerce_vector(cls, v: Any) -> Optional[list[ExactScalar]]:
        if v is None:
            return None
        if not isinstance(v, list):
            raise ValueError("vector must be a list")
        return [parse_scalar(x) for x in v]

    @field_validator("matrix", mode="before")
    @classmethod
    def coerce_matrix(cls, v: Any) -> Optional[list[list[ExactScalar]]]:
        if v is None:
            return None
        if not isinstance(v, list) or not all(isinstance(row, list) for row in v):
            raise ValueError("matrix must be a list of rows")
        return [[parse_scalar(x) for x in row] for row in v]

    @model_validator(mode="after")
    def exactly_one(self):
        if (self.vector is None) == (self.matrix is None):
            raise ValueError(f"Projection '{self.label}' needs exactly one of vector or matrix")
        if self.vector is not None and all(x.is_zero() for x in self.vector):
            raise ValueError(f"Projection '{self.label}' has a zero vector")
        return self

    @property
    def dim(self) -> int:
        return len(self.vector) if self.vector is not None else len(self.matrix or [])

    def to_decl(self) -> GeneratorDecl:
        if self.vector is not None:
            m = Mat.outer(self.vector)
        else:
            m = Mat.from_entries(self.matrix or [])
        return projection_decl(self.label, m)


class ProjectionDatasetFile(BaseModel):
    """Schema for a projection dataset: dimension, projections and optional bases."""

    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    dimension: int = Field(..., ge=1, le=16)
    projections: list[ProjectionSpec] = Field(default_factory=list)
    bases: Optional[list[list[str]]] = None

    @model_validator(mode="after")
    def check_consistency(self):
        labels = [p.label for p in self.projections]
        if len(set(labels)) != len(labels):
            raise ValueError("Projection labels must be unique")
        for p in self.projections:
            if p.dim != self.dimension:
                raise ValueError(
                    f"Projection '{p.label}' has dimension {p.dim}, expected {self.dimension}"
                )
        if self.bases is not None:
            known = set(labels)
            for basis in self.bases:
                missing = [b for b in basis if b not in known]
                if missing:
                    raise ValueError(f"Basis refers to unknown projections: {missing}")
        return self
