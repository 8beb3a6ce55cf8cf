"""Projection dataset loader for Kochen-Specker runs."""

from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from app.algebra.spectral import GeneratorDecl
from app.core.logging import logger
from app.ingestion.base import BaseLoader
from app.schemas.projections import ProjectionDatasetFile


@dataclass(frozen=True)
class ProjectionDataset:
    name: str
    dimension: int
    projections: tuple[GeneratorDecl, ...]
    bases: Optional[tuple[tuple[str, ...], ...]] = None


class ProjectionDatasetLoader(BaseLoader[ProjectionDatasetFile, ProjectionDataset]):
    """
    Loader for projection datasets.
    Expected keys: dimension, projections (vector or matrix each), bases
    """

    schema = ProjectionDatasetFile

    def to_domain(self, model: ProjectionDatasetFile, path: Path) -> ProjectionDataset:
        dataset = ProjectionDataset(
            name=model.name or path.stem,
            dimension=model.dimension,
            projections=tuple(p.to_decl() for p in model.projections),
            bases=tuple(tuple(b) for b in model.bases) if model.bases is not None else None,
        )
        logger.info(
            f"Loaded projection dataset '{dataset.name}': d={dataset.dimension}, "
            f"{len(dataset.projections)} projections"
        )
        return dataset
