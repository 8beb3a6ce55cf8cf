"""Input-file ingestion: JSON loaders, schema drift hints and tag normalization."""

from app.ingestion.base import BaseLoader
from app.ingestion.net_spec import NetSpecLoader
from app.ingestion.projections import ProjectionDataset, ProjectionDatasetLoader

__all__ = ["BaseLoader", "NetSpecLoader", "ProjectionDataset", "ProjectionDatasetLoader"]
