"""Pydantic schemas for input files and reports."""

from app.schemas.netspec import NetSpecFile
from app.schemas.projections import ProjectionDatasetFile
from app.schemas.report import ReportFile, RunInfo, digest_of

__all__ = ["NetSpecFile", "ProjectionDatasetFile", "ReportFile", "RunInfo", "digest_of"]
