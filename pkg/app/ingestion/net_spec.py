"""Net-spec file loader."""

from pathlib import Path
from typing import Any, Optional

from app.core.config import settings
from app.core.exceptions import CapExceededException
from app.core.logging import logger
from app.ingestion.base import BaseLoader
from app.ingestion.normalization import FamilyNormalizer
from app.net.base import NetSpec
from app.schemas.netspec import NetSpecFile


class NetSpecLoader(BaseLoader[NetSpecFile, NetSpec]):
    """
    Loader for net-spec JSON files.
    Expected keys: window, family, sites | global_algebra, derived_generators, flags
    """

    schema = NetSpecFile

    def __init__(self, ambient_dim_cap: Optional[int] = None) -> None:
        super().__init__()
        self.family_normalizer = FamilyNormalizer()
        self.ambient_dim_cap = ambient_dim_cap or settings.ambient_dim_cap

    def hints(self, raw: dict[str, Any]) -> list[dict[str, Any]]:
        tag = raw.get("family")
        if not isinstance(tag, str):
            return []
        family = self.family_normalizer.suggest(tag)
        if family is None:
            return []
        return [{"key": "family", "value": tag, "suggestion": family.value}]

    def to_domain(self, model: NetSpecFile, path: Path) -> NetSpec:
        spec = model.to_net_spec(default_name=path.stem)
        if spec.ambient_dim > self.ambient_dim_cap:
            raise CapExceededException(
                f"Net '{spec.name}' needs ambient dimension {spec.ambient_dim}",
                cap=self.ambient_dim_cap,
                bound=spec.ambient_dim,
                details={"path": str(path), "ambient_dim": spec.ambient_dim},
            )
        logger.info(
            f"Loaded net spec '{spec.name}' ({spec.family.value}), window {spec.window}"
        )
        return spec
