"""Net specifications and the abstract base class for net families."""

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from app.algebra.spans import AlgebraSpan
from app.algebra.spectral import GeneratorDecl
from app.spacetime.lattice import Window


class NetFamily(str, Enum):
    """Family tags accepted in net-spec files."""

    SPIN_CHAIN = "spin_chain"
    CONSTANT_COMMUTATIVE = "constant_commutative"
    GLOBAL_QUBIT = "global_qubit"
    CUSTOM = "custom"


@dataclass(frozen=True)
class SiteDecl:
    """One tensor factor of the slice: its label, dimension and local generators."""

    label: str
    dim: int
    generators: tuple[GeneratorDecl, ...]


@dataclass(frozen=True)
class DerivedDecl:
    """An extra generator attached to every region whose sites cover lo..hi."""

    lo: int
    hi: int
    generator: GeneratorDecl

    @property
    def sites(self) -> frozenset[int]:
        return frozenset(range(self.lo, self.hi + 1))


@dataclass(frozen=True)
class NetFlags:
    include_trivial_context: Optional[bool] = None
    cover_cap: Optional[int] = None
    section_cap: Optional[int] = None


@dataclass(frozen=True)
class NetSpec:
    """Validated, exact description of a net (produced from a NetSpecFile)."""

    name: str
    window: Window
    family: NetFamily
    sites: tuple[SiteDecl, ...] = ()
    derived: tuple[DerivedDecl, ...] = ()
    global_dim: Optional[int] = None
    global_generators: tuple[GeneratorDecl, ...] = ()
    flags: NetFlags = field(default_factory=NetFlags)

    @property
    def ambient_dim(self) -> int:
        """d of the ambient M_d: the shared global dimension, else the product of site dims."""
        if self.global_dim is not None:
            return self.global_dim
        d = 1
        for site in self.sites:
            d *= site.dim
        return d


class BaseNetFamily(ABC):
    """
    Abstract base class defining how a family assigns algebras to regions.
    Each family must implement ambient_dim, generators() and algebra_for_sites().
    """

    family: NetFamily

    def __init__(self, spec: NetSpec):
        self.spec = spec

    @property
    @abstractmethod
    def ambient_dim(self) -> int:
        """Dimension d of the global ambient algebra M_d."""
        pass

    @abstractmethod
    def generators(self) -> list[GeneratorDecl]:
        """All declared generators, embedded in M_d."""
        pass

    @abstractmethod
    def algebra_for_sites(self, sites: frozenset[int], nonempty: bool) -> AlgebraSpan:
        """
        Algebra of a causally complete region.

        Args:
            sites: slice sites contained in the region.
            nonempty: whether the region has any points at all.
        """
        pass

    def validate(self) -> None:
        """Family-specific consistency checks, run once at net build time."""
        return None
