"""Pydantic schemas for net-spec input files.

Includes schemas for:
- Generator declarations (exact entries and declared spectra)
- Slice sites and derived generators
- Window, global algebra and run flags
"""

from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.algebra.matrices import Mat
from app.algebra.scalars import ExactScalar
from app.algebra.spectral import GeneratorDecl
from app.net.base import DerivedDecl, NetFamily, NetFlags, NetSpec, SiteDecl
from app.spacetime.lattice import Window


def parse_scalar(v: Any) -> ExactScalar:
    """Ints, "p/q", decimal strings and [re, im] pairs become exact scalars."""
    try:
        return ExactScalar.parse(v)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"Invalid exact scalar {v!r}: {exc}") from None


# =============================================================================
# GENERATOR SCHEMAS
# =============================================================================


class GeneratorSpec(BaseModel):
    """A normal matrix with exact entries and its declared spectrum."""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    label: str = Field(..., min_length=1, max_length=64)
    entries: list[list[ExactScalar]]
    spectrum: list[ExactScalar] = Field(..., min_length=1)

    @field_validator("entries", mode="before")
    @classmethod
    def coerce_entries(cls, v: Any) -> list[list[ExactScalar]]:
        if not isinstance(v, list) or not all(isinstance(row, list) for row in v):
            raise ValueError("entries must be a list of rows")
        return [[parse_scalar(x) for x in row] for row in v]

    @field_validator("spectrum", mode="before")
    @classmethod
    def coerce_spectrum(cls, v: Any) -> list[ExactScalar]:
        if not isinstance(v, list):
            raise ValueError("spectrum must be a list")
        return [parse_scalar(x) for x in v]

    @model_validator(mode="after")
    def check_square(self):
        n = len(self.entries)
        if n == 0 or any(len(row) != n for row in self.entries):
            raise ValueError(f"Generator '{self.label}' entries must form a nonempty square matrix")
        return self

    @property
    def dim(self) -> int:
        return len(self.entries)

    def to_decl(self) -> GeneratorDecl:
        return GeneratorDecl(
            self.label, Mat.from_entries(self.entries), tuple(self.spectrum)
        ).validate()


class SiteSpec(BaseModel):
    """One slice site: a tensor factor and its local generators."""

    model_config = ConfigDict(extra="forbid")

    label: str = Field(..., min_length=1)
    dim: int = Field(..., ge=1, le=8)
    generators: list[GeneratorSpec] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_generator_dims(self):
        for g in self.generators:
            if g.dim != self.dim:
                raise ValueError(
                    f"Generator '{g.label}' at site '{self.label}' is {g.dim}x{g.dim}, "
                    f"expected {self.dim}x{self.dim}"
                )
        return self


class DerivedGeneratorSpec(GeneratorSpec):
    """A generator attached to every region covering the site interval [lo, hi]."""

    sites: list[int] = Field(..., min_length=2, max_length=2)

    @field_validator("sites")
    @classmethod
    def check_interval(cls, v: list[int]) -> list[int]:
        if v[1] < v[0]:
            raise ValueError(f"Derived generator interval {v} is empty")
        return v


class GlobalAlgebraSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dim: int = Field(..., ge=1, le=16)
    generators: list[GeneratorSpec] = Field(default_factory=list)

    @model_validator(mode="after")
    def check_generator_dims(self):
        for g in self.generators:
            if g.dim != self.dim:
                raise ValueError(f"Global generator '{g.label}' must be {self.dim}x{self.dim}")
        return self


# =============================================================================
# NET SPEC FILE
# =============================================================================


class WindowSpec(BaseModel):
    """Either a symmetric slice radius or a site count starting at 0."""

    model_config = ConfigDict(extra="forbid")

    slice_radius: Optional[int] = Field(None, ge=0, le=6)
    slice_sites: Optional[int] = Field(None, ge=1, le=12)

    @model_validator(mode="after")
    def exactly_one(self):
        if (self.slice_radius is None) == (self.slice_sites is None):
            raise ValueError("window needs exactly one of slice_radius or slice_sites")
        return self

    def to_window(self) -> Window:
        if self.slice_radius is not None:
            return Window.from_radius(self.slice_radius)
        return Window.from_sites(self.slice_sites)


class FlagsSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    include_trivial_context: Optional[bool] = None
    cover_cap: Optional[int] = Field(None, ge=1)
    section_cap: Optional[int] = Field(None, ge=1)


class NetSpecFile(BaseModel):
    """Schema for a net-spec JSON file; validated before any computation."""

    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    window: WindowSpec
    family: NetFamily
    sites: list[SiteSpec] = Field(default_factory=list)
    global_algebra: Optional[GlobalAlgebraSpec] = None
    derived_generators: list[DerivedGeneratorSpec] = Field(default_factory=list)
    flags: FlagsSpec = Field(default_factory=FlagsSpec)

    @model_validator(mode="after")
    def check_family_shape(self):
        tensor = self.family in (NetFamily.SPIN_CHAIN, NetFamily.CUSTOM)
        if tensor and not self.sites:
            raise ValueError(f"Family '{self.family.value}' needs a sites list")
        if tensor and self.global_algebra is not None:
            raise ValueError(f"Family '{self.family.value}' does not take a global_algebra")
        if not tensor and self.global_algebra is None:
            raise ValueError(f"Family '{self.family.value}' needs a global_algebra block")
        if not tensor and (self.sites or self.derived_generators):
            raise ValueError(f"Family '{self.family.value}' takes no sites or derived generators")
        labels = [g.label for s in self.sites for g in s.generators]
        labels += [g.label for g in self.derived_generators]
        if self.global_algebra is not None:
            labels += [g.label for g in self.global_algebra.generators]
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            raise ValueError(f"Generator labels must be unique across the net: {duplicates}")
        return self

    def to_net_spec(self, default_name: str = "net") -> NetSpec:
        window = self.window.to_window()
        sites = tuple(
            SiteDecl(s.label, s.dim, tuple(g.to_decl() for g in s.generators))
            for s in self.sites
        )
        derived = tuple(
            DerivedDecl(d.sites[0], d.sites[1], d.to_decl()) for d in self.derived_generators
        )
        global_dim: Optional[int] = None
        global_gens: tuple[GeneratorDecl, ...] = ()
        if self.global_algebra is not None:
            global_dim = self.global_algebra.dim
            global_gens = tuple(g.to_decl() for g in self.global_algebra.generators)
        return NetSpec(
            name=self.name or default_name,
            window=window,
            family=self.family,
            sites=sites,
            derived=derived,
            global_dim=global_dim,
            global_generators=global_gens,
            flags=NetFlags(
                include_trivial_context=self.flags.include_trivial_context,
                cover_cap=self.flags.cover_cap,
                section_cap=self.flags.section_cap,
            ),
        )
