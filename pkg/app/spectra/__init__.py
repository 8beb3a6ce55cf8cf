"""Gelfand spectra of contexts, spectral presheaves and global-section search."""

from app.spectra.kochen_specker import KSReport, ks_check
from app.spectra.presheaf import (
    Character,
    SpectralPresheaf,
    build_spectral_presheaf,
    spectrum_of_context,
)
from app.spectra.sections import SectionCount, SectionSearch, enumerate_global_sections

__all__ = [
    "Character",
    "KSReport",
    "SectionCount",
    "SectionSearch",
    "SpectralPresheaf",
    "build_spectral_presheaf",
    "enumerate_global_sections",
    "ks_check",
    "spectrum_of_context",
]
