"""Declared generators and their exact spectral projections."""

from dataclasses import dataclass, field
from functools import lru_cache

from app.algebra.matrices import Mat
from app.algebra.scalars import ExactScalar
from app.core.exceptions import SpectrumException


@dataclass(frozen=True)
class GeneratorDecl:
    """
    A normal matrix with a declared finite spectrum.

    The declaration is only trusted after `validate()`; spectral projections
    rely on the annihilation identity prod(a - lambda) = 0.
    """

    label: str
    matrix: Mat
    spectrum: tuple[ExactScalar, ...]
    sites: tuple[int, ...] = field(default=(), compare=False)

    def validate(self) -> "GeneratorDecl":
        if len(set(self.spectrum)) != len(self.spectrum):
            raise SpectrumException(
                f"Generator '{self.label}' declares repeated eigenvalues",
                details={"label": self.label, "spectrum": [s.to_json() for s in self.spectrum]},
            )
        if not self.spectrum:
            raise SpectrumException(
                f"Generator '{self.label}' declares an empty spectrum",
                details={"label": self.label},
            )
        if not self.matrix.is_normal():
            raise SpectrumException(
                f"Generator '{self.label}' is not normal",
                details={"label": self.label},
            )
        residual = annihilation_residual(self.matrix, self.spectrum)
        if not residual.is_zero():
            raise SpectrumException(
                f"Declared spectrum of '{self.label}' does not annihilate its matrix",
                residual=residual,
                details={
                    "label": self.label,
                    "spectrum": [s.to_json() for s in self.spectrum],
                    "residual": residual.to_json(),
                },
            )
        return self

    def embedded(self, matrix: Mat) -> "GeneratorDecl":
        """Same observable carried into a larger ambient algebra."""
        return GeneratorDecl(self.label, matrix, self.spectrum, self.sites)


def annihilation_residual(a: Mat, spectrum: tuple[ExactScalar, ...]) -> Mat:
    residual = Mat.identity(a.dim)
    for lam in spectrum:
        residual = residual @ a.shift(lam)
    return residual


@lru_cache(maxsize=4096)
def spectral_projections(g: GeneratorDecl) -> tuple[tuple[ExactScalar, Mat], ...]:
    """e_lambda = prod_{mu != lambda} (a - mu) / (lambda - mu), zero projections dropped."""
    g.validate()
    a = g.matrix
    result: list[tuple[ExactScalar, Mat]] = []
    for lam in g.spectrum:
        e = Mat.identity(a.dim)
        for mu in g.spectrum:
            if mu == lam:
                continue
            e = e @ a.shift(mu).scale(ExactScalar(1) / (lam - mu))
        if not e.is_zero():
            result.append((lam, e))
    return tuple(result)


def projection_decl(label: str, p: Mat) -> GeneratorDecl:
    """Projection as a generator with spectrum {0, 1}; non-idempotents are rejected."""
    if not p.is_idempotent() or not p.is_hermitian():
        residual = p @ p - p
        raise SpectrumException(
            f"'{label}' is not an orthogonal projection",
            residual=residual,
            details={"label": label, "residual": residual.to_json()},
        )
    return GeneratorDecl(label, p, (ExactScalar(0), ExactScalar(1)))
