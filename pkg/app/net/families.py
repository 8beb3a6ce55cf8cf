"""Concrete net families: tensor-product chains and globally shared algebras."""

import logging
import threading

from app.algebra.matrices import tensor_embed
from app.algebra.spans import (
    AlgebraSpan,
    generate_subalgebra,
    is_commutative,
    join,
)
from app.algebra.spectral import GeneratorDecl
from app.core.exceptions import AlgebraMembershipException, SpecValidationException
from app.net.base import BaseNetFamily, NetFamily, NetSpec

logger = logging.getLogger(__name__)


class TensorNetFamily(BaseNetFamily):
    """
    One tensor factor per slice site. A(O) is generated by the factors at the
    sites of O together with every derived generator whose interval those
    sites cover.
    """

    family = NetFamily.CUSTOM
    # spin_chain requires derived generators to already lie in the tensor algebra
    derived_must_be_local = False

    def __init__(self, spec: NetSpec):
        super().__init__(spec)
        window = spec.window
        if len(spec.sites) != len(window.sites):
            raise SpecValidationException(
                f"Window has {len(window.sites)} sites but {len(spec.sites)} were declared",
                details={"window_sites": len(window.sites), "declared": len(spec.sites)},
            )
        self.dims = [s.dim for s in spec.sites]
        self._dim = 1
        for d in self.dims:
            self._dim *= d

        self._site_gens: dict[int, list[GeneratorDecl]] = {}
        for offset, site in enumerate(spec.sites):
            k = window.lo + offset
            self._site_gens[k] = [
                GeneratorDecl(
                    g.label, tensor_embed(g.matrix, self.dims, offset), g.spectrum, (k,)
                )
                for g in site.generators
            ]
        self._site_algebras = {
            k: generate_subalgebra(self._dim, [g.matrix for g in gens])
            for k, gens in self._site_gens.items()
        }
        self._derived_algebras = [
            (d.sites, generate_subalgebra(self._dim, [d.generator.matrix]))
            for d in spec.derived
        ]
        self._cache: dict[tuple[frozenset[int], bool], AlgebraSpan] = {}
        self._lock = threading.Lock()

    @property
    def ambient_dim(self) -> int:
        return self._dim

    def generators(self) -> list[GeneratorDecl]:
        gens = [g for k in sorted(self._site_gens) for g in self._site_gens[k]]
        gens += [
            GeneratorDecl(d.generator.label, d.generator.matrix, d.generator.spectrum,
                          tuple(sorted(d.sites)))
            for d in self.spec.derived
        ]
        return gens

    def site_algebra(self, k: int) -> AlgebraSpan:
        return self._site_algebras[k]

    def tensor_algebra(self, sites: frozenset[int]) -> AlgebraSpan:
        result = AlgebraSpan.trivial(self._dim)
        for k in sorted(sites):
            result = join(result, self._site_algebras[k])
        return result

    def algebra_for_sites(self, sites: frozenset[int], nonempty: bool = True) -> AlgebraSpan:
        key = (sites, True)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        result = self.tensor_algebra(sites)
        for derived_sites, algebra in self._derived_algebras:
            if derived_sites <= sites:
                result = join(result, algebra)
        with self._lock:
            self._cache.setdefault(key, result)
        return result

    def validate(self) -> None:
        window_sites = set(self.spec.window.sites)
        for d in self.spec.derived:
            if not d.sites <= window_sites:
                raise SpecValidationException(
                    f"Derived generator '{d.generator.label}' leaves the window",
                    details={"label": d.generator.label, "sites": [d.lo, d.hi]},
                )
            if d.generator.matrix.dim != self._dim:
                raise SpecValidationException(
                    f"Derived generator '{d.generator.label}' must be {self._dim}x{self._dim}",
                    details={"label": d.generator.label, "dim": d.generator.matrix.dim},
                )
            if self.derived_must_be_local:
                host = self.tensor_algebra(d.sites)
                if not host.contains_matrix(d.generator.matrix):
                    raise AlgebraMembershipException(
                        f"Derived generator '{d.generator.label}' is not in the algebra "
                        f"of sites {d.lo}..{d.hi}",
                        details={"label": d.generator.label, "sites": [d.lo, d.hi]},
                    )


class SpinChainFamily(TensorNetFamily):
    family = NetFamily.SPIN_CHAIN
    derived_must_be_local = True


class CustomFamily(TensorNetFamily):
    family = NetFamily.CUSTOM
    derived_must_be_local = False


class GlobalNetFamily(BaseNetFamily):
    """One fixed algebra, generated by the global generators, for every nonempty region."""

    family = NetFamily.GLOBAL_QUBIT

    def __init__(self, spec: NetSpec):
        super().__init__(spec)
        if spec.global_dim is None:
            raise SpecValidationException(
                f"Family '{spec.family.value}' needs a global_algebra block",
                details={"family": spec.family.value},
            )
        self._dim = spec.global_dim
        self._gens = list(spec.global_generators)
        self._algebra = generate_subalgebra(self._dim, [g.matrix for g in self._gens])
        self._trivial = AlgebraSpan.trivial(self._dim)

    @property
    def ambient_dim(self) -> int:
        return self._dim

    def generators(self) -> list[GeneratorDecl]:
        return list(self._gens)

    def algebra_for_sites(self, sites: frozenset[int], nonempty: bool = True) -> AlgebraSpan:
        return self._algebra if nonempty else self._trivial


class ConstantCommutativeFamily(GlobalNetFamily):
    family = NetFamily.CONSTANT_COMMUTATIVE

    def validate(self) -> None:
        if not is_commutative(self._algebra):
            raise SpecValidationException(
                "constant_commutative generators must generate a commutative algebra",
                details={"dim": self._algebra.dim},
            )


class GlobalQubitFamily(GlobalNetFamily):
    family = NetFamily.GLOBAL_QUBIT

    def validate(self) -> None:
        if self._dim != 2:
            logger.warning(f"global_qubit declared with dimension {self._dim}, expected 2")


FAMILIES: dict[NetFamily, type[BaseNetFamily]] = {
    NetFamily.SPIN_CHAIN: SpinChainFamily,
    NetFamily.CONSTANT_COMMUTATIVE: ConstantCommutativeFamily,
    NetFamily.GLOBAL_QUBIT: GlobalQubitFamily,
    NetFamily.CUSTOM: CustomFamily,
}


def get_family(spec: NetSpec) -> BaseNetFamily:
    """Instantiate and validate the family registered for the spec's tag."""
    family_cls = FAMILIES.get(spec.family)
    if not family_cls:
        raise ValueError(f"No net family registered for tag: {spec.family}")
    family = family_cls(spec)
    family.validate()
    return family
