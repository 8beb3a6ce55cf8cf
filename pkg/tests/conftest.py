"""Pytest fixtures and configuration for verification tests."""

import json
from pathlib import Path
from typing import Any, Callable

import pytest

from app.algebra.matrices import Mat
from app.algebra.scalars import ExactScalar
from app.algebra.spectral import GeneratorDecl
from app.ingestion.net_spec import NetSpecLoader
from app.verification.service import PreparedNet, VerificationService

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
NETS_DIR = DATA_DIR / "nets"
KS_DIR = DATA_DIR / "ks"

PAULI_X = [[0, 1], [1, 0]]
PAULI_Z = [[1, 0], [0, -1]]
PAULI_Y = [[0, [0, -1]], [[0, 1], 0]]


def make_generator(label: str, entries: list, spectrum: tuple = (1, -1)) -> GeneratorDecl:
    """Validated generator from dense entries."""
    return GeneratorDecl(
        label, Mat.from_entries(entries), tuple(ExactScalar.parse(s) for s in spectrum)
    ).validate()


def generator_json(label: str, entries: list, spectrum: tuple = (1, -1)) -> dict[str, Any]:
    return {"label": label, "entries": entries, "spectrum": list(spectrum)}


def qubit_chain_json(n: int, family: str = "spin_chain") -> dict[str, Any]:
    """Net-spec document with X and Z at each of n qubit sites."""
    return {
        "name": f"chain_{n}",
        "window": {"slice_sites": n},
        "family": family,
        "sites": [
            {
                "label": f"s{k}",
                "dim": 2,
                "generators": [
                    generator_json(f"X{k}", PAULI_X),
                    generator_json(f"Z{k}", PAULI_Z),
                ],
            }
            for k in range(n)
        ],
    }


# ============== Paths & Files ==============


@pytest.fixture
def nets_dir() -> Path:
    return NETS_DIR


@pytest.fixture
def ks_dir() -> Path:
    return KS_DIR


@pytest.fixture
def write_json(tmp_path: Path) -> Callable[[str, Any], Path]:
    """Write a JSON document into the test's temp dir and return its path."""

    def _write(name: str, document: Any) -> Path:
        path = tmp_path / name
        path.write_text(json.dumps(document), encoding="utf-8")
        return path

    return _write


# ============== Prepared Nets ==============


_PREPARED: dict[str, PreparedNet] = {}


def prepared_net(name: str) -> PreparedNet:
    """Net, slice net and contexts for a shipped net spec, built once per session."""
    if name not in _PREPARED:
        service = VerificationService()
        spec = NetSpecLoader().load(NETS_DIR / f"{name}.json")
        _PREPARED[name] = service.prepare(spec, service.resolve_options(spec.flags))
    return _PREPARED[name]


@pytest.fixture
def spin_chain_n2() -> PreparedNet:
    return prepared_net("spin_chain_n2")


@pytest.fixture
def spin_chain_zz() -> PreparedNet:
    return prepared_net("spin_chain_zz")


@pytest.fixture
def constant_commutative() -> PreparedNet:
    return prepared_net("constant_commutative")


@pytest.fixture
def global_qubit() -> PreparedNet:
    return prepared_net("global_qubit")


@pytest.fixture
def custom_net() -> PreparedNet:
    return prepared_net("custom_additivity_violation")
