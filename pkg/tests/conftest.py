"""Shared fixtures: settings without environment input and the preset algebras."""

from pathlib import Path

import pytest

from weylmod.algebra import HereditaryAlgebra, resolve_cartan
from weylmod.config import Settings
from weylmod.coxeter import CartanData

DATA_DIR = Path(__file__).resolve().parent.parent / "data"
GOLDEN_DIR = Path(__file__).resolve().parent / "golden"


@pytest.fixture
def settings() -> Settings:
    return Settings(_env_file=None)


def _algebra(name: str, settings: Settings) -> HereditaryAlgebra:
    return HereditaryAlgebra(resolve_cartan(name), settings)


@pytest.fixture
def exweyl(settings: Settings) -> HereditaryAlgebra:
    return _algebra("exweyl", settings)


@pytest.fixture
def a2(settings: Settings) -> HereditaryAlgebra:
    return _algebra("a2", settings)


@pytest.fixture
def a3(settings: Settings) -> HereditaryAlgebra:
    return _algebra("a3", settings)


@pytest.fixture
def a4(settings: Settings) -> HereditaryAlgebra:
    return HereditaryAlgebra(CartanData.from_quiver(4, [(1, 2), (2, 3), (3, 4)], name="a4"), settings)


@pytest.fixture
def a3_source(settings: Settings) -> HereditaryAlgebra:
    return _algebra("a3-source", settings)


@pytest.fixture
def kronecker(settings: Settings) -> HereditaryAlgebra:
    return _algebra("kronecker", settings)


@pytest.fixture
def b2(settings: Settings) -> HereditaryAlgebra:
    return _algebra("b2", settings)


@pytest.fixture
def g2(settings: Settings) -> HereditaryAlgebra:
    return _algebra("g2", settings)


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def golden_dir() -> Path:
    return GOLDEN_DIR
