# tests/conftest.py
import pytest

from src.models.field import PrimeField
from src.models.witness import CIWitness
from src.services.witness_service import random_witness
from tests.helpers import fermat_line_witness


@pytest.fixture(scope="session")
def field() -> PrimeField:
    """The default field F_p with p = 2^31 - 1."""
    return PrimeField()


@pytest.fixture(scope="session")
def f17() -> PrimeField:
    return PrimeField(17)


@pytest.fixture(scope="session")
def line_witness(field: PrimeField) -> CIWitness:
    """A certified random line on a quartic surface: degrees (1, 1), e = 4."""
    return random_witness(field, 4, [1, 1], seed=42, e=4)


@pytest.fixture(scope="session")
def conic_witness(field: PrimeField) -> CIWitness:
    """Degrees (2, 2) on a quartic surface, where a = 2 and c = 1."""
    return random_witness(field, 4, [2, 2], seed=42, e=4)


@pytest.fixture(scope="session")
def fermat_witness(f17: PrimeField) -> CIWitness:
    return fermat_line_witness(f17)
