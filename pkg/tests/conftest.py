from collections.abc import Iterator

import pytest
from dotenv import load_dotenv

from relsig.core.config import get_settings
from relsig.structure.structure_function import PathSetSpec, StructureFunction, structure_from_pathsets

load_dotenv()


def system(n: int, *path_sets: tuple[int, ...]) -> StructureFunction:
    return structure_from_pathsets(PathSetSpec(n, tuple(path_sets)))


@pytest.fixture(autouse=True)
def fresh_settings() -> Iterator[None]:
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def bridge() -> StructureFunction:
    return system(5, (1, 4), (2, 5), (1, 3, 5), (2, 3, 4))


@pytest.fixture
def series3() -> StructureFunction:
    return system(3, (1, 2, 3))


@pytest.fixture
def parallel2() -> StructureFunction:
    return system(2, (1,), (2,))


@pytest.fixture
def two_of_three() -> StructureFunction:
    return system(3, (1, 2), (1, 3), (2, 3))


@pytest.fixture
def first_and_either() -> StructureFunction:
    """phi = x1 (x2 or x3)."""
    return system(3, (1, 2), (1, 3))


@pytest.fixture
def make_system():
    return system
