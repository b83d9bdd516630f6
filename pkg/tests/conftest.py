import pytest

from src.lie.rootsys import RootSystem, attach_multiplicities, build_root_system


@pytest.fixture
def a1() -> RootSystem:
    return build_root_system("A", 1)


@pytest.fixture
def a2() -> RootSystem:
    return build_root_system("A", 2)


@pytest.fixture
def a3() -> RootSystem:
    return build_root_system("A", 3)


@pytest.fixture
def b2() -> RootSystem:
    return build_root_system("B", 2)


@pytest.fixture
def b3() -> RootSystem:
    return build_root_system("B", 3)


@pytest.fixture
def c3() -> RootSystem:
    return build_root_system("C", 3)


@pytest.fixture
def g2() -> RootSystem:
    return build_root_system("G", 2)


@pytest.fixture
def a2_m2(a2: RootSystem) -> RootSystem:
    return attach_multiplicities(a2, 2)


@pytest.fixture
def b2_m2(b2: RootSystem) -> RootSystem:
    return attach_multiplicities(b2, 2)


@pytest.fixture
def bc2_data() -> dict[str, object]:
    """Non-reduced rank 2 data: B2 with the doubles of its short roots."""
    return {
        "name": "BC2",
        "rank": 2,
        "gram": [["2", "-1"], ["-1", "1"]],
        "positive_roots": [[1, 0], [0, 1], [1, 1], [1, 2], [0, 2], [2, 2]],
    }
