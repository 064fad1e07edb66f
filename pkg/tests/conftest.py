import pytest

from propmod.core import ModularInequality


@pytest.fixture
def worked():
    # 3x - 2y mod 11 <= x - 3y, the running strip example
    return ModularInequality((3, -2), (1, -3), 11)


@pytest.fixture
def alltrue():
    # 7x - y mod 5 <= x - 14y, the all-properties-true example
    return ModularInequality((7, -1), (1, -14), 5)


@pytest.fixture
def frobcase():
    # 3x + 2y mod 10 <= x - y, the Frobenius-vector example
    return ModularInequality((3, 2), (1, -1), 10)


WORKED_GENS = {
    (4, 0), (5, 0), (5, 1), (8, 1), (9, 2), (11, 0), (13, 3),
    (14, 4), (18, 5), (19, 6), (23, 7), (28, 9), (33, 11),
}

ALLTRUE_GENS = {
    (3, 0), (4, 0), (5, 0), (16, 1), (17, 1), (18, 1), (29, 2),
    (31, 2), (44, 3), (57, 4), (70, 5),
}
