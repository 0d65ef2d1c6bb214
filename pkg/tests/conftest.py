import random

import pytest

from exitgraph import certify_general_position, random_general_position


@pytest.fixture
def triangle():
    return certify_general_position([(0, 0), (4, 0), (2, 4)])


@pytest.fixture
def unit_square():
    return certify_general_position([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def six_points():
    # four corners with two interior points close to the left edge
    return certify_general_position(
        [(-5, 5), (5, 5), (-5, -5), (5, -5), (-3, 2), (-3, -2)])


@pytest.fixture
def triangle_with_interior():
    return certify_general_position([(0, 0), (4, 0), (2, 4), (2, 1)])


def random_sets(count, n_lo, n_hi, seed):
    """Deterministic stream of certified random point sets."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(n_lo, n_hi)
        yield random_general_position(n, rng)
