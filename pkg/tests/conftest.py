import pytest

from hooklab.partitions import Partition, make_partition


@pytest.fixture
def sc_example() -> Partition:
    """Self-conjugate running example (7,5,3,2,2,1,1)."""
    return make_partition([7, 5, 3, 2, 2, 1, 1])


@pytest.fixture
def dd_example() -> Partition:
    """Doubled distinct partition of (4,1)."""
    return make_partition([5, 3, 1, 1])


def boxes(p):
    """Ferrers diagram as a set of (row, col) cells, French convention."""
    return {(i, j) for i, row in enumerate(p.parts, start=1) for j in range(1, row + 1)}


def walk_hook(cells, i, j):
    """Hook length by walking the diagram cell by cell."""
    right = 0
    while (i, j + right + 1) in cells:
        right += 1
    up = 0
    while (i + up + 1, j) in cells:
        up += 1
    return right + up + 1
