import math

import pytest


def pascal_row(n: int) -> list[int]:
    """Row n of Pascal's triangle by repeated addition; independent of binomial()."""
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


@pytest.fixture
def pi() -> float:
    return math.pi
