import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from threeval.examples import make_b, make_bt, product  # noqa: E402
from threeval.lattice import FiniteLattice  # noqa: E402
from threeval.tstructure import to_ht  # noqa: E402


def m3() -> FiniteLattice:
    # 0 bottom, atoms 1..3, 4 top
    n = 5
    meet = [[0] * n for _ in range(n)]
    join = [[4] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if a == b:
                meet[a][b] = join[a][b] = a
            elif a == 0 or b == 0:
                meet[a][b], join[a][b] = 0, a + b
            elif a == 4 or b == 4:
                meet[a][b], join[a][b] = min(a, b) if 4 in (a, b) else 0, 4
    return FiniteLattice(n, meet, join, 0, 4)


def five_heyting() -> FiniteLattice:
    """Boolean square {0, a=1, b=2, a|b=3} with a fresh top 4."""
    le = {(0, x) for x in range(5)} | {(1, 3), (2, 3)} | {(x, 4) for x in range(5)} | {(x, x) for x in range(5)}
    return FiniteLattice.from_leq([[(a, b) in le for b in range(5)] for a in range(5)])


@pytest.fixture
def bt():
    return make_bt()


@pytest.fixture
def b():
    return make_b()


@pytest.fixture
def bt_ht():
    return to_ht(make_bt())


@pytest.fixture
def bb():
    return product(make_b(), make_b())


@pytest.fixture
def btb():
    return product(make_bt(), make_b())
