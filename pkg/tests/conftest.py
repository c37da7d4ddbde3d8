import os

import pytest

from redwords.coxeter import SymmetricGroup


def max_rank() -> int:
    return int(os.environ.get("REDWORDS_MAX_RANK", "4"))


requires_s5 = pytest.mark.skipif(
    max_rank() < 5,
    reason="set REDWORDS_MAX_RANK=5 to include the larger enumerations",
)


@pytest.fixture(scope="session")
def s3():
    return SymmetricGroup(3)


@pytest.fixture(scope="session")
def s4():
    return SymmetricGroup(4)
