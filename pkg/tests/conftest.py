import random

import pytest
from hypothesis import settings

from exactquo.bigdigits import Natural

settings.register_profile("default", max_examples=150, deadline=None)
settings.load_profile("default")

BASES = [2, 3, 10, 16, 97, 1 << 16, 1 << 32]


def nat(x, base=10):
    return Natural.from_int(x, base)


@pytest.fixture
def rng():
    return random.Random(20240611)
