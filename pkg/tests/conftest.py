import random

import pytest
from hypothesis import settings

from fourspace.exactmat import QQ, PrimeField

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")

GF = PrimeField(32003)
GF101 = PrimeField(101)


@pytest.fixture(params=["rationals", "prime"], ids=["QQ", "GF32003"])
def field(request):
    return QQ if request.param == "rationals" else GF


@pytest.fixture
def rng():
    return random.Random(0xF0)
