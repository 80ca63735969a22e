import pytest

from axialalg.fields import Field


@pytest.fixture
def Q():
    return Field.rationals()


@pytest.fixture
def F7():
    return Field.prime(7)


@pytest.fixture(params=[5, 7, 11])
def Fp(request):
    return Field.prime(request.param)
