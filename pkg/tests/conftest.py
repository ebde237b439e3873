import pytest

from instances import f25, z5


@pytest.fixture(params=[1, 4], ids=["w1", "w4"])
def z5_twist(request):
    return z5(request.param)


@pytest.fixture(scope="session")
def f25_twist():
    return f25()
