import pytest

from diracsplit.gamma import build_rep


@pytest.fixture(scope="session")
def spinor():
    return build_rep("spinor")


@pytest.fixture(scope="session")
def all_reps():
    return tuple(build_rep(n) for n in ("spinor", "standard", "majorana"))


@pytest.fixture(params=["spinor", "standard", "majorana"], scope="session")
def rep(request):
    return build_rep(request.param)
