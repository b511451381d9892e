import pytest

from acmcurves.surfaces import builtin_model, fermat_model


@pytest.fixture(scope="session")
def fermat5():
    return fermat_model(5)


@pytest.fixture(scope="session")
def fermat4():
    return fermat_model(4)


@pytest.fixture(scope="session")
def quadric():
    return builtin_model("quadric")


@pytest.fixture(scope="session")
def cubic():
    return builtin_model("cubic_delpezzo")
