import pytest

from hgslab import build_group, enumerate_hgs


@pytest.fixture(scope="session")
def m733():
    return build_group("metacyclic:7:3:2")


@pytest.fixture(scope="session")
def d4():
    return build_group("dihedral:4")


@pytest.fixture(scope="session")
def s3():
    return build_group("sym:3")


@pytest.fixture(scope="session")
def s3_inventory(s3):
    return enumerate_hgs(s3)


@pytest.fixture(scope="session")
def d4_inventory(d4):
    return enumerate_hgs(d4)
