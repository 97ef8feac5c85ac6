import pytest

from qfrob.repkernel import small_context


@pytest.fixture(scope="session")
def a1_l3():
    return small_context("A1", 6)


@pytest.fixture(scope="session")
def b2_z4():
    return small_context("B2", 4)
