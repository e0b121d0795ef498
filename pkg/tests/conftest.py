import pytest

from emergent import (
    theory_s3,
    theory_s3_cubed,
    theory_s3_diagonal_cosets,
    theory_s3_squared,
    theory_s4,
)


@pytest.fixture(scope="session")
def t1():
    return theory_s3()


@pytest.fixture(scope="session")
def t2():
    return theory_s3_squared()


@pytest.fixture(scope="session")
def t3():
    return theory_s3_diagonal_cosets()


@pytest.fixture(scope="session")
def t4():
    return theory_s3_cubed()


@pytest.fixture(scope="session")
def t5():
    return theory_s4()
