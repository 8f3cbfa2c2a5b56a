import pytest

from hopfkit.constructors import corpus, drinfeld_double, standard_constructors


@pytest.fixture(scope="session")
def corpus3():
    return corpus(3, 1)


@pytest.fixture(scope="session")
def taft3():
    return standard_constructors("taft", 3, 1)


@pytest.fixture(scope="session")
def uq3():
    return standard_constructors("uq_sl2", 3, 1)


@pytest.fixture(scope="session")
def book1():
    return standard_constructors("book", 3, 1, 1)


@pytest.fixture(scope="session")
def uq_rmatrix():
    from hopfkit.quasitriangular import uq_standard_rmatrix
    return uq_standard_rmatrix(3, 1)


@pytest.fixture(scope="session")
def double_taft(taft3):
    return drinfeld_double(taft3)


@pytest.fixture(scope="session")
def z3_bichar():
    from hopfkit.quasitriangular import bicharacter_rmatrices
    return bicharacter_rmatrices((3,), 9)


@pytest.fixture(scope="session")
def z3z3_bichar():
    from hopfkit.quasitriangular import bicharacter_rmatrices
    return bicharacter_rmatrices((3, 3), 9)
