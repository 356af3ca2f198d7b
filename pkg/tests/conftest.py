import pytest

from charsums import FieldDescriptor, build_field, build_table


@pytest.fixture(scope="session")
def f9():
    return build_field(3, 1, 2, seed=0)


@pytest.fixture(scope="session")
def f9i():
    # the concrete model F_3[x]/(x^2 + 1), where the class of x squares to -1
    return FieldDescriptor.from_moduli(3, (0, 1), (1, 0, 1))


@pytest.fixture(scope="session")
def f16():
    return build_field(2, 1, 4, seed=0)


@pytest.fixture(scope="session")
def f16q4():
    # F_16 as a degree-2 extension of F_4
    return build_field(2, 2, 2, seed=0)


@pytest.fixture(scope="session")
def f27():
    return build_field(3, 1, 3, seed=0)


@pytest.fixture(scope="session")
def t9(f9):
    return build_table(f9)


@pytest.fixture(scope="session")
def t9i(f9i):
    return build_table(f9i)


@pytest.fixture(scope="session")
def t16(f16):
    return build_table(f16)
