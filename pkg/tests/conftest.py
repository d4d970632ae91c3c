import pytest

import biheyt


@pytest.fixture(scope="session")
def boolean2():
    return biheyt.generate("boolean", 2)


@pytest.fixture(scope="session")
def boolean3():
    return biheyt.generate("boolean", 3)


@pytest.fixture(scope="session")
def boolean4():
    return biheyt.generate("boolean", 4)


@pytest.fixture(scope="session")
def mo2():
    return biheyt.generate("mo", 2)


@pytest.fixture(scope="session")
def cabello18():
    return biheyt.generate("cabello18")


@pytest.fixture(scope="session")
def boolean2_poset(boolean2):
    return biheyt.enumerate_contexts(boolean2)


@pytest.fixture(scope="session")
def boolean3_poset(boolean3):
    return biheyt.enumerate_contexts(boolean3)


@pytest.fixture(scope="session")
def boolean4_poset(boolean4):
    return biheyt.enumerate_contexts(boolean4)


@pytest.fixture(scope="session")
def mo2_poset(mo2):
    return biheyt.enumerate_contexts(mo2)


@pytest.fixture(scope="session")
def cabello18_poset(cabello18):
    return biheyt.enumerate_contexts(cabello18)


@pytest.fixture(scope="session")
def boolean3_subs(boolean3_poset):
    return biheyt.enumerate_subobjects(boolean3_poset)


@pytest.fixture(scope="session")
def mo2_subs(mo2_poset):
    return biheyt.enumerate_subobjects(mo2_poset)
