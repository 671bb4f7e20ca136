import pytest

from dcnconn import build_bcdc, build_crossed_cube, build_dcell, build_graph


@pytest.fixture(scope="session")
def d14():
    return build_dcell(1, 4)


@pytest.fixture(scope="session")
def b3():
    return build_bcdc(3)


@pytest.fixture(scope="session")
def b4():
    return build_bcdc(4)


@pytest.fixture(scope="session")
def b5():
    return build_bcdc(5)


@pytest.fixture(scope="session")
def cq3():
    return build_crossed_cube(3)


@pytest.fixture()
def k5():
    labels = list("abcde")
    return build_graph(labels, [(u, v) for i, u in enumerate(labels) for v in labels[i + 1 :]])


@pytest.fixture()
def c6():
    labels = [str(i) for i in range(6)]
    return build_graph(labels, [(labels[i], labels[(i + 1) % 6]) for i in range(6)])
