import pytest

from fuzzygamma import enumeration, validate_structure


def make_t1():
    return validate_structure(["e"], ["g"], [[[0]]], [(0, 0)])


def make_lz2():
    # left-zero law x*y = x, discrete order
    return validate_structure(["a", "b"], ["g"], [[[0, 0]], [[1, 1]]], [])


def make_nz2():
    # constant law x*y = z, with z below a
    return validate_structure(["z", "a"], ["g"], [[[0, 0]], [[0, 0]]],
                              [(0, 1)])


@pytest.fixture
def T1():
    return make_t1()


@pytest.fixture
def LZ2():
    return make_lz2()


@pytest.fixture
def NZ2():
    return make_nz2()


@pytest.fixture(scope="session")
def fixture_structures():
    return [make_t1(), make_lz2(), make_nz2()]


@pytest.fixture(scope="session")
def labeled_pool():
    """Every labeled po-gamma-semigroup at (n<=2, m<=2) and (n=3, m=1)."""
    pool = []
    for n, m in [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1)]:
        spec = enumeration.SearchSpec(n=n, m=m)
        pool.extend(enumeration.enumerate_structures(spec))
    return pool
