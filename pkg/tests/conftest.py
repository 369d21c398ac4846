import pytest

from ringbench import constructions as c
from ringbench.core import FiniteRing


@pytest.fixture(scope='session')
def z2() -> FiniteRing:
    return c.zmod(2)


@pytest.fixture(scope='session')
def z4() -> FiniteRing:
    return c.zmod(4)


@pytest.fixture(scope='session')
def z6() -> FiniteRing:
    return c.zmod(6)


@pytest.fixture(scope='session')
def gf4() -> FiniteRing:
    return c.galois_field(2, 2)


@pytest.fixture(scope='session')
def m2z2(z2: FiniteRing) -> FiniteRing:
    """Matrix units: e11 = 8, e12 = 4, e21 = 2, e22 = 1."""
    return c.matrix_ring(z2, 2)


@pytest.fixture(scope='session')
def t2z3() -> FiniteRing:
    """Entries (a11, a12, a22), so the strictly upper matrices are 0, 3, 6."""
    return c.triangular_matrix_ring(c.zmod(3), None, 2)


@pytest.fixture(scope='session')
def r3() -> FiniteRing:
    return c.example_3_6_block(3)


@pytest.fixture(scope='session')
def r4() -> FiniteRing:
    return c.example_3_6_block(4)


@pytest.fixture(scope='session')
def twisted() -> FiniteRing:
    return c.frobenius_twisted_ring()


@pytest.fixture(scope='session')
def e39_context() -> c.MoritaContextSpec:
    return c.example_3_9_context()


@pytest.fixture()
def result_cache_backend(tmp_path):
    from django.core.cache.backends.filebased import FileBasedCache

    return FileBasedCache(str(tmp_path / 'cache'), {'TIMEOUT': None})
