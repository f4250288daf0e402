import functools

import pytest

from nihocodes.codespec import CodeSpec, validate_spec
from nihocodes.galois import build_field


@functools.lru_cache(maxsize=None)
def field(p: int, degree: int):
    return build_field(p, degree)


@pytest.fixture(scope="session")
def gf4():
    return field(2, 2)


@pytest.fixture(scope="session")
def gf9():
    return field(3, 2)


@pytest.fixture(scope="session")
def gf16():
    return field(2, 4)


@pytest.fixture(scope="session")
def gf256():
    return field(2, 8)


@pytest.fixture(scope="session")
def example1_spec():
    """The binary showcase: q = 16, exponents (136, 166, 196)."""
    return validate_spec(CodeSpec("f1", 2, 4, 2, 1, 2))


@pytest.fixture(scope="session")
def example2_spec():
    """The ternary showcase: q = 9, exponents (17, 41, 65)."""
    return validate_spec(CodeSpec("f2", 3, 2, 3, 1, 3))


@pytest.fixture(scope="session")
def tiny_f1_spec():
    """Smallest interesting binary spec: q = 4, dimension 6, 63 codewords."""
    return validate_spec(CodeSpec("f1", 2, 2, 1, 1, 1))


@pytest.fixture(scope="session")
def tiny_f2_spec():
    """Smallest odd-characteristic spec: q = 3, dimension 4, 80 codewords."""
    return validate_spec(CodeSpec("f2", 3, 1, 1, 1, 2))
