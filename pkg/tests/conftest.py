import pytest

from boreltype import generate_corpus


@pytest.fixture(scope="session")
def borel_corpus():
    """210 seeded exchange-closed cyclic modules, n in {2,3,4}, degrees <= 4."""
    out = []
    for nvars, count, seed in ((2, 80, 101), (3, 70, 102), (4, 60, 103)):
        out.extend(generate_corpus(seed, count, "borel", nvars, 4))
    return out


@pytest.fixture(scope="session")
def mixed_corpus():
    """510 seeded random modules (Borel and not, cyclic and not), n in {2,3,4}."""
    out = []
    for nvars, count, seed in ((2, 170, 201), (3, 170, 202), (4, 170, 203)):
        out.extend(generate_corpus(seed, count, "random", nvars, 4))
    return out
