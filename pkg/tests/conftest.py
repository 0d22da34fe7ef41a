import random

import pytest

from braidkit import catalog
from braidkit.ncpoly import NcElement
from braidkit.scalar import Scalar


@pytest.fixture(scope="session")
def glq2():
    return catalog.load("glq2", verify=False)


@pytest.fixture(scope="session")
def bglq2():
    return catalog.load("bglq2", verify=False)


@pytest.fixture(scope="session")
def aq2():
    return catalog.load("aq2", verify=False)


@pytest.fixture(scope="session")
def z2prime():
    return catalog.load("z2prime", verify=False)


@pytest.fixture(scope="session")
def zgrade():
    return catalog.load("zgrade", verify=False)


@pytest.fixture(scope="session")
def superline():
    return catalog.load("superline", verify=False)


@pytest.fixture(scope="session")
def braidedline():
    return catalog.load("braidedline", verify=False)


def random_scalar(rng, max_exp=6, terms=3):
    out = {}
    for _ in range(rng.randint(0, terms)):
        out[rng.randint(-max_exp, max_exp)] = rng.randint(-9, 9)
    return Scalar(out)


def random_element(rng, signature, degree=3, terms=3):
    total = NcElement.zero(tuple(signature))
    for _ in range(rng.randint(1, terms)):
        word = tuple(
            tuple(rng.choice(alpha.gens) for _ in range(rng.randint(0, degree)))
            for alpha in signature
        )
        total = total + NcElement(tuple(signature), {word: random_scalar(rng)})
    return total


@pytest.fixture()
def rng():
    return random.Random(20260809)
