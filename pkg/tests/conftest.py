import random

import pytest

from sqfbetti import (
    MonomialIdeal,
    SqfMonomial,
    VariableTable,
    normalize_generators,
    parse_ideal_text,
)
from sqfbetti.errors import SqfBettiError


def mk(*gens: str) -> MonomialIdeal:
    """Ideal from strings of single-character variables, e.g. mk("xy", "yz")."""
    return parse_ideal_text("\n".join(" ".join(g) for g in gens))


def random_sqf_ideal(rng: random.Random, max_vars: int = 7, max_gens: int = 6):
    """A random square-free ideal whose minimal basis has the drawn size.

    Degrees favor 2 and 3 so the sample stays an antichain often enough;
    draws that lose generators to minimality or leave a variable uncovered
    are rejected wholesale, which keeps the size distribution honest.
    """
    while True:
        n = rng.randint(3, max_vars)
        q = rng.randint(2, min(max_gens, n * (n - 1) // 2))
        vars = VariableTable([f"x{i}" for i in range(n)])
        gens = []
        for _ in range(q):
            degree = rng.choice((2, 2, 3, 3, min(4, n)))
            support = rng.sample(range(n), degree)
            gens.append(SqfMonomial.from_indices(support))
        try:
            I = normalize_generators(gens, vars)
        except SqfBettiError:
            continue
        if len(I.gens) == q:
            return I


# the five worked ideals used throughout the tests


@pytest.fixture(scope="session")
def path3() -> MonomialIdeal:
    return mk("xy", "yz", "zu")


@pytest.fixture(scope="session")
def four_triangles() -> MonomialIdeal:
    return mk("abz", "bcz", "xyz", "axz")


@pytest.fixture(scope="session")
def triangle_tail() -> MonomialIdeal:
    return mk("xy", "yz", "xz", "za", "ab", "bc")


@pytest.fixture(scope="session")
def three_brooms() -> MonomialIdeal:
    return mk("ax", "ay", "bz", "bv", "bw", "cu", "cg", "yz", "az")


@pytest.fixture(scope="session")
def star_cluster() -> MonomialIdeal:
    return mk(
        "abc", "bcd", "cdf", "def", "eg", "fg", "gh", "hi", "gi", "fi", "gx", "gy"
    )


# expensive Betti tables shared across test modules


@pytest.fixture(scope="session")
def triangle_tail_table(triangle_tail):
    from sqfbetti import betti_table

    return betti_table(triangle_tail)


@pytest.fixture(scope="session")
def three_brooms_table(three_brooms):
    from sqfbetti import betti_table

    return betti_table(three_brooms)


@pytest.fixture(scope="session")
def star_cluster_table(star_cluster):
    from sqfbetti import betti_table

    return betti_table(star_cluster)
