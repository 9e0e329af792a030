"""Shared fixtures: constructed schemes and the golden 4-user instance.

The golden instance is a fixed, externally specified switching assignment
and pair labeling used as a reproduction target by the acceptance gate.
Its combined receive matrix turns out to be rank deficient at receivers
1 and 3 (see README, Known limitations), which the golden acceptance test
records honestly rather than papering over.
"""
import numpy as np
import pytest

import biakit as bk
from biakit.scheme import PatternMatrix, assign_beamformers, certify_receivers

# one row per user, entries are antenna mode numbers over the 9 channel uses
GOLDEN_MODES_4 = (
    (1, 2, 1, 2, 1, 2, 2, 2, 1),
    (2, 1, 1, 2, 2, 1, 2, 2, 2),
    (2, 2, 2, 1, 1, 1, 1, 2, 2),
    (2, 2, 2, 2, 2, 2, 1, 1, 1),
)

# pair {i, j} -> (dimension of i, dimension of j), all 0-indexed
GOLDEN_PAIR_DIMS = {
    (2, 3): (0, 0),
    (1, 3): (0, 1),
    (1, 2): (1, 1),
    (0, 3): (0, 2),
    (0, 2): (1, 2),
    (0, 1): (2, 2),
}

# published shared vectors of the golden instance, keyed by pair
GOLDEN_VECTORS = {
    (2, 3): (0, 0, 0, 1, 0, 0, 1, 1, 0),
    (1, 3): (0, 1, 0, 0, 0, 0, 0, 1, 0),
    (1, 2): (0, 1, 0, 1, 0, 1, 0, 0, 0),
    (0, 3): (1, 0, 0, 0, 0, 0, 0, 1, 1),
    (0, 2): (1, 0, 0, 1, 1, 0, 0, 0, 0),
    (0, 1): (1, 1, 1, 0, 0, 0, 0, 0, 0),
}


def golden_tilde() -> np.ndarray:
    return np.array(GOLDEN_MODES_4, dtype=np.int64).T - 1


@pytest.fixture(scope="session")
def golden_scheme4() -> bk.Scheme:
    tilde = golden_tilde()
    pattern = PatternMatrix(tilde, certify_receivers(tilde))
    beams = assign_beamformers(pattern, GOLDEN_PAIR_DIMS)
    return bk.Scheme(config=bk.make_config(4), pattern=pattern, beams=beams)


@pytest.fixture(scope="session")
def scheme3() -> bk.Scheme:
    return bk.build_scheme(3)


@pytest.fixture(scope="session")
def scheme4() -> bk.Scheme:
    return bk.build_scheme(4)


@pytest.fixture(scope="session")
def scheme5() -> bk.Scheme:
    return bk.build_scheme(5)


@pytest.fixture(scope="session")
def scheme6() -> bk.Scheme:
    return bk.build_scheme(6)
