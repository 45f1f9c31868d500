import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qhyper.quaternion import Quaternion
from qhyper.sampling import random_point

settings.register_profile(
    "qhyper",
    max_examples=150,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("qhyper")

finite = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False, allow_infinity=False)
quaternions = st.builds(Quaternion, finite, finite, finite, finite)
nonzero_quaternions = quaternions.filter(lambda q: abs(q) > 1e-3)
seeds = st.integers(min_value=0, max_value=2**32 - 1)
dims = st.sampled_from([2, 3])
kinds = st.sampled_from(["boundary", "interior"])


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)


def rng_from(seed):
    return np.random.default_rng(seed)


def random_points(n, rng, pattern):
    return tuple(random_point(n, rng, k) for k in pattern)


def moved(g, points):
    from qhyper.hermitian import apply

    return tuple(apply(g, p) for p in points)


def unit(rng):
    v = rng.normal(size=4)
    return Quaternion(*(v / np.linalg.norm(v)))


def qclose(a, b, tol=1e-9):
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def approx(x, rel=1e-9, abs_=1e-9):
    return pytest.approx(x, rel=rel, abs=abs_)


SQRT2 = math.sqrt(2.0)
