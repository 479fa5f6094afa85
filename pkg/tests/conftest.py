import itertools
import math
from fractions import Fraction

import pytest

from zhualg.catalog import get_lattice
from zhualg.lattice_core import make_lattice


@pytest.fixture(scope="session")
def A1():
    return get_lattice("A1")


@pytest.fixture(scope="session")
def A2():
    return get_lattice("A2")


@pytest.fixture(scope="session")
def E8():
    return get_lattice("E8")


def brute_vectors(gram, bound):
    """All integer vectors of norm <= bound by a plain box scan.

    The box half-width sqrt(bound * (G^-1)_ii) bounds |x_i| for any x of norm
    <= bound (Cauchy-Schwarz in the dual metric).
    """
    from zhualg.linalg import inverse

    n = len(gram)
    if n == 0:
        return [()]
    ginv = inverse(gram)
    widths = [math.isqrt(math.floor(bound * ginv[i][i])) + 1 for i in range(n)]
    out = []
    for x in itertools.product(*(range(-w, w + 1) for w in widths)):
        nm = sum(x[i] * gram[i][j] * x[j] for i in range(n) for j in range(n))
        if nm <= bound:
            out.append(tuple(x))
    return sorted(out)


def brute_closest_distance(gram, point, radius=3):
    """Squared distance from a rational point to the lattice by box scan."""
    n = len(gram)
    base = [math.floor(v) for v in point]
    best = None
    for off in itertools.product(range(-radius, radius + 1), repeat=n):
        d = [Fraction(base[i] + off[i]) - point[i] for i in range(n)]
        nm = sum(d[i] * gram[i][j] * d[j] for i in range(n) for j in range(n))
        if best is None or nm < best:
            best = nm
    return best


@pytest.fixture
def rank1():
    return lambda k: make_lattice([[2 * k]], f"<{2 * k}>")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)
