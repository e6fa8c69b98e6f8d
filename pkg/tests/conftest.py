from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from regdepth.datagen import circle_point

def pytest_configure(config):
    config.addinivalue_line("markers", "slow: desk-scale acceptance corpora")

coords = st.integers(min_value=-6, max_value=6).map(Fraction)

def points(d, min_size=0, max_size=8):
    return st.lists(st.tuples(*[coords]*d), min_size=min_size, max_size=max_size)

def distinct_x_points(d, min_size=1, max_size=8):
    """Points with pairwise different x coordinates."""

    return st.lists(st.integers(min_value=-20, max_value=20), min_size=min_size,
                    max_size=max_size, unique=True).flatmap(
        lambda xs: st.tuples(*[st.tuples(st.just(Fraction(x)), *[coords]*(d - 1)) for x in xs]).map(list))

def random_points(seed, n, d, scale=1000):
    rng = np.random.default_rng(seed)
    return [tuple(Fraction(int(a)) for a in row) for row in rng.integers(-scale, scale, size=(n, d))]

def random_distinct_x(seed, n, d, scale=1000):
    rng = np.random.default_rng(seed)
    xs = rng.choice(np.arange(-50*n, 50*n), size=n, replace=False)
    rest = rng.integers(-scale, scale, size=(n, d - 1))
    return [(Fraction(int(x)),) + tuple(Fraction(int(a)) for a in row) for x, row in zip(xs, rest)]

@pytest.fixture
def square():
    return [(Fraction(0), Fraction(0)), (Fraction(1), Fraction(0)),
            (Fraction(0), Fraction(1)), (Fraction(1), Fraction(1))]

@pytest.fixture
def cube():
    return [tuple(Fraction(v) for v in (a, b, c)) for a in (0, 1) for b in (0, 1) for c in (0, 1)]

@pytest.fixture
def circle12():
    return [circle_point(j, 12) for j in range(12)]

@pytest.fixture
def planar_corpus():
    return [random_points(seed, 6 + (seed*7) % 40, 2) for seed in range(20)]

def wedge_densities(rng, full, sample, count, chunk=100):
    """Fractions of `full` and of `sample` (integer points) inside `count`
    random closed double wedges with one vertical boundary."""

    full = np.asarray(full, dtype=np.int64).reshape(-1, 2)
    sample = np.asarray(sample, dtype=np.int64).reshape(-1, 2)
    anchors = full[rng.integers(len(full), size=count)]
    normals = rng.integers(-50, 51, size=(count, 2))
    normals[(normals == 0).all(axis=1)] = (0, 1)
    offsets = (normals*anchors).sum(axis=1)
    # cuts compare against 2x so they can fall between data values
    cuts = 2*full[rng.integers(len(full), size=count), 0] + rng.integers(-1, 2, size=count)
    pairings = rng.integers(0, 2, size=count)

    def density(P):
        out = []
        for start in range(0, count, chunk):
            s = slice(start, start + chunk)
            prod = np.sign(P.dot(normals[s].T) - offsets[s]) * np.sign(2*P[:, :1] - cuts[s])
            inside = np.where(pairings[s] == 0, prod >= 0, prod <= 0)
            out.append(inside.mean(axis=0))
        return np.concatenate(out)

    return density(full), density(sample)
