"""Approximate deepest flats from a random sample.

Depth relative to n is a density of points in double wedges with one
vertical boundary. A uniform sample S of size c * eps^-2 * ln(1/eps)
keeps every such density within eps of its value on the full data
(failure probability SAMPLE_FAILURE_BOUND for c = SAMPLE_CONSTANT).
With eps = delta / (2R), R the deep-flat constant, the deepest flat of
S is within a (1 - delta) factor of the deepest flat of the data."""

import logging
from fractions import Fraction
from math import ceil, log

import numpy as np

from regdepth import config
from regdepth.bounds import TABLE
from regdepth.exceptions import UnsupportedCaseError
from regdepth.geometry.scalar import make_points, dataset_dimension, parse_scalar
from regdepth.depth.engine import regression_depth
from regdepth.search.deepest import deepest_line_2d, deepest_flat_heuristic_3d

SUPPORTED = ((2, 1), (3, 1), (3, 2))

class ApproxParams(object):
    """delta : Fraction in (0, 1)
    epsilon : delta / (2 R(d,k)), exact
    sample_size : min(n, ceil(constant * epsilon^-2 * ln(1/epsilon)))
    seed : sampling seed"""

    def __init__(self, delta, epsilon, sample_size, seed, d, k, constant=config.SAMPLE_CONSTANT):
        self.delta = delta
        self.epsilon = epsilon
        self.sample_size = sample_size
        self.seed = seed
        self.d = d
        self.k = k
        self.constant = constant
        self.failure_bound = config.SAMPLE_FAILURE_BOUND

    @classmethod
    def create(cls, delta, d, k, n, seed=None, constant=None):
        delta = parse_scalar(delta)
        if not 0 < delta < 1:
            raise ValueError("Error! delta must lie strictly between 0 and 1, got {0}".format(delta))
        if (d, k) not in SUPPORTED:
            raise UnsupportedCaseError("Error! approximation supports (d,k) in {0}, got ({1},{2})".format(SUPPORTED, d, k))
        constant = config.SAMPLE_CONSTANT if constant is None else constant
        seed = config.default_seed() if seed is None else seed
        R = TABLE.deep_flat_constant(d, k)
        epsilon = delta / (2*R)
        size = sample_size(epsilon, constant)
        return cls(delta, epsilon, min(n, size), seed, d, k, constant)

    def to_dict(self):
        return {'delta': str(self.delta),
                'epsilon': str(self.epsilon),
                'sample_size': self.sample_size,
                'seed': self.seed,
                'constant': self.constant,
                'failure_bound': str(self.failure_bound)}

def sample_size(epsilon, constant=None):
    constant = config.SAMPLE_CONSTANT if constant is None else constant
    eps = Fraction(epsilon)
    return int(ceil(constant * float(1/eps)**2 * log(float(1/eps))))

def epsilon_sample(xs, params):
    """Uniform sample without replacement of params.sample_size points
    (all of xs, in order, when the sample would cover them)."""

    if not 0 < params.epsilon < 1:
        raise ValueError("Error! epsilon must lie strictly between 0 and 1")
    xs = list(xs)
    if params.sample_size >= len(xs):
        return xs
    rng = np.random.default_rng(params.seed)
    idx = np.sort(rng.choice(len(xs), size=params.sample_size, replace=False))
    return [xs[int(i)] for i in idx]

def approx_deepest(xs, k, params, budget=None):
    """(flat, certificate on the full data) of the deepest flat of the
    sample. Exact on the sample only for lines in the plane; in space
    the sample is searched with the heuristic."""

    xs = make_points(xs)
    d = dataset_dimension(xs)
    if (d, k) not in SUPPORTED:
        raise UnsupportedCaseError("Error! approximation supports (d,k) in {0}, got ({1},{2})".format(SUPPORTED, d, k))
    sample = epsilon_sample(xs, params)
    if d == 2:
        flat, sample_cert = deepest_line_2d(sample)
    else:
        flat, sample_cert = deepest_flat_heuristic_3d(sample, k, budget=budget, seed=params.seed)
    cert = regression_depth(flat, k, xs)
    logging.info("approx deepest: sample depth {0}/{1}, full depth {2}/{3}".format(
        sample_cert.depth, len(sample), cert.depth, len(xs)))
    return flat, cert
