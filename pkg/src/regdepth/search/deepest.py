"""Deepest regression lines in the plane and heuristic deep flats in space.

In the plane the depth of a line only changes when it crosses a data
point, and a line through data points keeps them on its closed
boundary, which can only add points to a wedge. So some line through
two data points is at least as deep as every line that can be reached
from it by a small shift or tilt, and the maximum over lines through
two data points is the global maximum. All of them are scored at once
from their sign rows."""

import logging
from itertools import combinations
from math import comb

import numpy as np

from regdepth import config
from regdepth.exceptions import InputError, RegDepthError, VerificationError
from regdepth.geometry.scalar import (make_points, dataset_dimension, common_denominator,
                                      to_integers, int_array, sub, rank)
from regdepth.geometry.flats import AffineFlat, VerticalInfinity
from regdepth.geometry.pencil import build_pencil
from regdepth.depth.engine import regression_depth, vertical_split_minima, minimize
from regdepth.constructions.deepflats import construct_deep_line_3d, construct_deep_plane_3d

PAIR_CHUNK = 4096

def _pair_signs(Q, P, pairs):
    """Sign rows over P of the lines through Q[i], Q[j] for (i, j) in pairs."""

    a = Q[pairs[:, 0]]
    v = Q[pairs[:, 1]] - a
    normals = np.stack([-v[:, 1], v[:, 0]], axis=1)
    offsets = (normals*a).sum(axis=1)
    vals = normals.dot(P.T) - offsets.reshape(-1, 1)
    return ((vals > 0).astype(np.int8) - (vals < 0).astype(np.int8))

def _flat_line(xs):
    """Best line when no two points have different x: the horizontal
    line through a median point."""

    ordered = sorted(xs, key=lambda p: (p[1], p[0]))
    return AffineFlat(ordered[(len(ordered) - 1) // 2], [(1, 0)])

def deepest_line_2d(xs):
    """(line, certificate) of a line of maximum regression depth."""

    xs = make_points(xs)
    if not xs:
        raise InputError("Error! deepest line of an empty dataset")
    dataset_dimension(xs, 2)
    distinct = sorted(set(xs))
    pairs = np.array([(i, j) for i, j in combinations(range(len(distinct)), 2)
                      if distinct[i][0] != distinct[j][0]], dtype=np.int64).reshape(-1, 2)
    if len(pairs) == 0:
        line = _flat_line(xs)
        return line, regression_depth(line, 1, xs)

    # sign rows are taken over the full (possibly repeated) data
    den = common_denominator(xs)
    P_all = int_array(to_integers(xs, den), degree=2)
    P_dist = int_array(to_integers(distinct, den), degree=2)
    best_value, best_pair = -1, None
    for start in range(0, len(pairs), PAIR_CHUNK):
        block = pairs[start:start + PAIR_CHUNK]
        depths = vertical_split_minima(_pair_signs(P_dist, P_all, block), xs)
        r = int(np.argmax(depths))
        if depths[r] > best_value:
            best_value, best_pair = int(depths[r]), block[r]
    line = AffineFlat.through([distinct[best_pair[0]], distinct[best_pair[1]]])
    cert = regression_depth(line, 1, xs)
    if cert.depth != best_value:
        raise VerificationError("Error! scored depth {0} differs from the certified depth {1}".format(best_value, cert.depth))
    logging.info("deepest line over {0} candidate pairs has depth {1}".format(len(pairs), cert.depth))
    return line, cert

class _Scorer(object):
    """Exact depth of candidate flats against one fixed vertical pencil."""

    def __init__(self, xs, k):
        self.xs = xs
        self.k = k
        self.vertical = build_pencil(VerticalInfinity.for_regression(3, k), xs).signs
        self.evaluated = 0

    def depth(self, flat):
        self.evaluated += 1
        if flat.is_vertical():
            return 0
        value = minimize(build_pencil(flat, self.xs).signs, self.vertical)[0]
        return value

def _tuple_flat(points, k):
    if rank([sub(p, points[0]) for p in points[1:]]) < k:
        return None
    flat = AffineFlat.through(points)
    if flat.is_vertical():
        return None
    return flat

def _random_tuples(m, size, budget, rng):
    """All index tuples in random order when they fit in the budget,
    else half the budget of random tuples (the rest is left for the
    local search)."""

    total = comb(m, size)
    if total <= budget:
        rows = list(combinations(range(m), size))
        return [rows[i] for i in rng.permutation(len(rows))], True
    out = []
    for _ in range(max(1, budget // 2)):
        out.append(tuple(sorted(int(i) for i in rng.choice(m, size=size, replace=False))))
    return out, False

def deepest_flat_heuristic_3d(xs, k, budget=None, seed=0, include_constructions=True):
    """(flat, certificate) of the deepest k-flat found among `budget`
    candidates: the deep-flat constructions, flats through random data
    tuples, then a local search that swaps one defining point at a time.
    The depth is exact for the returned flat; it is only a lower bound
    on the maximum."""

    xs = make_points(xs)
    if not xs:
        raise InputError("Error! deepest flat of an empty dataset")
    dataset_dimension(xs, 3)
    if k not in (1, 2):
        raise InputError("Error! k must be 1 or 2 in space, got {0}".format(k))
    budget = config.HEURISTIC_BUDGET if budget is None else budget
    if budget < 1:
        raise ValueError("Error! budget must be at least 1")
    rng = np.random.default_rng(seed)
    scorer = _Scorer(xs, k)
    best, best_depth = None, -1

    def consider(flat):
        nonlocal best, best_depth
        value = scorer.depth(flat)
        if value > best_depth:
            best, best_depth = flat, value
        return value

    if include_constructions:
        builders = ([lambda: construct_deep_line_3d(xs, 'median', seed, verify=False),
                     lambda: construct_deep_line_3d(xs, 'three-piece', seed, verify=False)]
                    if k == 1 else [lambda: construct_deep_plane_3d(xs, seed, verify=False)])
        for build in builders:
            if scorer.evaluated >= budget:
                break
            try:
                flat, _ = build()
            except RegDepthError as e:
                logging.warning("construction skipped: {0}".format(e))
                continue
            consider(flat)

    distinct = sorted(set(xs))
    size = k + 1
    remaining = budget - scorer.evaluated
    best_tuple = None
    exhaustive = False
    if remaining > 0 and len(distinct) >= size:
        tuples, exhaustive = _random_tuples(len(distinct), size, remaining, rng)
        tuple_best = -1
        for t in tuples:
            if scorer.evaluated >= budget:
                break
            flat = _tuple_flat([distinct[i] for i in t], k)
            if flat is None:
                continue
            value = consider(flat)
            if value > tuple_best:
                tuple_best, best_tuple = value, list(t)

    if best_tuple is not None and not exhaustive:
        current = best_tuple
        current_depth = tuple_best
        while scorer.evaluated < budget:
            slot = int(rng.integers(size))
            new = int(rng.integers(len(distinct)))
            if new in current:
                scorer.evaluated += 1
                continue
            trial = list(current)
            trial[slot] = new
            flat = _tuple_flat([distinct[i] for i in trial], k)
            if flat is None:
                scorer.evaluated += 1
                continue
            value = consider(flat)
            if value >= current_depth:
                current, current_depth = trial, value

    if best is None:
        p = xs[0]
        best = AffineFlat(p, [(1, 0, 0)] if k == 1 else [(1, 0, 0), (0, 1, 0)])
    cert = regression_depth(best, k, xs)
    logging.info("3D heuristic examined {0} candidates, best depth {1}".format(scorer.evaluated, cert.depth))
    return best, cert
