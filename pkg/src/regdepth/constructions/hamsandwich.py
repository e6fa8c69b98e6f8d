"""Discrete ham sandwich cuts in the plane and in space.

A cut of finite sets leaves at most floor(|s|/2) points of every set s
strictly on each open side. Cuts through data points always exist, so
both searches run over hyperplanes spanned by data points: lines through
two points in the plane, planes through three points in space. Counting
is vectorized over batches of candidates; the returned cut is checked
again with exact Fractions."""

import logging
from itertools import combinations, product

import numpy as np

from regdepth import config
from regdepth.exceptions import InputError, SearchBudgetExhausted, VerificationError
from regdepth.geometry.scalar import (make_points, dataset_dimension, common_denominator,
                                      to_integers, int_array, sub, cross, is_zero, rank)
from regdepth.geometry.hyperplane import Hyperplane

BATCH = 4096

def ham_sandwich_check(h, sets):
    """(below, above) strict counts of every set against h."""

    out = []
    for s in sets:
        signs = [h.orient(p) for p in s]
        out.append((sum(1 for v in signs if v < 0), sum(1 for v in signs if v > 0)))
    return out

def is_ham_sandwich(h, sets):
    return all(below <= len(s)//2 and above <= len(s)//2
               for s, (below, above) in zip(sets, ham_sandwich_check(h, sets)))

class _Counter(object):
    """Integer copies of the data and membership masks of the sets."""

    def __init__(self, sets, d):
        self.sets = sets
        allpts = [p for s in sets for p in s]
        self.den = common_denominator(allpts)
        self.P = int_array(to_integers(allpts, self.den), degree=d)
        self.M = np.zeros((len(allpts), len(sets)), dtype=np.int64)
        start = 0
        for j, s in enumerate(sets):
            self.M[start:start + len(s), j] = 1
            start += len(s)
        self.limits = np.array([len(s)//2 for s in sets], dtype=np.int64)

    def valid(self, normals, offsets):
        """Boolean mask of the candidates that are ham sandwich cuts."""

        vals = normals.dot(self.P.T) - offsets.reshape(-1, 1)
        above = (vals > 0).astype(np.int64) @ self.M
        below = (vals < 0).astype(np.int64) @ self.M
        return ((above <= self.limits) & (below <= self.limits)).all(axis=1)

def _lines(P, pairs):
    a = P[pairs[:, 0]]
    b = P[pairs[:, 1]]
    v = b - a
    normals = np.stack([-v[:, 1], v[:, 0]], axis=1)
    offsets = (normals*a).sum(axis=1)
    keep = (normals != 0).any(axis=1)
    return normals, offsets, keep

def _nonvertical_lines(P, pairs):
    normals, offsets, keep = _lines(P, pairs)
    return normals, offsets, keep & (normals[:, 1] != 0)

def _planes(P, triples):
    a = P[triples[:, 0]]
    u = P[triples[:, 1]] - a
    w = P[triples[:, 2]] - a
    normals = np.stack([u[:, 1]*w[:, 2] - u[:, 2]*w[:, 1],
                        u[:, 2]*w[:, 0] - u[:, 0]*w[:, 2],
                        u[:, 0]*w[:, 1] - u[:, 1]*w[:, 0]], axis=1)
    offsets = (normals*a).sum(axis=1)
    keep = (normals != 0).any(axis=1)
    return normals, offsets, keep

def _nonvertical_planes(P, triples):
    normals, offsets, keep = _planes(P, triples)
    return normals, offsets, keep & (normals[:, 2] != 0)

def _first_valid(counter, P, index_batches, spanner):
    examined = 0
    for idx in index_batches:
        if len(idx) == 0:
            continue
        normals, offsets, keep = spanner(P, idx)
        examined += len(idx)
        normals, offsets, idx = normals[keep], offsets[keep], idx[keep]
        if len(idx) == 0:
            continue
        ok = np.flatnonzero(counter.valid(normals, offsets))
        if len(ok):
            return idx[ok[0]], examined
    return None, examined

def _batches(rows, size=BATCH):
    rows = np.asarray(rows, dtype=np.int64)
    for start in range(0, len(rows), size):
        yield rows[start:start + size]

def _degenerate_cut(points, d):
    """A hyperplane containing every point when the union does not span
    a hyperplane of its own (all equal, or collinear in space)."""

    p0 = points[0]
    vs = [sub(p, p0) for p in points[1:] if p != p0]
    base = vs[:1]
    for e in ([(1,) + (0,)*(d - 1), (0, 1) + (0,)*(d - 2)] + ([(0, 0, 1)] if d == 3 else [])):
        if len(base) == d - 1:
            break
        if rank(base + [e]) == len(base) + 1:
            base.append(e)
    if d == 2:
        return Hyperplane.through([p0, tuple(a + b for a, b in zip(p0, base[0]))])
    return Hyperplane.through([p0,
                               tuple(a + b for a, b in zip(p0, base[0])),
                               tuple(a + b for a, b in zip(p0, base[1]))])

def ham_sandwich_2d(a, b, nonvertical=False):
    """Line cutting both planar sets in half.

    Candidates in order: lines through a point of a and a point of b,
    lines through any two data points, vertical lines through data
    points. The first valid one is returned. With nonvertical=True
    vertical candidates are skipped."""

    a, b = make_points(a), make_points(b)
    sets = [a, b]
    union = sorted(set(a + b))
    if not union:
        raise InputError("Error! ham sandwich cut of empty sets")
    dataset_dimension(union, 2)
    if rank([sub(p, union[0]) for p in union]) < 2:
        return _degenerate_cut(union, 2)

    counter = _Counter(sets, 2)
    P = int_array(to_integers(union, counter.den), degree=2)
    pos = {p: i for i, p in enumerate(union)}
    ia = sorted(set(pos[p] for p in a))
    ib = sorted(set(pos[p] for p in b))
    first = [(i, j) for i, j in product(ia, ib) if i != j]
    second = list(combinations(range(len(union)), 2))
    spanner = _nonvertical_lines if nonvertical else _lines

    for rows in (first, second):
        best, examined = _first_valid(counter, P, _batches(rows), spanner)
        if best is not None:
            h = Hyperplane.through([union[best[0]], union[best[1]]])
            if not is_ham_sandwich(h, sets):
                raise VerificationError("Error! vectorized ham sandwich count disagrees with exact check")
            return h

    for p in ([] if nonvertical else union):
        h = Hyperplane((1, 0), p[0])
        if is_ham_sandwich(h, sets):
            return h
    raise SearchBudgetExhausted("Error! no ham sandwich line through data points",
                                diagnostics={'candidates': len(first) + len(second)})

def _triple_rows(m, budget, rng):
    total = m*(m - 1)*(m - 2)//6
    if total <= budget:
        rows = np.array(list(combinations(range(m), 3)), dtype=np.int64).reshape(-1, 3)
        return rows[rng.permutation(len(rows))]
    rows = np.sort(rng.integers(0, m, size=(budget, 3)), axis=1)
    return rows[(rows[:, 0] != rows[:, 1]) & (rows[:, 1] != rows[:, 2])]

def ham_sandwich_3d(a, b, c, seed=0, budget=None, nonvertical=False):
    """Plane cutting three sets in space in half, searched over planes
    through three data points in seeded random order. With
    nonvertical=True planes containing the z direction are skipped."""

    sets = [make_points(a), make_points(b), make_points(c)]
    union = sorted(set(p for s in sets for p in s))
    if not union:
        raise InputError("Error! ham sandwich cut of empty sets")
    dataset_dimension(union, 3)
    budget = config.HAM_SANDWICH_BUDGET if budget is None else budget
    if budget < 1:
        raise ValueError("Error! budget must be positive")
    r = rank([sub(p, union[0]) for p in union])
    if r < 2:
        return _degenerate_cut(union, 3)
    if r == 2:
        # every point lies on the plane, so no point is strictly on a side
        return Hyperplane.through(_spanning_triple(union))

    counter = _Counter(sets, 3)
    P = int_array(to_integers(union, counter.den), degree=3)
    rng = np.random.default_rng(seed)
    rows = _triple_rows(len(union), budget, rng)
    spanner = _nonvertical_planes if nonvertical else _planes
    best, examined = _first_valid(counter, P, _batches(rows), spanner)
    if best is None:
        raise SearchBudgetExhausted("Error! no ham sandwich plane among {0} candidate triples".format(examined),
                                    diagnostics={'candidates': examined, 'points': len(union)})
    h = Hyperplane.through([union[i] for i in best])
    if not is_ham_sandwich(h, sets):
        raise VerificationError("Error! vectorized ham sandwich count disagrees with exact check")
    logging.info("ham sandwich plane after {0} candidates".format(examined))
    return h

def _spanning_triple(points):
    p0 = points[0]
    for q in points[1:]:
        for r in points[1:]:
            if not is_zero(cross(sub(q, p0), sub(r, p0))):
                return [p0, q, r]
    raise InputError("Error! points are collinear")
