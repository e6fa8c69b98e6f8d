"""Tverberg partitions in the plane and their flat generalization.

A planar Tverberg partition splits the data into parts whose closed
convex hulls share a common point; with ceil(n/3) parts that point has
Tukey depth >= ceil(n/3). For n = 3m the parts are triples taken every
m-th point in angular order around a point of depth >= m. For n = 3m+1
and n = 3m+2 one or two points are set aside first (a singleton, a
segment, or two crossing segments) so that a point of depth >= m in the
rest remains."""

import logging
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations

from regdepth import config
from regdepth.exceptions import InputError, VerificationError, SearchBudgetExhausted
from regdepth.geometry.scalar import (make_points, dataset_dimension, sub, add, scale, dot,
                                      cross2, is_zero, rational_text)
from regdepth.geometry.flats import AffineFlat
from regdepth.geometry.hull import convex_hull_2d, hull_contains
from regdepth.depth.engine import regression_depth, tukey_depth
from regdepth.constructions.partition import PartitionFamily, order_by_x
from regdepth.constructions.centerpoint import centerpoint
from regdepth.constructions.catline import catline

class TverbergResult(object):
    """flat : AffineFlat (a point for k = 0, a line for k = 1)
    parts : PartitionFamily of kind tverberg
    per_part_depth : regression depth of flat in every part
    target : number of parts the construction aims for"""

    def __init__(self, flat, k, parts, per_part_depth, target):
        self.flat = flat
        self.k = k
        self.parts = parts
        self.per_part_depth = list(per_part_depth)
        self.target = target

    @property
    def valid(self):
        return all(v >= 1 for v in self.per_part_depth)

    def to_dict(self):
        return {'flat': self.flat.to_dict(),
                'k': self.k,
                'parts': [list(p) for p in self.parts.parts],
                'per_part_depth': list(self.per_part_depth),
                'part_count': len(self.parts),
                'target': self.target,
                'valid': self.valid}

def verify_flat_tverberg(f, k, parts, xs):
    """Regression depth of f in every part (parts must be disjoint)."""

    xs = make_points(xs)
    if not isinstance(parts, PartitionFamily):
        try:
            parts = PartitionFamily(parts, 'tverberg', n=len(xs))
        except VerificationError as e:
            raise InputError(str(e))
    return [regression_depth(f, k, sub_xs).depth for sub_xs in parts.subsets(xs)]

def _angular_order(indices, xs, c):
    """Indices sorted by angle of xs[i] - c in [0, 2pi); points equal
    to c come first."""

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def cmp(i, j):
        vi, vj = sub(xs[i], c), sub(xs[j], c)
        zi, zj = is_zero(vi), is_zero(vj)
        if zi or zj:
            return (0 if zi else 1) - (0 if zj else 1)
        hi, hj = half(vi), half(vj)
        if hi != hj:
            return hi - hj
        cr = cross2(vi, vj)
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    return sorted(indices, key=cmp_to_key(cmp))

def _triples(indices, xs, c):
    m = len(indices) // 3
    order = _angular_order(indices, xs, c)
    return [[order[j], order[j + m], order[j + 2*m]] for j in range(m)]

def _contains(part, xs, c):
    return hull_contains(convex_hull_2d([xs[i] for i in part]), c)

def _closest_on_segment(p, q, c):
    v = sub(q, p)
    t = Fraction(dot(sub(c, p), v), dot(v, v))
    t = min(Fraction(1), max(Fraction(0), t))
    return add(p, scale(t, v))

def _segment_crossing(p, q, s, t):
    v, w = sub(q, p), sub(t, s)
    den = cross2(v, w)
    if den == 0:
        return None
    a = Fraction(cross2(sub(s, p), w), den)
    b = Fraction(cross2(sub(s, p), v), den)
    if 0 <= a <= 1 and 0 <= b <= 1:
        return add(p, scale(a, v))
    return None

def _segment_candidates(p, q, rest, xs, c):
    """Points of segment pq to test for depth in the rest: the point
    closest to c, the endpoints, then the crossings with lines through
    two remaining points. A depth region of the rest meets pq only if
    one of these lies in it."""

    yield _closest_on_segment(p, q, c)
    yield p
    yield q
    seen = set()
    for s, t in combinations(rest, 2):
        if xs[s] == xs[t]:
            continue
        v, w = sub(q, p), sub(xs[t], xs[s])
        den = cross2(v, w)
        if den == 0:
            continue
        a = Fraction(cross2(sub(xs[s], p), w), den)
        if 0 <= a <= 1 and a not in seen:
            seen.add(a)
            yield add(p, scale(a, v))

def _sq_dist(p, c):
    d = sub(p, c)
    return dot(d, d)

class _Budget(object):

    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise SearchBudgetExhausted("Error! Tverberg search exceeded {0} checks".format(self.limit),
                                        diagnostics={'checks': self.used})

def _deep_in(point, rest, xs, need, budget):
    budget.spend()
    return tukey_depth(point, [xs[i] for i in rest]).depth >= need

def _set_aside(xs, c, m, r, budget):
    """(point, parts set aside, remaining indices, depth needed in the rest)."""

    n = len(xs)
    everything = list(range(n))
    if r == 0:
        return c, [], everything
    if r == 2:
        pairs = sorted(combinations(everything, 2),
                       key=lambda ij: (_sq_dist(_closest_on_segment(xs[ij[0]], xs[ij[1]], c), c), ij))
        for i, j in pairs:
            rest = [t for t in everything if t not in (i, j)]
            for point in _segment_candidates(xs[i], xs[j], rest, xs, c):
                if _deep_in(point, rest, xs, m, budget):
                    return point, [[i, j]], rest
    else:
        for i in sorted(everything, key=lambda t: (_sq_dist(xs[t], c), t)):
            rest = [t for t in everything if t != i]
            if _deep_in(xs[i], rest, xs, m, budget):
                return xs[i], [[i]], rest
        segs = sorted(combinations(everything, 2),
                      key=lambda ij: (_sq_dist(_closest_on_segment(xs[ij[0]], xs[ij[1]], c), c), ij))
        for (i, j), (s, t) in combinations(segs, 2):
            if len({i, j, s, t}) < 4:
                continue
            point = _segment_crossing(xs[i], xs[j], xs[s], xs[t])
            if point is None:
                continue
            rest = [u for u in everything if u not in (i, j, s, t)]
            if not rest or _deep_in(point, rest, xs, m - 1, budget):
                return point, [[i, j], [s, t]], rest
    raise SearchBudgetExhausted("Error! no set-aside configuration found for n = {0}".format(n),
                                diagnostics={'checks': budget.used})

def _repair(parts, xs, c, budget):
    """Swap single points between parts until every hull holds c."""

    changed = True
    while changed:
        changed = False
        bad = [a for a in range(len(parts)) if not _contains(parts[a], xs, c)]
        if not bad:
            return parts
        a = bad[0]
        for b in range(len(parts)):
            if b == a:
                continue
            for ia in range(len(parts[a])):
                for ib in range(len(parts[b])):
                    budget.spend()
                    pa, pb = list(parts[a]), list(parts[b])
                    pa[ia], pb[ib] = pb[ib], pa[ia]
                    if _contains(pa, xs, c) and _contains(pb, xs, c):
                        parts[a], parts[b] = pa, pb
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
    raise SearchBudgetExhausted("Error! Tverberg repair found no improving swap",
                                diagnostics={'checks': budget.used})

def tverberg_partition_2d(xs, seed=0, budget=None):
    """TverbergResult with ceil(n/3) parts whose closed hulls all hold
    the returned point."""

    xs = make_points(xs)
    n = len(xs)
    if n < 3:
        raise InputError("Error! planar Tverberg partition needs at least 3 points, got {0}".format(n))
    dataset_dimension(xs, 2)
    budget = _Budget(config.TVERBERG_REPAIR_BUDGET if budget is None else budget)
    m, r = divmod(n, 3)
    c = centerpoint(xs, seed=seed)
    point, aside, rest = _set_aside(xs, c, m, r, budget)
    triples = _triples(rest, xs, point) if rest else []
    if any(not _contains(t, xs, point) for t in triples):
        logging.warning("Tverberg: angular grouping missed the point, repairing")
        triples = _repair(triples, xs, point, budget)
    parts = aside + triples
    for part in parts:
        if not _contains(part, xs, point):
            raise VerificationError("Error! part {0} does not contain {1}".format(part, point))
    family = PartitionFamily(parts, 'tverberg', n=n)
    flat = AffineFlat(point)
    depths = verify_flat_tverberg(flat, 0, family, xs)
    target = -(-n // 3)
    if len(family) != target:
        raise VerificationError("Error! {0} parts, expected {1}".format(len(family), target))
    logging.info("Tverberg partition of {0} points into {1} parts around ({2})".format(
        n, len(family), ', '.join(rational_text(a) for a in point)))
    return TverbergResult(flat, 0, family, depths, target)

def catline_tverberg_partition(xs):
    """The catline with a partition of the data into parts in each of
    which it has nonzero regression depth: data points on the line as
    singletons, then triples in x order whose residual signs alternate,
    leftovers added to the last part."""

    xs = make_points(xs)
    line = catline(xs)
    h = line.hyperplane()
    if h.normal[1] < 0:
        h = h.negated()
    side = [h.orient(p) for p in xs]
    parts = [[i] for i in range(len(xs)) if side[i] == 0]
    current, leftovers = [], []
    for i in order_by_x(xs):
        s = side[i]
        if s == 0:
            continue
        if not current or (s != side[current[-1]] and xs[i][0] != xs[current[-1]][0]):
            current.append(i)
        else:
            leftovers.append(i)
        if len(current) == 3:
            parts.append(current)
            current = []
    leftovers += current
    if parts:
        parts[-1] = parts[-1] + leftovers
    elif leftovers:
        parts = [leftovers]
    family = PartitionFamily(parts, 'tverberg', n=len(xs))
    depths = verify_flat_tverberg(line, 1, family, xs)
    if any(v < 1 for v in depths):
        raise VerificationError("Error! catline has depth 0 in a part: {0}".format(depths))
    return TverbergResult(line, 1, family, depths, -(-len(xs) // 3))
