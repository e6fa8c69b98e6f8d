"""Three concurrent lines splitting a planar point set into sixths, and
the exact line-transversal test for three point sets.

Search: for a direction u, the first line is parallel to u and halves
the data. For a center c on it, the points above are split by angle
around c into three near-equal blocks, which fixes the other two lines
through c. Moving c along the first line trades points between the two
outer lower sectors, and turning u trades points into the middle lower
sector, so a float sweep over directions with bisection along the line
finds a balanced configuration. Each float candidate is rebuilt with
exact rationals and accepted only if the exact sector counts differ by
at most one."""

import logging
from fractions import Fraction
from functools import cmp_to_key
from itertools import combinations
from math import pi

import numpy as np

from regdepth import config
from regdepth.exceptions import InputError, VerificationError, SearchBudgetExhausted
from regdepth.geometry.scalar import (make_points, dataset_dimension, sub, add, dot,
                                      cross2, scale, common_denominator, to_integers,
                                      int_array, is_zero, rational_text)
from regdepth.geometry.hyperplane import Hyperplane
from regdepth.constructions.partition import PartitionFamily

BISECTION_STEPS = 48
DENOMINATOR = 10**6

class SixSectorWitness(object):
    """center : exact point shared by the three lines
    lines : three Hyperplanes through center (the halving line first)
    sector_assignment : sector 0..5 of every data point, counterclockwise
    triple : index lists of the alternating sectors 0, 2 and 4"""

    def __init__(self, center, lines, sector_assignment, rays):
        self.center = center
        self.lines = lines
        self.sector_assignment = list(sector_assignment)
        self.rays = rays
        self.triple = [[i for i, s in enumerate(self.sector_assignment) if s == k] for k in (0, 2, 4)]

    def sizes(self):
        return [self.sector_assignment.count(k) for k in range(6)]

    def family(self):
        parts = [[i for i, s in enumerate(self.sector_assignment) if s == k] for k in range(6)]
        return PartitionFamily(parts, 'six-sector', n=len(self.sector_assignment))

    def triple_points(self, xs):
        return [[xs[i] for i in part] for part in self.triple]

    def verify(self, xs):
        for h in self.lines:
            if not h.contains_point(self.center):
                raise VerificationError("Error! line {0!r} misses the center".format(h))
        for i, p in enumerate(xs):
            if self.sector_assignment[i] not in _closed_sectors(self.rays, sub(p, self.center)):
                raise VerificationError("Error! point {0} is outside its assigned closed sector".format(i))
        s = self.sizes()
        if max(s) - min(s) > 1:
            raise VerificationError("Error! sector sizes {0} differ by more than one".format(s))
        cut, _ = is_transversal_triple(*self.triple_points(xs))
        if cut:
            raise VerificationError("Error! alternating sectors are transversal")
        return True

    def to_dict(self):
        return {'center': [rational_text(a) for a in self.center],
                'lines': [h.to_dict() for h in self.lines],
                'sector_assignment': list(self.sector_assignment),
                'sector_sizes': self.sizes(),
                'triple': [list(t) for t in self.triple]}

def _closed_sectors(rays, v):
    """Sectors (between rays[k] and rays[k+1]) whose closure holds v."""

    if is_zero(v):
        return list(range(6))
    out = []
    for k in range(6):
        a, b = rays[k], rays[(k + 1) % 6]
        if cross2(a, v) >= 0 and cross2(v, b) >= 0:
            if cross2(a, v) == 0 and dot(a, v) < 0:
                continue
            if cross2(v, b) == 0 and dot(v, b) < 0:
                continue
            out.append(k)
    return out

def _block_sizes(total):
    return [total//3 + (1 if k < total % 3 else 0) for k in range(3)]

def _balance(options, n):
    """Assign every point to one of its allowed sectors, most
    constrained points first, smallest sector first."""

    counts = [0]*6
    out = [None]*n
    for i in sorted(range(n), key=lambda i: (len(options[i]), i)):
        k = min(options[i], key=lambda s: (counts[s], s))
        out[i] = k
        counts[k] += 1
    return out

def _build_exact(xs, u, s):
    """Exact witness for first-line direction u and center parameter s,
    or None when the sectors come out unbalanced."""

    w = (-u[1], u[0])
    n = len(xs)
    lower_count = -(-n // 2)
    a = sorted(dot(w, p) for p in xs)
    h = (a[lower_count - 1] + a[lower_count]) / 2
    c = add(scale(h / dot(w, w), w), scale(s, u))
    upper = [i for i, p in enumerate(xs) if dot(w, p) > h]
    if len(upper) < 3:
        return None
    vs = [sub(p, c) for p in xs]

    def by_angle(i, j):
        cr = cross2(vs[i], vs[j])
        return -1 if cr > 0 else (1 if cr < 0 else 0)

    order = sorted(upper, key=cmp_to_key(by_angle))
    sz = _block_sizes(len(order))
    i1, i2 = sz[0], sz[0] + sz[1]
    r1 = add(vs[order[i1 - 1]], vs[order[i1]])
    r2 = add(vs[order[i2 - 1]], vs[order[i2]])
    if cross2(u, r1) <= 0 or cross2(r1, r2) <= 0 or cross2(r2, scale(-1, u)) <= 0:
        return None
    rays = [u, r1, r2, scale(-1, u), scale(-1, r1), scale(-1, r2)]
    options = [_closed_sectors(rays, v) for v in vs]
    assignment = _balance(options, n)
    counts = [assignment.count(k) for k in range(6)]
    if max(counts) - min(counts) > 1:
        return None
    lines = [Hyperplane.through([c, add(c, r)]) for r in (u, r1, r2)]
    return SixSectorWitness(c, lines, assignment, rays)

def _float_lower(X, upper, u, w, h, s, sz):
    c = h*w + s*u
    V = X - c
    ang = np.mod(np.arctan2(V @ w, V @ u), 2*pi)
    Vu = V[upper]
    order = np.argsort(ang[upper], kind='stable')
    i1, i2 = sz[0], sz[0] + sz[1]
    r1 = Vu[order[i1 - 1]] + Vu[order[i1]]
    r2 = Vu[order[i2 - 1]] + Vu[order[i2]]
    a1 = np.arctan2(r1 @ w, r1 @ u) % (2*pi)
    a2 = np.arctan2(r2 @ w, r2 @ u) % (2*pi)
    la = ang[~upper]
    s3 = int(((la > pi) & (la < pi + a1)).sum())
    s4 = int(((la > pi + a1) & (la < pi + a2)).sum())
    s5 = int((la > pi + a2).sum())
    return s3, s4, s5

def _rational_direction(theta):
    return (Fraction(np.cos(theta)).limit_denominator(DENOMINATOR),
            Fraction(np.sin(theta)).limit_denominator(DENOMINATOR))

def six_sector_partition(xs, directions=None):
    """Three concurrent lines whose six sectors hold counts differing by
    at most one; the alternating sectors 0, 2, 4 form a nontransversal
    triple (checked exactly)."""

    xs = make_points(xs)
    n = len(xs)
    if n < 6:
        raise InputError("Error! six-sector partition needs at least 6 points, got {0}".format(n))
    dataset_dimension(xs, 2)
    directions = config.SIX_SECTOR_DIRECTIONS if directions is None else directions
    if directions < 1:
        raise ValueError("Error! directions must be positive")

    X = np.array([[float(a) for a in p] for p in xs])
    shift = X.mean(axis=0)
    spread = max(float(np.abs(X - shift).max()), 1e-300)
    Xs = (X - shift) / spread
    q = n // 6
    lower_count = -(-n // 2)
    tried = 0

    for k in range(directions):
        theta = 2*pi*(k + 0.5)/directions
        u = np.array([np.cos(theta), np.sin(theta)])
        w = np.array([-u[1], u[0]])
        a = np.sort(Xs @ w)
        h = 0.5*(a[lower_count - 1] + a[lower_count])
        upper = (Xs @ w) > h
        if upper.sum() < 3:
            continue
        sz = _block_sizes(int(upper.sum()))
        b = Xs @ u
        lo, hi = float(b.min()) - 10.0, float(b.max()) + 10.0
        candidates = []
        for step in range(BISECTION_STEPS):
            mid = 0.5*(lo + hi)
            s3, s4, s5 = _float_lower(Xs, upper, u, w, h, mid, sz)
            if all(q <= v <= q + 1 for v in (s3, s4, s5)):
                candidates.append(mid)
                break
            if s3 < s5:
                lo = mid
            else:
                hi = mid
        if not candidates:
            continue
        ur = _rational_direction(theta)
        for sm in candidates:
            tried += 1
            # back to data coordinates: c = shift + spread*(h w + s u)
            s_exact = Fraction(float(sm*spread + shift @ u)).limit_denominator(DENOMINATOR*1000)
            witness = _build_exact(xs, ur, s_exact / dot(ur, ur))
            if witness is None:
                continue
            cut, _ = is_transversal_triple(*witness.triple_points(xs))
            if cut:
                raise VerificationError("Error! alternating sectors of three concurrent lines are transversal")
            logging.info("six-sector partition with sizes {0} after {1} directions".format(witness.sizes(), k + 1))
            return witness
    raise SearchBudgetExhausted("Error! no balanced six-sector configuration among {0} directions".format(directions),
                                diagnostics={'directions': directions, 'exact_attempts': tried})

def _split_patterns(m):
    """(j, s): on-line points before position j get -s, the rest s."""

    return [(j, s) for j in range(m + 1) for s in (1, -1)]

def is_transversal_triple(s1, s2, s3):
    """(True, line) when one line has points of every set strictly on
    both sides, else (False, None).

    Every open cell of transversal lines has a vertex, a line through
    two data points, and the cells around that vertex are reached by
    tilting the line about a position between its collinear data
    points. So all lines through two distinct points, with every such
    tilt, decide the question exactly."""

    sets = [make_points(s) for s in (s1, s2, s3)]
    if any(len(set(s)) < 2 for s in sets):
        return False, None
    union = sorted(set(p for s in sets for p in s))
    dataset_dimension(union, 2)
    pos = {p: i for i, p in enumerate(union)}
    member = np.zeros((len(union), 3), dtype=bool)
    for j, s in enumerate(sets):
        for p in s:
            member[pos[p], j] = True

    den = common_denominator(union)
    P = int_array(to_integers(union, den), degree=2)
    pairs = np.array(list(combinations(range(len(union)), 2)), dtype=np.int64).reshape(-1, 2)
    A, B = P[pairs[:, 0]], P[pairs[:, 1]]
    V = B - A
    normals = np.stack([-V[:, 1], V[:, 0]], axis=1)
    offsets = (normals*A).sum(axis=1)
    vals = normals.dot(P.T) - offsets.reshape(-1, 1)
    signs = ((vals > 0).astype(np.int8) - (vals < 0).astype(np.int8))

    pos_off = (signs > 0).astype(np.int64) @ member.astype(np.int64)
    neg_off = (signs < 0).astype(np.int64) @ member.astype(np.int64)
    seen = set()
    for r in range(len(pairs)):
        on = np.flatnonzero(signs[r] == 0)
        key = tuple(on)
        if key in seen:
            continue
        seen.add(key)
        direction = (int(V[r, 0]), int(V[r, 1]))
        on = sorted(on, key=lambda i: dot(direction, union[i]))
        for j, s in _split_patterns(len(on)):
            ok = True
            for t in range(3):
                has_pos = pos_off[r, t] > 0
                has_neg = neg_off[r, t] > 0
                for rank, i in enumerate(on):
                    if member[i, t]:
                        if (s if rank >= j else -s) > 0:
                            has_pos = True
                        else:
                            has_neg = True
                if not (has_pos and has_neg):
                    ok = False
                    break
            if ok:
                line = _tilted_line(union, union[pairs[r, 0]], union[pairs[r, 1]], on, j, s)
                return True, line
    return False, None

def _tilted_line(union, p, q, on, j, s):
    """Line through p and q tilted about a point between on-line
    positions j-1 and j, small enough to keep every off-line sign."""

    v = sub(q, p)
    normal = (-v[1], v[0])
    offset = dot(normal, p)
    ts = [dot(v, union[i]) for i in on]
    if j == 0:
        tau = ts[0] - 1
    elif j == len(ts):
        tau = ts[-1] + 1
    else:
        tau = (ts[j - 1] + ts[j]) / 2
    eps = None
    for x in union:
        base = dot(normal, x) - offset
        tilt = dot(v, x) - tau
        if base != 0 and tilt != 0:
            r = abs(Fraction(base)) / abs(Fraction(tilt))
            if eps is None or r < eps:
                eps = r
    eps = Fraction(1) if eps is None else eps / 2
    # value(x) = base(x) + s*eps*(v.x - tau)
    return Hyperplane(tuple(a + s*eps*b for a, b in zip(normal, v)), offset + s*eps*tau)
