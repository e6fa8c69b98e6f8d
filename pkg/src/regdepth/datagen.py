"""Seeded dataset generators.

Every generator returns exact points (tuples of Fractions) and depends
only on its GeneratorSpec, so the same spec always gives the same data.

The r31-lower-bound configuration is built in the dual: each data point
(a, b, c) stands for the plane z = a*x + b*y - c, and the planes are
arranged in five groups (A1, A2, B1, B2, C) of nearly parallel, closely
spaced planes. Seen in the cross-section x = 1 the group base lines are

    C : z = 0          B1 : z = 2/3 (y - 3)        B2 : z = 3/2 y

forming a triangle with vertices (0, 0), (3, 0), (-12/5, -18/5), and the
A lines A1 : slope -2/3, A2 : slope -3/2 cross at (2, -3/10) inside it
without meeting the B2 side. The cross-section x = -1 is the mirror
image z -> -z with the roles of the A and B groups exchanged."""

import logging
from fractions import Fraction
from math import cos, sin, pi, tan

import numpy as np

from regdepth import config
from regdepth.exceptions import InputError, VerificationError
from regdepth.geometry.scalar import (parse_scalar, common_denominator, to_integers,
                                      int_array)

KINDS = ('uniform-box', 'circle-equispaced', 'sphere-projection', 'clusters',
         'collinear', 'planted-flat', 'r31-lower-bound')

BOX = 1000
DENOMINATOR = 10**6
RETRIES = 20

class GeneratorSpec(object):
    """kind : one of KINDS
    n, d, seed : size, dimension, generator seed
    clusters, spread : cluster count and integer offset range
    k : dimension of the planted flat
    tilt, spacing : slope spread and crossing spread inside an
                    r31-lower-bound group
    general_position : promise distinct x and no three collinear points"""

    def __init__(self, kind, n, d=2, seed=0, clusters=3, spread=0, k=1,
                 tilt=None, spacing=None, general_position=False):
        self.kind = kind
        self.n = int(n)
        self.d = int(d)
        self.seed = int(seed)
        self.clusters = int(clusters)
        self.spread = int(spread)
        self.k = int(k)
        self.tilt = config.R31_TILT if tilt is None else parse_scalar(tilt)
        self.spacing = config.R31_SPACING if spacing is None else parse_scalar(spacing)
        self.general_position = bool(general_position)
        self.validate()

    @classmethod
    def parse(cls, pairs):
        """Build a spec from "key=value" strings."""

        kwargs = {}
        for item in pairs:
            if '=' not in item:
                raise InputError("Error! generator option {0!r} is not key=value".format(item))
            key, value = item.split('=', 1)
            key = key.strip().replace('-', '_')
            value = value.strip()
            if key == 'general_position':
                kwargs[key] = value.lower() in ('1', 'true', 'yes')
            elif key in ('kind', 'tilt', 'spacing'):
                kwargs[key] = value
            elif key in ('n', 'd', 'seed', 'clusters', 'spread', 'k'):
                try:
                    kwargs[key] = int(value)
                except ValueError:
                    raise InputError("Error! generator option {0} must be an integer, got {1!r}".format(key, value))
            else:
                raise InputError("Error! unknown generator option {0!r}".format(key))
        if 'kind' not in kwargs or 'n' not in kwargs:
            raise InputError("Error! generator spec needs kind= and n=")
        return cls(**kwargs)

    def validate(self):
        if self.kind not in KINDS:
            raise InputError("Error! unknown generator kind {0!r}".format(self.kind))
        if self.n < 0:
            raise InputError("Error! n must be nonnegative")
        if self.d not in (2, 3):
            raise InputError("Error! d must be 2 or 3")
        if self.kind == 'r31-lower-bound':
            if self.d != 3:
                raise InputError("Error! r31-lower-bound requires d=3")
            if self.n % 5 != 0 or self.n == 0:
                raise InputError("Error! r31-lower-bound requires n to be a positive multiple of 5, got {0}".format(self.n))
        if self.kind == 'sphere-projection' and self.d != 2:
            raise InputError("Error! sphere-projection generates planar points (d=2)")
        if self.kind == 'clusters' and self.clusters < 1:
            raise InputError("Error! clusters must be positive")
        if self.kind == 'planted-flat' and not 0 <= self.k <= self.d - 1:
            raise InputError("Error! planted flat dimension k must be in 0..{0}".format(self.d - 1))
        if self.spread < 0:
            raise InputError("Error! spread must be nonnegative")

    def to_dict(self):
        return {'kind': self.kind, 'n': self.n, 'd': self.d, 'seed': self.seed,
                'clusters': self.clusters, 'spread': self.spread, 'k': self.k,
                'tilt': str(self.tilt), 'spacing': str(self.spacing),
                'general_position': self.general_position}

def _rat(x):
    return Fraction(float(x)).limit_denominator(DENOMINATOR)

def _uniform_box(spec, rng):
    raw = rng.integers(0, BOX*BOX, size=(spec.n, spec.d))
    return [tuple(Fraction(int(a), BOX) for a in row) for row in raw]

def circle_point(j, n):
    """Exact point of the unit circle near angle 2 pi j / n, from the
    rational parametrization ((1 - t^2)/(1 + t^2), 2t/(1 + t^2))."""

    if 2*j == n:
        return (Fraction(-1), Fraction(0))
    t = _rat(tan(pi*j/n))
    return ((1 - t*t)/(1 + t*t), 2*t/(1 + t*t))

def _circle(spec, rng):
    pts = [circle_point(j, spec.n) for j in range(spec.n)]
    if spec.d == 3:
        zs = rng.integers(-BOX, BOX + 1, size=spec.n)
        pts = [p + (Fraction(int(z), BOX),) for p, z in zip(pts, zs)]
    return pts

def _sphere_projection(spec, rng):
    """Central projection onto z = 1 of uniform points on the sphere."""

    out = []
    while len(out) < spec.n:
        v = rng.normal(size=3)
        if abs(v[2]) < 1e-9:
            continue
        out.append((_rat(v[0]/v[2]), _rat(v[1]/v[2])))
    return out

def _clusters(spec, rng):
    centers = rng.integers(0, BOX, size=(spec.clusters, spec.d))
    out = []
    for i in range(spec.n):
        c = centers[i % spec.clusters]
        if spec.spread > 0:
            off = rng.integers(-spec.spread, spec.spread + 1, size=spec.d)
        else:
            off = np.zeros(spec.d, dtype=np.int64)
        out.append(tuple(Fraction(int(a) + int(b)) for a, b in zip(c, off)))
    return out

def _collinear(spec, rng):
    anchor = rng.integers(-BOX, BOX, size=spec.d)
    direction = rng.integers(1, 50, size=spec.d)
    ts = rng.permutation(spec.n) - spec.n // 2
    return [tuple(Fraction(int(a) + int(t)*int(v)) for a, v in zip(anchor, direction)) for t in ts]

def _planted(spec, rng):
    """k+1 clusters at points of a random non-vertical k-flat."""

    groups = spec.k + 1
    base = rng.integers(0, BOX, size=(groups, spec.d))
    # spread the anchors over the independent coordinates
    for g in range(groups):
        for j in range(spec.k):
            base[g, j] = int(base[g, j]) + (BOX if g == j + 1 else 0)
    out = []
    for i in range(spec.n):
        c = base[i % groups]
        if spec.spread > 0:
            off = rng.integers(-spec.spread, spec.spread + 1, size=spec.d)
        else:
            off = np.zeros(spec.d, dtype=np.int64)
        out.append(tuple(Fraction(int(a) + int(b)) for a, b in zip(c, off)))
    return out

# x = 1 cross-section: slope and crossing center of every group
_A_CROSS = (Fraction(2), Fraction(-3, 10))
_A1_C = (Fraction(31, 20), Fraction(0))
_A2_B1 = (Fraction(141, 65), Fraction(-36, 65))

R31_GROUPS = {
    'A1': (Fraction(-2, 3), ((_A1_C[0] + _A_CROSS[0])/2, (_A1_C[1] + _A_CROSS[1])/2)),
    'A2': (Fraction(-3, 2), ((_A_CROSS[0] + _A2_B1[0])/2, (_A_CROSS[1] + _A2_B1[1])/2)),
    'B1': (Fraction(2, 3), (Fraction(3, 10), Fraction(-9, 5))),
    'B2': (Fraction(3, 2), (Fraction(-6, 5), Fraction(-9, 5))),
    'C': (Fraction(0), (Fraction(3, 2), Fraction(0))),
}

# group whose mirrored x = 1 lines form a group's x = -1 lines
R31_PARTNER = {'A1': 'B1', 'A2': 'B2', 'B1': 'A1', 'B2': 'A2', 'C': 'C'}

def _offset(j, m):
    # shifted by a quarter step so that -t is never an offset itself
    return (Fraction(j) - Fraction(m - 1, 2) + Fraction(1, 4)) / m

def _member(group, t, tilt, spacing):
    """(slope, intercept) of the member with offset t in the x = 1 section."""

    s, (qy, qz) = R31_GROUPS[group]
    slope = s + tilt*t
    py, pz = qy + spacing*t, qz + spacing*t*s
    return slope, pz - slope*py

def r31_sections(spec):
    """{1: {group: [(slope, intercept), ...]}, -1: {...}}: the member
    lines of every group in the cross-sections x = 1 and x = -1."""

    m = spec.n // 5
    sections = {1: {}, -1: {}}
    for g in R31_GROUPS:
        sections[1][g] = []
        sections[-1][g] = []
        for j in range(m):
            t = _offset(j, m)
            sections[1][g].append(_member(g, t, spec.tilt, spec.spacing))
            ps, pi_ = _member(R31_PARTNER[g], -t, spec.tilt, spec.spacing)
            sections[-1][g].append((-ps, -pi_))
    return sections

def _base_sections(spec):
    base = {1: {}, -1: {}}
    for g in R31_GROUPS:
        base[1][g] = _member(g, Fraction(0), spec.tilt, spec.spacing)
        ps, pi_ = _member(R31_PARTNER[g], Fraction(0), spec.tilt, spec.spacing)
        base[-1][g] = (-ps, -pi_)
    return base

def _meet(l1, l2):
    (s1, i1), (s2, i2) = l1, l2
    if s1 == s2:
        return None
    y = (i2 - i1) / (s1 - s2)
    return (y, s1*y + i1)

def _side(a, b, p):
    return (b[0] - a[0])*(p[1] - a[1]) - (b[1] - a[1])*(p[0] - a[0])

def _strictly_inside(tri, p):
    a, b, c = tri
    s = [_side(a, b, p), _side(b, c, p), _side(c, a, p)]
    return all(v > 0 for v in s) or all(v < 0 for v in s)

def _on_open_segment(a, b, p):
    if _side(a, b, p) != 0:
        return False
    return min(a, b) < p < max(a, b)

def check_r31_structure(sections, base=None):
    """Assert the cross-section pattern in both sections: the crossings
    of the two inner groups lie strictly inside the triangle of the
    three outer base lines and the inner lines miss its designated side.
    At x = 1 the inner groups are A1, A2 (outer B1, B2, C, side B2); at
    x = -1 they are B1, B2 (outer A1, A2, C, side A2). Raises
    VerificationError; returns True."""

    for x, inner, outer, side in ((1, ('A1', 'A2'), ('B1', 'B2', 'C'), 'B2'),
                                  (-1, ('B1', 'B2'), ('A1', 'A2', 'C'), 'A2')):
        sec = sections[x]
        ref = base[x] if base is not None else {g: sec[g][len(sec[g])//2] for g in sec}
        o1, o2, o3 = (ref[g] for g in outer)
        tri = (_meet(o1, o2), _meet(o2, o3), _meet(o3, o1))
        if any(v is None for v in tri):
            raise VerificationError("Error! outer base lines at x={0} are parallel".format(x))
        side_ends = [_meet(ref[side], ref[g]) for g in outer if g != side]
        for l1 in sec[inner[0]]:
            for l2 in sec[inner[1]]:
                p = _meet(l1, l2)
                if p is None or not _strictly_inside(tri, p):
                    raise VerificationError("Error! inner crossing at x={0} is not inside the outer triangle".format(x))
        for g in inner:
            for line in sec[g]:
                p = _meet(line, ref[side])
                if p is not None and (p in side_ends or _on_open_segment(side_ends[0], side_ends[1], p)):
                    raise VerificationError("Error! group {0} meets side {1} at x={2}".format(g, side, x))
    return True

def _r31(spec, rng):
    sections = r31_sections(spec)
    check_r31_structure(sections, _base_sections(spec))
    out = []
    for g in R31_GROUPS:
        for (b, i1), (b2, im1) in zip(sections[1][g], sections[-1][g]):
            assert b == b2, "Error! member slopes differ between the two cross-sections"
            a = (i1 - im1) / 2
            c = -(i1 + im1) / 2
            out.append((a, b, c))
    if len(set(p[0] for p in out)) != len(out):
        raise VerificationError("Error! r31-lower-bound points do not have distinct x")
    order = rng.permutation(len(out))
    return [out[int(i)] for i in order]

_GENERATORS = {
    'uniform-box': _uniform_box,
    'circle-equispaced': _circle,
    'sphere-projection': _sphere_projection,
    'clusters': _clusters,
    'collinear': _collinear,
    'planted-flat': _planted,
    'r31-lower-bound': _r31,
}

def check_general_position(points, distinct_x=True, no_three_collinear=True):
    """Exact check of the declared general-position flags."""

    points = list(points)
    if distinct_x and len(set(p[0] for p in points)) != len(points):
        return False
    if no_three_collinear and len(points) >= 3:
        if len(set(points)) != len(points):
            return False
        P = int_array(to_integers(points, common_denominator(points)), degree=2)
        for i in range(len(points) - 2):
            V = P[i + 1:] - P[i]
            if V.shape[1] == 2:
                C = np.outer(V[:, 0], V[:, 1]) - np.outer(V[:, 1], V[:, 0])
                zero = (C == 0)
            else:
                zero = np.ones((V.shape[0], V.shape[0]), dtype=bool)
                for a, b in ((1, 2), (2, 0), (0, 1)):
                    zero &= (np.outer(V[:, a], V[:, b]) - np.outer(V[:, b], V[:, a])) == 0
            if np.triu(zero, 1).any():
                return False
    return True

def generate(spec):
    """Points for a GeneratorSpec (deterministic per seed)."""

    spec.validate()
    for attempt in range(RETRIES):
        rng = np.random.default_rng([spec.seed, attempt])
        pts = _GENERATORS[spec.kind](spec, rng)
        if not spec.general_position or check_general_position(pts):
            if attempt:
                logging.info("generator {0}: general position after {1} retries".format(spec.kind, attempt))
            return pts
    raise VerificationError("Error! could not generate {0} points in general position".format(spec.kind))
