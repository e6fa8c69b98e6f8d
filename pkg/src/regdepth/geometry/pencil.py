"""Candidate hyperplanes through a flat.

A pencil is the family of hyperplanes containing a given flat. For a
finite dataset only finitely many positions of a pencil member matter:
the member's sign vector over the data changes only when the member
passes through a data point. Each Pencil class below enumerates one
member per combinatorial position (one orientation per projective
member; the two wedge pairings cover the other orientation) and keeps
the int8 sign matrix of its members over the data, rows = members,
columns = points.

One-dimensional pencils (a point in the plane, a line in space, the
vertical lines x = c) are swept in angular or positional order: event
members pass through a data point, between members sit strictly
between consecutive events. Two-dimensional pencils (a point in space,
the vertical planes used for plane depth) are enumerated per pivot data
point: the one-dimensional sub-pencil through the pivot, each member
tipped off the pivot to both sides by an exact small step that keeps
every other nonzero sign. Every cell of the pencil's arrangement has an
edge on some pivot's sub-pencil, so every cell is visited."""

from fractions import Fraction
from functools import cmp_to_key

import numpy as np

from regdepth.exceptions import UnsupportedCaseError, DimensionError, VerificationError
from regdepth.geometry.scalar import (common_denominator, to_integers, primitive,
                                      sign, dot, sub, cross2, dataset_dimension)
from regdepth.geometry.hyperplane import Hyperplane
from regdepth.geometry.flats import AffineFlat, VerticalInfinity

def _upper(ex, ey):
    """Flip a direction into the half-open upper half plane [0, pi)."""

    if ey < 0 or (ey == 0 and ex < 0):
        return -ex, -ey, -1
    return ex, ey, 1

def _angle_cmp(p, q):
    c = cross2(p, q)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0

def rotation_members(qa, qb, events=True):
    """Sweep the one-dimensional pencil whose member with direction
    (alpha, beta) gives point j the sign of alpha*qa[j] + beta*qb[j].

    Returns (directions, signs) where directions is a list of integer
    pairs and signs an int8 array (members x points)."""

    n = len(qa)
    sigma = np.zeros(n, dtype=np.int64)
    rank = np.zeros(n, dtype=np.int64)
    dirs = {}
    for j in range(n):
        ex, ey = qb[j], -qa[j]
        if ex == 0 and ey == 0:
            continue
        ex, ey, s = _upper(ex, ey)
        sigma[j] = s
        dirs[j] = (ex, ey)

    order = sorted(dirs.keys(), key=lambda j: cmp_to_key(_angle_cmp)(dirs[j]))
    unique = []
    for j in order:
        if not unique or cross2(unique[-1], dirs[j]) != 0:
            unique.append(dirs[j])
        rank[j] = len(unique) - 1

    m = len(unique)
    members = []
    positions = []
    if m == 0:
        members.append((1, 0))
        positions.append(1)
    else:
        for r in range(m):
            e = unique[r]
            if events:
                members.append(e)
                positions.append(2*r)
            if m == 1:
                b = (-e[1], e[0])
            elif r < m - 1:
                b = (e[0] + unique[r + 1][0], e[1] + unique[r + 1][1])
            else:
                b = (e[0] - unique[0][0], e[1] - unique[0][1])
            members.append(b)
            positions.append(2*r + 1)

    pos = np.array(positions, dtype=np.int64)
    signs = np.sign(pos[:, None] - 2*rank[None, :]) * sigma[None, :]
    return members, signs.astype(np.int8)

def normal_basis(v):
    """Two independent integer vectors orthogonal to the 3D vector v."""

    i = min(range(3), key=lambda t: (abs(v[t]), t))
    e = [0, 0, 0]
    e[i] = 1
    u = (v[1]*e[2] - v[2]*e[1], v[2]*e[0] - v[0]*e[2], v[0]*e[1] - v[1]*e[0])
    w = (v[1]*u[2] - v[2]*u[1], v[2]*u[0] - v[0]*u[2], v[0]*u[1] - v[1]*u[0])
    return primitive(u), primitive(w)

def _dedupe_rows(signs):
    """Indices of the first occurrence of every distinct row, in order."""

    if signs.shape[0] <= 1:
        return np.arange(signs.shape[0])
    _, first = np.unique(signs, axis=0, return_index=True)
    return np.sort(first)

def _tip_step(base_values, tip_values):
    """Largest safe step (halved) so that base + eps*tip keeps every
    nonzero base sign."""

    eps = None
    for b, t in zip(base_values, tip_values):
        if b != 0 and t != 0:
            r = abs(Fraction(b)) / abs(Fraction(t))
            if eps is None or r < eps:
                eps = r
    if eps is None:
        return Fraction(1)
    return eps / 2

class Pencil(object):
    """Base class: subclasses fill self.signs and implement hyperplane()."""

    dimension = 0

    def __init__(self, xs):
        self.xs = list(xs)
        self.n = len(self.xs)
        self.signs = np.zeros((0, self.n), dtype=np.int8)

    @property
    def size(self):
        return self.signs.shape[0]

    def hyperplane(self, row):
        raise NotImplementedError

    def hyperplanes(self):
        return [self.hyperplane(r) for r in range(self.size)]

    def _check(self, row, h):
        got = np.array([h.orient(p) for p in self.xs], dtype=np.int8)
        if not np.array_equal(got, self.signs[row]):
            raise VerificationError("Error! materialized pencil member {0} disagrees with its sign row".format(row))
        return h

class SinglePencil(Pencil):
    """A (d-1)-flat: its own hyperplane is the only member."""

    def __init__(self, h, xs):
        super().__init__(xs)
        self.h = h
        self.signs = np.array([[h.orient(p) for p in self.xs]], dtype=np.int8).reshape(1, self.n)

    def hyperplane(self, row):
        return self.h

class InfinityPencil(Pencil):
    """The hyperplane at infinity alone (pencil of the (d-1)-flat at
    infinity)."""

    def __init__(self, d, xs):
        super().__init__(xs)
        self.d = d
        self.signs = np.ones((1, self.n), dtype=np.int8)

    def hyperplane(self, row):
        return Hyperplane.at_infinity(self.d)

class RotationPencil(Pencil):
    """Hyperplanes through a point in the plane or a line in space."""

    dimension = 1

    def __init__(self, anchor, u, w, xs, events=True):
        super().__init__(xs)
        self.anchor = tuple(anchor)
        self.u = primitive(u)
        self.w = primitive(w)
        den = common_denominator(self.xs, [self.anchor])
        A = to_integers([self.anchor], den)[0]
        pts = to_integers(self.xs, den)
        qa = [dot(self.u, sub(p, A)) for p in pts]
        qb = [dot(self.w, sub(p, A)) for p in pts]
        self.members, self.signs = rotation_members(qa, qb, events=events)

    @classmethod
    def for_flat(cls, flat, xs):
        if flat.d == 2:
            return cls(flat.anchor, (1, 0), (0, 1), xs)
        u, w = normal_basis(primitive(flat.span[0]))
        return cls(flat.anchor, u, w, xs)

    def hyperplane(self, row):
        alpha, beta = self.members[row]
        normal = tuple(alpha*a + beta*b for a, b in zip(self.u, self.w))
        return Hyperplane(normal, dot(normal, self.anchor))

class ParallelPencil(Pencil):
    """Vertical hyperplanes x = c (one independent coordinate) plus the
    hyperplane at infinity, which stands for every c outside the data."""

    dimension = 1

    def __init__(self, d, xs):
        super().__init__(xs)
        self.d = d
        values = sorted(set(p[0] for p in self.xs))
        self.cuts = []
        for r, v in enumerate(values):
            self.cuts.append(v)
            if r < len(values) - 1:
                self.cuts.append((v + values[r + 1]) / 2)
        index = dict((v, r) for r, v in enumerate(values))
        rank = np.array([index[p[0]] for p in self.xs], dtype=np.int64)
        pos = np.arange(len(self.cuts), dtype=np.int64)
        rows = np.sign(2*rank[None, :] - pos[:, None]).astype(np.int8)
        self.signs = np.vstack([rows.reshape(len(self.cuts), self.n),
                                np.ones((1, self.n), dtype=np.int8)])

    def hyperplane(self, row):
        if row == len(self.cuts):
            return Hyperplane.at_infinity(self.d)
        normal = (1,) + (0,)*(self.d - 1)
        return Hyperplane(normal, self.cuts[row])

class PointPencil3D(Pencil):
    """Planes through a point in space."""

    dimension = 2

    def __init__(self, center, xs):
        super().__init__(xs)
        self.center = tuple(center)
        den = common_denominator(self.xs, [self.center])
        C = to_integers([self.center], den)[0]
        self.q = [sub(p, C) for p in to_integers(self.xs, den)]
        blocks = []
        self.rowinfo = []
        seen = set()
        for i, v in enumerate(self.q):
            if v == (0, 0, 0):
                continue
            line = primitive(v)
            if line in seen or tuple(-a for a in line) in seen:
                continue
            seen.add(line)
            u, w = normal_basis(line)
            qa = [dot(u, q) for q in self.q]
            qb = [dot(w, q) for q in self.q]
            members, signs = rotation_members(qa, qb, events=True)
            along = np.array([sign(dot(line, q)) for q in self.q], dtype=np.int8)
            for r, m in enumerate(members):
                row = signs[r]
                if (r % 2 == 0) and len(members) > 1:
                    blocks.append(row[None, :])
                    self.rowinfo.append((line, u, w, m, 0))
                    continue
                zero = (row == 0)
                for s in (1, -1):
                    blocks.append((row + zero*s*along).astype(np.int8)[None, :])
                    self.rowinfo.append((line, u, w, m, s))
        if not blocks:
            blocks.append(np.zeros((1, self.n), dtype=np.int8))
            self.rowinfo.append(((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0), 0))
        signs = np.vstack(blocks)
        keep = _dedupe_rows(signs)
        self.signs = signs[keep]
        self.rowinfo = [self.rowinfo[k] for k in keep]

    def hyperplane(self, row):
        line, u, w, (alpha, beta), s = self.rowinfo[row]
        normal = tuple(alpha*a + beta*b for a, b in zip(u, w))
        if s != 0:
            base = [dot(normal, q) for q in self.q]
            tip = [dot(line, q) for q in self.q]
            eps = _tip_step(base, tip)
            normal = tuple(Fraction(a) + s*eps*b for a, b in zip(normal, line))
        return self._check(row, Hyperplane(normal, dot(normal, self.center)))

class VerticalPlanePencil(Pencil):
    """Vertical planes a*x + b*y = c in space (two independent
    coordinates) plus the plane at infinity."""

    dimension = 2

    def __init__(self, xs):
        super().__init__(xs)
        den = common_denominator(self.xs)
        self.den = den
        self.proj = [p[:2] for p in to_integers(self.xs, den)]
        blocks = []
        self.rowinfo = []
        for i, pivot in enumerate(sorted(set(self.proj))):
            qa = [p[0] - pivot[0] for p in self.proj]
            qb = [p[1] - pivot[1] for p in self.proj]
            members, signs = rotation_members(qa, qb, events=True)
            for r, m in enumerate(members):
                row = signs[r]
                if (r % 2 == 0) and len(members) > 1:
                    blocks.append(row[None, :])
                    self.rowinfo.append((pivot, m, 0))
                    continue
                zero = (row == 0)
                for s in (1, -1):
                    blocks.append((row + zero*s).astype(np.int8)[None, :])
                    self.rowinfo.append((pivot, m, s))
        blocks.append(np.ones((1, self.n), dtype=np.int8))
        self.rowinfo.append(None)
        signs = np.vstack(blocks)
        keep = _dedupe_rows(signs)
        self.signs = signs[keep]
        self.rowinfo = [self.rowinfo[k] for k in keep]

    def hyperplane(self, row):
        info = self.rowinfo[row]
        if info is None:
            return Hyperplane.at_infinity(3)
        pivot, (alpha, beta), s = info
        # member normal (alpha, beta) acts on (qa, qb) = projection - pivot
        normal = (alpha, beta)
        base = [dot(normal, sub(p, pivot)) for p in self.proj]
        offset = Fraction(dot(normal, pivot))
        if s != 0:
            eps = _tip_step(base, [1]*len(base))
            offset -= s*eps
        h = Hyperplane((normal[0], normal[1], 0), offset / self.den)
        return self._check(row, h)

def build_pencil(flat, xs):
    """Pencil of candidate hyperplanes through `flat` over `xs`."""

    if isinstance(flat, VerticalInfinity):
        d = flat.d
        if xs:
            dataset_dimension(xs, d)
        free = flat.independent
        if free == 0:
            return InfinityPencil(d, xs)
        if free == 1:
            return ParallelPencil(d, xs)
        return VerticalPlanePencil(xs)
    if not isinstance(flat, AffineFlat):
        raise UnsupportedCaseError("Error! unknown flat type {0}".format(type(flat).__name__))
    d = flat.d
    if xs:
        dataset_dimension(xs, d)
    if flat.k == d - 1:
        return SinglePencil(flat.hyperplane(), xs)
    if flat.k == d - 2:
        return RotationPencil.for_flat(flat, xs)
    if d == 3 and flat.k == 0:
        return PointPencil3D(flat.anchor, xs)
    raise UnsupportedCaseError("Error! no pencil for a {0}-flat in {1}D".format(flat.k, d))

def pencil_candidates(flat, xs):
    """Finite list of hyperplanes containing `flat` that covers every
    combinatorial position of such a hyperplane relative to xs (empty
    for an empty dataset)."""

    if len(xs) == 0:
        return []
    return build_pencil(flat, xs).hyperplanes()
