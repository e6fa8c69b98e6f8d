"""Affine k-flats and the flat at vertical infinity.

Flats are written as text "anchor;span;span..." where each part is a
comma separated list of rationals or decimals, e.g. "0,0,0;1,0,0" for
the x-axis in 3D."""

from fractions import Fraction

from regdepth.exceptions import InputError, DimensionError
from regdepth.geometry.scalar import (make_point, parse_scalar, rank, sub, dot,
                                      cross, is_zero, rational_text, decimal_text)
from regdepth.geometry.hyperplane import Hyperplane

class Flat(object):
    """Base class for the two flat variants."""

    is_at_infinity = False

class AffineFlat(Flat):

    def __init__(self, anchor, span=()):
        self.anchor = make_point(anchor)
        self.span = tuple(tuple(parse_scalar(a) for a in v) for v in span)
        d = len(self.anchor)
        for v in self.span:
            if len(v) != d:
                raise DimensionError("Error! span vector {0} does not match anchor dimension {1}".format(v, d))
        if len(self.span) > d - 1:
            raise InputError("Error! a flat in {0}D has at most {1} span vectors".format(d, d - 1))
        if rank(self.span) != len(self.span):
            raise InputError("Error! span vectors of a flat must be linearly independent")

    @classmethod
    def through(cls, points):
        """Flat spanned by the given points (must be affinely independent)."""

        points = [make_point(p) for p in points]
        anchor = points[0]
        span = [sub(p, anchor) for p in points[1:]]
        return cls(anchor, span)

    @classmethod
    def from_hyperplane(cls, h):
        """The (d-1)-flat of an affine hyperplane. Solved for the last
        coordinate whenever possible, so a non-vertical hyperplane gets
        the span (e_j - (n_j/n_d) e_d)."""

        if h.is_at_infinity:
            raise InputError("Error! the hyperplane at infinity has no affine flat")
        d = h.dimension
        i = max(j for j in range(d) if h.normal[j] != 0)
        anchor = [Fraction(0)]*d
        anchor[i] = h.offset / h.normal[i]
        span = []
        for j in range(d):
            if j == i:
                continue
            v = [Fraction(0)]*d
            v[j] = Fraction(1)
            v[i] = -h.normal[j] / h.normal[i]
            span.append(tuple(v))
        return cls(anchor, span)

    @classmethod
    def parse(cls, text):
        parts = [s for s in text.split(';')]
        if len(parts) == 0 or parts[0].strip() == '':
            raise InputError("Error! flat text must start with an anchor point, got {0!r}".format(text))
        vectors = []
        for part in parts:
            vectors.append(tuple(parse_scalar(c) for c in part.split(',')))
        return cls(vectors[0], vectors[1:])

    @property
    def d(self):
        return len(self.anchor)

    @property
    def k(self):
        return len(self.span)

    def is_vertical(self):
        """True when the projection onto the k independent coordinates
        is not full-dimensional."""

        k = self.k
        if k == 0:
            return False
        return rank([v[:k] for v in self.span]) < k

    def contains(self, p):
        p = make_point(p)
        if len(p) != self.d:
            raise DimensionError("Error! point dimension {0} does not match flat dimension {1}".format(len(p), self.d))
        return rank(list(self.span) + [sub(p, self.anchor)]) == self.k

    def hyperplane(self):
        """The unique hyperplane containing a (d-1)-flat."""

        if self.k != self.d - 1:
            raise InputError("Error! only a {0}-flat in {1}D has a unique containing hyperplane".format(self.d - 1, self.d))
        if self.d == 2:
            v = self.span[0]
            normal = (-v[1], v[0])
        else:
            normal = cross(self.span[0], self.span[1])
        return Hyperplane(normal, dot(normal, self.anchor))

    def point_at(self, params):
        p = list(self.anchor)
        for t, v in zip(params, self.span):
            p = [a + Fraction(t)*b for a, b in zip(p, v)]
        return tuple(p)

    def to_text(self):
        parts = [','.join(rational_text(a) for a in self.anchor)]
        parts += [','.join(rational_text(a) for a in v) for v in self.span]
        return ';'.join(parts)

    def to_dict(self):
        return {'kind': 'affine',
                'k': self.k,
                'anchor': [rational_text(a) for a in self.anchor],
                'span': [[rational_text(a) for a in v] for v in self.span],
                'anchor_decimal': [decimal_text(a) for a in self.anchor],
                'span_decimal': [[decimal_text(a) for a in v] for v in self.span],
                'text': self.to_text()}

    def __eq__(self, other):
        if not isinstance(other, AffineFlat) or other.d != self.d or other.k != self.k:
            return False
        if not other.contains(self.anchor):
            return False
        return rank(list(self.span) + list(other.span)) == self.k

    def __hash__(self):
        return hash((self.d, self.k))

    def __repr__(self):
        return 'AffineFlat({0})'.format(self.to_text())

class VerticalInfinity(Flat):
    """The j-flat at vertical infinity in ambient dimension d: the
    directions at infinity with zero independent component. With k
    independent coordinates it is used with j = d - k - 1."""

    is_at_infinity = True

    def __init__(self, j, d):
        if d not in (2, 3):
            raise DimensionError("Error! ambient dimension must be 2 or 3, got {0}".format(d))
        if not 0 <= j <= d - 1:
            raise InputError("Error! vertical infinity flat dimension must be in 0..{0}, got {1}".format(d - 1, j))
        self.j = j
        self._d = d

    @classmethod
    def for_regression(cls, d, k):
        return cls(d - k - 1, d)

    @property
    def d(self):
        return self._d

    @property
    def k(self):
        return self.j

    @property
    def independent(self):
        """Number of independent coordinates this flat is vertical for."""

        return self._d - self.j - 1

    def to_dict(self):
        return {'kind': 'vertical-infinity', 'j': self.j, 'd': self._d}

    def __eq__(self, other):
        return isinstance(other, VerticalInfinity) and other.j == self.j and other.d == self.d

    def __hash__(self):
        return hash(('vinf', self.j, self._d))

    def __repr__(self):
        return 'VerticalInfinity(j={0}, d={1})'.format(self.j, self._d)
