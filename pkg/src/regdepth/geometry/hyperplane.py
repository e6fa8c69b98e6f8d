"""Oriented hyperplanes and closed double wedges.

A Hyperplane is the set {p : normal.p = offset}; its positive side is
{p : normal.p >= offset}. The projective hyperplane at infinity is
stored with a zero normal and offset -1, so every affine point lies
strictly on its positive side and negating it flips that."""

from fractions import Fraction

from regdepth.exceptions import DimensionError, InputError
from regdepth.geometry.scalar import (parse_scalar, sign, dot, sub, cross,
                                      is_zero, primitive, rational_text)

PAIRINGS = ('+', '-')

class Hyperplane(object):

    def __init__(self, normal, offset):
        self.normal = tuple(parse_scalar(a) for a in normal)
        self.offset = parse_scalar(offset)
        if len(self.normal) not in (2, 3):
            raise DimensionError("Error! hyperplane normal must have 2 or 3 components")
        if is_zero(self.normal) and self.offset == 0:
            raise InputError("Error! hyperplane normal must be nonzero")

    @classmethod
    def at_infinity(cls, d):
        return cls((0,)*d, -1)

    @classmethod
    def through(cls, points):
        """Hyperplane through d affinely independent points (2 in the
        plane, 3 in space). Orientation follows the point order."""

        d = len(points[0])
        if len(points) != d:
            raise DimensionError("Error! need {0} points to span a hyperplane in {0}D".format(d))
        if d == 2:
            v = sub(points[1], points[0])
            normal = (-v[1], v[0])
        else:
            normal = cross(sub(points[1], points[0]), sub(points[2], points[0]))
        if is_zero(normal):
            raise InputError("Error! points do not span a hyperplane (affinely dependent)")
        return cls(normal, dot(normal, points[0]))

    @property
    def dimension(self):
        return len(self.normal)

    @property
    def is_at_infinity(self):
        return is_zero(self.normal)

    def value(self, p):
        return dot(self.normal, p) - self.offset

    def orient(self, p):
        if len(p) != len(self.normal):
            raise DimensionError("Error! point of dimension {0} against hyperplane of dimension {1}".format(len(p), len(self.normal)))
        return sign(self.value(p))

    def negated(self):
        return Hyperplane(tuple(-a for a in self.normal), -self.offset)

    def key(self):
        """Canonical integer form; equal keys mean the same oriented
        hyperplane."""

        return primitive(self.normal + (self.offset,))

    def primitive(self):
        """Same oriented hyperplane with an integer normal and offset of gcd 1."""

        values = self.key()
        return Hyperplane(values[:-1], values[-1])

    def contains_point(self, p):
        return self.orient(p) == 0

    def contains_flat(self, f):
        """True when the affine flat f lies in the hyperplane."""

        if f.d != self.dimension:
            raise DimensionError("Error! flat of dimension {0} against hyperplane of dimension {1}".format(f.d, self.dimension))
        if not self.contains_point(f.anchor):
            return False
        return all(dot(self.normal, v) == 0 for v in f.span)

    def is_vertical(self, k):
        """True when the normal has no dependent component, i.e. the
        hyperplane contains every vertical direction (k independent
        coordinates first)."""

        return all(a == 0 for a in self.normal[k:])

    def __eq__(self, other):
        return isinstance(other, Hyperplane) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        if self.is_at_infinity:
            return 'Hyperplane(at infinity, {0})'.format('+' if self.offset < 0 else '-')
        return 'Hyperplane({0};{1})'.format(','.join(rational_text(a) for a in self.normal),
                                            rational_text(self.offset))

    def to_dict(self):
        return {'normal': [rational_text(a) for a in self.normal],
                'offset': rational_text(self.offset),
                'at_infinity': self.is_at_infinity}

def orient(h, p):
    """Sign of normal.p - offset: +1, 0 or -1, exact."""

    return h.orient(p)

def pairing_contains(s1, s2, pairing):
    """Closed membership from the two orientation signs."""

    if pairing == '+':
        return s1*s2 >= 0
    return s1*s2 <= 0

class DoubleWedge(object):
    """Closed region between two hyperplanes.

    pairing '+' selects (h1+ & h2+) | (h1- & h2-), pairing '-' selects
    (h1+ & h2-) | (h1- & h2+). Points on either boundary belong to
    both pairings. When h2 is the hyperplane at infinity the wedge is the
    closed halfspace h1+ (pairing '+') or h1- (pairing '-')."""

    def __init__(self, h1, h2, pairing):
        if pairing not in PAIRINGS:
            raise InputError("Error! pairing must be '+' or '-', got {0!r}".format(pairing))
        if h1.dimension != h2.dimension:
            raise DimensionError("Error! double wedge boundaries of different dimension")
        self.h1 = h1
        self.h2 = h2
        self.pairing = pairing

    def contains(self, p):
        return pairing_contains(self.h1.orient(p), self.h2.orient(p), self.pairing)

    def count(self, xs):
        """(number of points inside, their indices)"""

        idxs = [i for i, p in enumerate(xs) if self.contains(p)]
        return len(idxs), idxs

    def to_dict(self):
        return {'h1': self.h1.to_dict(),
                'h2': self.h2.to_dict(),
                'pairing': self.pairing}

    def __repr__(self):
        return 'DoubleWedge({0!r}, {1!r}, {2})'.format(self.h1, self.h2, self.pairing)
