"""Exact scalars and small vector helpers.

All coordinates are fractions.Fraction. Hot loops work on integer
copies of the data obtained by multiplying every coordinate by the
least common multiple of the denominators, which preserves every sign
the exact predicates look at."""

from fractions import Fraction
from math import gcd

import numpy as np

from regdepth.exceptions import InputError, DimensionError

SUPPORTED_DIMENSIONS = (2, 3)

# int64 products stay exact below this magnitude
INT64_SAFE = 2**62

def parse_scalar(value):
    """Parse a decimal string ("-1.25", "3e-2"), a rational ("7/3"),
    an int or a Fraction into an exact Fraction."""

    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, float):
        if value != value or value in (float('inf'), float('-inf')):
            raise InputError("Error! non-finite coordinate {0!r}".format(value))
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError):
            raise InputError("Error! cannot parse {0!r} as an exact rational".format(value))
    raise InputError("Error! unsupported scalar type {0}".format(type(value).__name__))

def make_point(coords):
    """Tuple of Fractions; independent coordinates come first."""

    point = tuple(parse_scalar(c) for c in coords)
    if len(point) not in SUPPORTED_DIMENSIONS:
        raise DimensionError("Error! points must have 2 or 3 coordinates, got {0}".format(len(point)))
    return point

def make_points(rows):
    return [make_point(r) for r in rows]

def dataset_dimension(xs, d=None):
    """Common dimension of a dataset (d when xs is empty)."""

    dims = set(len(p) for p in xs)
    if d is not None:
        dims.add(d)
    if len(dims) > 1:
        raise DimensionError("Error! mixed point dimensions {0}".format(sorted(dims)))
    if len(dims) == 0:
        raise DimensionError("Error! dimension of an empty dataset is undetermined")
    dim = dims.pop()
    if dim not in SUPPORTED_DIMENSIONS:
        raise DimensionError("Error! only dimensions 2 and 3 are supported, got {0}".format(dim))
    return dim

def sign(x):
    return (x > 0) - (x < 0)

def dot(u, v):
    return sum(a*b for a, b in zip(u, v))

def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))

def add(u, v):
    return tuple(a + b for a, b in zip(u, v))

def scale(c, u):
    return tuple(c*a for a in u)

def cross(u, v):
    return (u[1]*v[2] - u[2]*v[1],
            u[2]*v[0] - u[0]*v[2],
            u[0]*v[1] - u[1]*v[0])

def cross2(u, v):
    return u[0]*v[1] - u[1]*v[0]

def is_zero(u):
    return all(a == 0 for a in u)

def rank(vectors):
    """Exact rank by fraction-valued Gaussian elimination."""

    rows = [[Fraction(a) for a in v] for v in vectors]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, len(rows)):
            f = rows[i][col] / rows[r][col]
            if f != 0:
                rows[i] = [a - f*b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r

def lcm(a, b):
    return a // gcd(a, b) * b

def common_denominator(*collections):
    """LCM of the denominators of every coordinate in the given
    collections of points/vectors."""

    den = 1
    for coll in collections:
        for v in coll:
            for a in v:
                den = lcm(den, Fraction(a).denominator)
    return den

def to_integers(vectors, den):
    return [tuple(int(Fraction(a) * den) for a in v) for v in vectors]

def primitive(vector):
    """Integer vector parallel to `vector` with gcd 1, same direction."""

    den = common_denominator([vector])
    ints = [int(Fraction(a) * den) for a in vector]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return tuple(ints)
    return tuple(a // g for a in ints)

def int_array(rows, degree=1):
    """numpy array of Python ints, int64 when every product of
    `degree` + 1 entries (plus sums) stays exact, object dtype otherwise."""

    rows = list(rows)
    big = 0
    for r in rows:
        for a in r:
            big = max(big, abs(int(a)))
    width = len(rows[0]) if rows else 0
    bound = (big + 1)**(degree + 1) * max(width, 1) * 4
    if bound < INT64_SAFE:
        return np.array(rows, dtype=np.int64).reshape(len(rows), width)
    arr = np.empty((len(rows), width), dtype=object)
    for i, r in enumerate(rows):
        for j, a in enumerate(r):
            arr[i, j] = int(a)
    return arr

def decimal_text(x, digits=12):
    """Short decimal rendering of an exact value (for reports only)."""

    return format(float(x), '.{0}g'.format(digits))

def rational_text(x):
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return '{0}/{1}'.format(x.numerator, x.denominator)
