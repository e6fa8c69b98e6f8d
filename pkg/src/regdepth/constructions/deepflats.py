"""Deep lines and planes in space.

Both constructions project the data onto the independent coordinates,
split the projection into groups, and pass a flat through points that
are deep for every group: centerpoints for lines, a ham sandwich plane
of a nontransversal triple for planes. Every result is checked with the
exact depth engine before it is returned."""

import logging

from regdepth.exceptions import InputError, VerificationError
from regdepth.geometry.scalar import make_points, dataset_dimension
from regdepth.geometry.flats import AffineFlat
from regdepth.depth.engine import regression_depth
from regdepth.constructions.partition import PartitionFamily, order_by_x
from regdepth.constructions.centerpoint import centerpoint
from regdepth.constructions.hamsandwich import ham_sandwich_3d
from regdepth.constructions.sixsector import six_sector_partition

STRATEGIES = ('median', 'three-piece')

def _ceil_div(a, b):
    return -(-a // b)

def median_guarantee(n):
    return _ceil_div(n // 2, 4)

def three_piece_guarantee(s1, s2, middle):
    g1, g2 = _ceil_div(s1, 4), _ceil_div(s2, 4)
    return max(1, min(g1, g2, g1 + g2 - middle))

def plane_guarantee(n):
    return _ceil_div(n // 6, 2)

def median_split(xs):
    """Low and high halves of floor(n/2) points by (x, index)."""

    n = len(xs)
    order = order_by_x(xs)
    half = n // 2
    return PartitionFamily([order[:half], order[n - half:]], 'median-split', n=n)

def three_piece_split(xs):
    """Left ray, middle block and right ray; rays hold ceil(2n/5) points."""

    n = len(xs)
    t = _ceil_div(2*n, 5)
    order = order_by_x(xs)
    return PartitionFamily([order[:t], order[t:n - t], order[n - t:]], 'three-piece', n=n)

def _line_through(c1, c2):
    if c1 == c2 or c1[0] == c2[0]:
        # coincident centers: the line along x through the shared point
        return AffineFlat(c1, [(1, 0, 0)])
    return AffineFlat.through([c1, c2])

def _verified(flat, k, xs, guarantee, label):
    cert = regression_depth(flat, k, xs)
    if cert.depth < guarantee:
        raise VerificationError("Error! {0} gave depth {1}, below its guarantee {2}".format(label, cert.depth, guarantee))
    logging.info("{0}: depth {1} (guarantee {2})".format(label, cert.depth, guarantee))
    return flat, guarantee

def _median_line(xs, seed):
    n = len(xs)
    if n < 2:
        return AffineFlat(xs[0], [(1, 0, 0)]), 0
    family = median_split(xs)
    low, high = family.subsets(xs)
    c1 = centerpoint(low, seed=seed)
    c2 = centerpoint(high, seed=seed)
    return _line_through(c1, c2), median_guarantee(n)

def construct_deep_line_3d(xs, strategy='median', seed=0, verify=True):
    """(line, guarantee): a non-vertical line in space whose regression
    depth is at least guarantee.

    median: line through the centerpoints of the low and high halves,
    guarantee ceil(floor(n/2)/4).
    three-piece: line through the centerpoints of left+middle and
    middle+right, guarantee min(ceil(|S1|/4), ceil(|S2|/4),
    ceil(|S1|/4) + ceil(|S2|/4) - |middle|), at least 1."""

    xs = make_points(xs)
    if not xs:
        raise InputError("Error! deep line of an empty dataset")
    dataset_dimension(xs, 3)
    if strategy not in STRATEGIES:
        raise InputError("Error! unknown strategy {0!r}, expected one of {1}".format(strategy, STRATEGIES))

    if strategy == 'three-piece':
        if 2*_ceil_div(2*len(xs), 5) <= len(xs):
            family = three_piece_split(xs)
            s1 = [xs[i] for i in family.union(0, 1)]
            s2 = [xs[i] for i in family.union(1, 2)]
            c1 = centerpoint(s1, seed=seed)
            c2 = centerpoint(s2, seed=seed)
            if c1[0] != c2[0]:
                line = AffineFlat.through([c1, c2])
                guarantee = three_piece_guarantee(len(s1), len(s2), len(family.parts[1]))
                if not verify:
                    return line, guarantee
                return _verified(line, 1, xs, guarantee, 'three-piece line')
        logging.warning("three-piece split degenerate for {0} points, using the median split".format(len(xs)))

    line, guarantee = _median_line(xs, seed)
    if not verify:
        return line, guarantee
    return _verified(line, 1, xs, guarantee, 'median line')

def construct_deep_plane_3d(xs, seed=0, verify=True):
    """(plane, guarantee): project to (x, y), split the projection into
    six sectors by three concurrent lines, and cut the lifted alternating
    sectors with a ham sandwich plane. guarantee = ceil(floor(n/6)/2)."""

    xs = make_points(xs)
    if not xs:
        raise InputError("Error! deep plane of an empty dataset")
    dataset_dimension(xs, 3)
    n = len(xs)
    if n < 6:
        p = xs[0]
        return AffineFlat(p, [(1, 0, 0), (0, 1, 0)]), 0
    witness = six_sector_partition([p[:2] for p in xs])
    a, b, c = witness.triple_points(xs)
    h = ham_sandwich_3d(a, b, c, seed=seed, nonvertical=True)
    plane = AffineFlat.from_hyperplane(h)
    guarantee = plane_guarantee(n)
    if not verify:
        return plane, guarantee
    return _verified(plane, 2, xs, guarantee, 'six-sector plane')
