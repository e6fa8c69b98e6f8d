"""The catline: a planar regression line of depth >= ceil(n/3).

Points are ordered by (x, index) and split into a left block and a
right block of t = floor((n+1)/3) points each, with the rest in the
middle. The catline is a ham sandwich cut of left+middle and
middle+right."""

import logging

from regdepth.exceptions import VerificationError, InputError
from regdepth.geometry.scalar import make_points, dataset_dimension
from regdepth.geometry.flats import AffineFlat
from regdepth.depth.engine import regression_depth
from regdepth.constructions.partition import PartitionFamily, order_by_x
from regdepth.constructions.hamsandwich import ham_sandwich_2d

def catline_target(n):
    return -(-n // 3)

def catline_partition(xs):
    """Left, middle and right blocks (kind vertical-thirds)."""

    xs = make_points(xs)
    n = len(xs)
    t = (n + 1) // 3
    order = order_by_x(xs)
    return PartitionFamily([order[:t], order[t:n - t], order[n - t:]], 'vertical-thirds', n=n)

def catline(xs, verify=True):
    """Non-vertical line of regression depth >= ceil(n/3)."""

    xs = make_points(xs)
    if not xs:
        raise InputError("Error! catline of an empty dataset")
    dataset_dimension(xs, 2)
    family = catline_partition(xs)
    s1 = [xs[i] for i in family.union(0, 1)]
    s2 = [xs[i] for i in family.union(1, 2)]
    h = ham_sandwich_2d(s1, s2, nonvertical=True)
    if h.normal[1] == 0:
        raise VerificationError("Error! catline cut is vertical (points share an x-coordinate)")
    line = AffineFlat.from_hyperplane(h)
    if verify:
        target = catline_target(len(xs))
        cert = regression_depth(line, 1, xs)
        if cert.depth < target:
            raise VerificationError("Error! catline depth {0} below {1}".format(cert.depth, target))
        logging.info("catline of {0} points has depth {1}".format(len(xs), cert.depth))
    return line
