"""Point/hyperplane duality.

In the plane the point (a, b) maps to the line y = a*x - b and back;
in space (a, b, c) maps to the plane z = a*x + b*y - c. Dual hyperplanes
are oriented with the region above them positive. Incidence and
above/below relations are preserved: p lies on or above D(q) exactly
when q lies on or above D(p)."""

from regdepth.exceptions import UnsupportedCaseError, DimensionError
from regdepth.geometry.scalar import make_point
from regdepth.geometry.hyperplane import Hyperplane

def dualize_2d(p):
    p = make_point(p)
    if len(p) != 2:
        raise DimensionError("Error! dualize_2d needs a planar point")
    a, b = p
    # y - a*x >= -b is the closed region above y = a*x - b
    return Hyperplane((-a, 1), -b)

def dualize_2d_line(h):
    if h.dimension != 2:
        raise DimensionError("Error! dualize_2d_line needs a planar line")
    n0, n1 = h.normal
    if n1 == 0:
        raise UnsupportedCaseError("Error! vertical line {0!r} has no affine dual point (dual lies at infinity)".format(h))
    return (-n0 / n1, -h.offset / n1)

def dualize_3d(p):
    p = make_point(p)
    if len(p) != 3:
        raise DimensionError("Error! dualize_3d needs a point in space")
    a, b, c = p
    return Hyperplane((-a, -b, 1), -c)

def dualize_3d_plane(h):
    if h.dimension != 3:
        raise DimensionError("Error! dualize_3d_plane needs a plane in space")
    n0, n1, n2 = h.normal
    if n2 == 0:
        raise UnsupportedCaseError("Error! vertical plane {0!r} has no affine dual point (dual lies at infinity)".format(h))
    return (-n0 / n2, -n1 / n2, -h.offset / n2)
