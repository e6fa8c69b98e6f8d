from regdepth.geometry.scalar import parse_scalar, make_point, make_points
from regdepth.geometry.hyperplane import Hyperplane, DoubleWedge, orient
from regdepth.geometry.flats import Flat, AffineFlat, VerticalInfinity
from regdepth.geometry.duality import dualize_2d, dualize_2d_line, dualize_3d, dualize_3d_plane
from regdepth.geometry.pencil import build_pencil, pencil_candidates
from regdepth.geometry.hull import convex_hull_2d, hull_contains
