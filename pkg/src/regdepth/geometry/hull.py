"""Exact planar convex hulls (monotone chain)."""

from regdepth.geometry.scalar import make_point, cross2, sub

def _turn(o, a, b):
    return cross2(sub(a, o), sub(b, o))

def convex_hull_2d(points):
    """Hull vertices in counterclockwise order, collinear points dropped.
    Degenerate inputs give one vertex (all points equal) or the two
    segment endpoints (all points collinear)."""

    pts = sorted(set(make_point(p) for p in points))
    if len(pts) <= 2:
        return pts
    lower = []
    for p in pts:
        while len(lower) >= 2 and _turn(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and _turn(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull

def hull_contains(hull, p):
    """Closed containment of p in the hull returned by convex_hull_2d."""

    p = make_point(p)
    if len(hull) == 0:
        return False
    if len(hull) == 1:
        return hull[0] == p
    if len(hull) == 2:
        a, b = hull
        if _turn(a, b, p) != 0:
            return False
        return min(a, b) <= p <= max(a, b)
    for i in range(len(hull)):
        if _turn(hull[i], hull[(i + 1) % len(hull)], p) < 0:
            return False
    return True

def closed_hull_contains(points, p):
    return hull_contains(convex_hull_2d(points), p)
