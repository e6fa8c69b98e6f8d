"""SVG figures of planar datasets and the structures built on them.

Every drawn element carries a gid, so the SVG can be checked
structurally: points are "point-i", flats "flat-...", wedge halves
"wedge-0"/"wedge-1", sector lines "sector-line-j", sectors "sector-k"
and partition hulls "part-j". Output is byte-stable: no date metadata
and a fixed hash salt for element ids."""

import io
from math import hypot

import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt
from matplotlib.patches import Polygon

from regdepth import config
from regdepth.exceptions import InputError, UnsupportedCaseError
from regdepth.geometry.scalar import make_points
from regdepth.geometry.hull import convex_hull_2d
from regdepth.depth.engine import regression_depth
from regdepth.constructions.catline import catline, catline_partition
from regdepth.constructions.sixsector import six_sector_partition
from regdepth.search.deepest import deepest_line_2d
from regdepth.tverberg import tverberg_partition_2d

OVERLAYS = ('none', 'catline', 'sixsector', 'deepest', 'tverberg')

COLORS = ['#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd', '#8c564b',
          '#e377c2', '#17becf', '#bcbd22', '#7f7f7f']

PAD = 0.1

def _bounds(pts):
    if not pts:
        return (-1.0, 1.0, -1.0, 1.0)
    xs = [p[0] for p in pts]
    ys = [p[1] for p in pts]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    w = max(x1 - x0, y1 - y0, 1e-9)
    cx, cy = (x0 + x1)/2, (y0 + y1)/2
    half = w*(0.5 + PAD)
    return (cx - half, cx + half, cy - half, cy + half)

def _clip(poly, a, b, c, s):
    """Part of a convex polygon with s*(a x + b y - c) >= 0."""

    out = []
    n = len(poly)
    for i in range(n):
        p, q = poly[i], poly[(i + 1) % n]
        fp = s*(a*p[0] + b*p[1] - c)
        fq = s*(a*q[0] + b*q[1] - c)
        if fp >= 0:
            out.append(p)
        if (fp >= 0) != (fq >= 0):
            t = fp/(fp - fq)
            out.append((p[0] + t*(q[0] - p[0]), p[1] + t*(q[1] - p[1])))
    return out

def _float_line(h):
    return float(h.normal[0]), float(h.normal[1]), float(h.offset)

class Figure(object):
    """A square matplotlib figure fitted to a planar point set."""

    def __init__(self, points, title=None):
        self.points = [(float(p[0]), float(p[1])) for p in points]
        self.box = _bounds(self.points)
        inches = config.SVG_SIZE / 72.0
        self.fig = plt.figure(figsize=(inches, inches))
        self.ax = self.fig.add_subplot(111)
        x0, x1, y0, y1 = self.box
        self.ax.set_xlim(x0, x1)
        self.ax.set_ylim(y0, y1)
        self.ax.set_aspect('equal')
        self.ax.set_xlabel('x')
        self.ax.set_ylabel('y')
        if title:
            self.ax.set_title(title)

    def rectangle(self):
        x0, x1, y0, y1 = self.box
        return [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]

    def add_points(self, colors=None):
        for i, p in enumerate(self.points):
            color = 'k' if colors is None else COLORS[colors[i] % len(COLORS)]
            (marker,) = self.ax.plot([p[0]], [p[1]], 'o', color=color, markersize=5, zorder=3)
            marker.set_gid('point-{0}'.format(i))

    def add_line(self, h, gid, color='k', style='-'):
        a, b, c = _float_line(h)
        if a == 0 and b == 0:
            return
        x0, x1, y0, y1 = self.box
        if b != 0:
            xx = [x0, x1]
            yy = [(c - a*x0)/b, (c - a*x1)/b]
        else:
            xx = [c/a, c/a]
            yy = [y0, y1]
        (line,) = self.ax.plot(xx, yy, style, color=color, linewidth=1.5, zorder=2)
        line.set_gid(gid)

    def add_wedge(self, wedge, color='#ff7f0e'):
        """Shade the closed double wedge (two convex halves)."""

        a1, b1, c1 = _float_line(wedge.h1)
        a2, b2, c2 = _float_line(wedge.h2)
        s2 = 1 if wedge.pairing == '+' else -1
        for j, s in enumerate((1, -1)):
            poly = _clip(self.rectangle(), a1, b1, c1, s)
            if a2 == 0 and b2 == 0:
                # boundary at infinity: orientation is the sign of -offset
                if s*s2*(-c2) < 0:
                    poly = []
            elif poly:
                poly = _clip(poly, a2, b2, c2, s*s2)
            if len(poly) >= 3:
                patch = Polygon(poly, closed=True, facecolor=color, alpha=0.25, edgecolor='none', zorder=1)
                patch.set_gid('wedge-{0}'.format(j))
                self.ax.add_patch(patch)
        for j, h in enumerate((wedge.h1, wedge.h2)):
            self.add_line(h, 'wedge-line-{0}'.format(j), color=color, style='--')

    def add_sectors(self, witness):
        c = (float(witness.center[0]), float(witness.center[1]))
        x0, x1, y0, y1 = self.box
        R = 4*hypot(x1 - x0, y1 - y0)
        rays = []
        for r in witness.rays:
            norm = hypot(float(r[0]), float(r[1]))
            rays.append((float(r[0])/norm, float(r[1])/norm))
        for k in range(6):
            u, v = rays[k], rays[(k + 1) % 6]
            mid = (u[0] + v[0], u[1] + v[1])
            m = hypot(*mid) or 1.0
            poly = [c, (c[0] + R*u[0], c[1] + R*u[1]),
                    (c[0] + 2*R*mid[0]/m, c[1] + 2*R*mid[1]/m),
                    (c[0] + R*v[0], c[1] + R*v[1])]
            patch = Polygon(poly, closed=True, facecolor=COLORS[k], alpha=0.15, edgecolor='none', zorder=0)
            patch.set_gid('sector-{0}'.format(k))
            self.ax.add_patch(patch)
        for j, h in enumerate(witness.lines):
            self.add_line(h, 'sector-line-{0}'.format(j))

    def add_parts(self, parts, xs):
        for j, part in enumerate(parts):
            hull = convex_hull_2d([xs[i] for i in part])
            poly = [(float(p[0]), float(p[1])) for p in hull]
            if len(poly) == 1:
                poly = poly*2
            patch = Polygon(poly, closed=True, facecolor='none',
                            edgecolor=COLORS[j % len(COLORS)], linewidth=1.0, zorder=1)
            patch.set_gid('part-{0}'.format(j))
            self.ax.add_patch(patch)

    def add_marker(self, p, gid):
        (m,) = self.ax.plot([float(p[0])], [float(p[1])], 'x', color='k', markersize=10, zorder=4)
        m.set_gid(gid)

    def annotate(self, text):
        self.ax.text(0.02, 0.98, text, transform=self.ax.transAxes, va='top', fontsize=9)

    def to_svg(self):
        buf = io.StringIO()
        with matplotlib.rc_context({'svg.hashsalt': 'regdepth', 'svg.fonttype': 'none'}):
            self.fig.savefig(buf, format='svg', metadata={'Date': None})
        plt.close(self.fig)
        return buf.getvalue()

def _colors(parts, n):
    out = [0]*n
    for j, part in enumerate(parts):
        for i in part:
            out[i] = j
    return out

def render_svg(xs, overlay='none', seed=0, title=None):
    """SVG text of the dataset with one overlay drawn on it.

    3D datasets are drawn as their projection onto the independent
    coordinates (x, y), without overlays."""

    if overlay not in OVERLAYS:
        raise InputError("Error! unknown overlay {0!r}, expected one of {1}".format(overlay, ', '.join(OVERLAYS)))
    xs = make_points(xs)
    d = len(xs[0]) if xs else 2
    if d == 3 and overlay != 'none':
        raise UnsupportedCaseError("Error! overlays are drawn for planar datasets only")
    fig = Figure([p[:2] for p in xs], title=title)
    try:
        if d == 3:
            fig.annotate('projection onto the independent coordinates (x, y)')
            fig.add_points()
        elif overlay == 'none':
            fig.add_points()
        elif overlay in ('catline', 'deepest'):
            if overlay == 'catline':
                line = catline(xs)
                fig.add_points(_colors(catline_partition(xs).parts, len(xs)))
            else:
                line, _ = deepest_line_2d(xs)
                fig.add_points()
            cert = regression_depth(line, 1, xs)
            if cert.witness is not None:
                fig.add_wedge(cert.witness)
            fig.add_line(line.hyperplane(), 'flat-{0}'.format(overlay))
            fig.annotate('depth {0}'.format(cert.depth))
        elif overlay == 'sixsector':
            witness = six_sector_partition(xs)
            fig.add_sectors(witness)
            fig.add_points(witness.sector_assignment)
        else:
            result = tverberg_partition_2d(xs, seed=seed)
            fig.add_parts(result.parts.parts, xs)
            fig.add_points(_colors(result.parts.parts, len(xs)))
            fig.add_marker(result.flat.anchor, 'tverberg-point')
    except Exception:
        plt.close(fig.fig)
        raise
    return fig.to_svg()
