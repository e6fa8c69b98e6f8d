"""Exact crossing distance and regression depth.

crossing_distance(F, G) is the minimum number of data points in a
closed double wedge bounded by a hyperplane through F and a hyperplane
through G. Both candidate families come from geometry.pencil; each
family is complete on its own (every sign pattern a member can realize
is dominated by a candidate), so minimizing over the product of the two
candidate lists and the two pairings gives the exact value.

Counting is done with numpy: for sign rows s1 (first family) and s2
(second family) the '+' pairing holds the points with s1*s2 >= 0 and
the '-' pairing those with s1*s2 <= 0, so both counts follow from
products of the +1/-1 indicator matrices."""

import logging

import numpy as np

from regdepth import config
from regdepth.exceptions import UnsupportedCaseError, DimensionError, InputError, VerificationError
from regdepth.geometry.scalar import dataset_dimension, make_point, make_points
from regdepth.geometry.hyperplane import DoubleWedge, PAIRINGS
from regdepth.geometry.flats import AffineFlat, VerticalInfinity
from regdepth.geometry.pencil import build_pencil
from regdepth.depth.certificate import DepthCertificate

def pairing_counts(A, B):
    """Closed double wedge counts for every (row of A, row of B).

    Returns an int64 array of shape (rows_A, rows_B, 2); the last axis
    is the pairing, '+' first."""

    n = A.shape[1]
    Ap = (A == 1).astype(np.float64)
    Am = (A == -1).astype(np.float64)
    Bp = (B == 1).astype(np.float64)
    Bm = (B == -1).astype(np.float64)
    opposite = Ap @ Bm.T + Am @ Bp.T
    same = Ap @ Bp.T + Am @ Bm.T
    out = np.empty((A.shape[0], B.shape[0], 2), dtype=np.int64)
    out[:, :, 0] = n - np.rint(opposite).astype(np.int64)
    out[:, :, 1] = n - np.rint(same).astype(np.int64)
    return out

def row_minima(A, B, chunk=None):
    """For every row of A, the minimum count over rows of B and both
    pairings, with the first (row of B, pairing) attaining it."""

    chunk = chunk or config.CHUNK_ROWS
    values = np.empty(A.shape[0], dtype=np.int64)
    where = np.empty(A.shape[0], dtype=np.int64)
    for start in range(0, A.shape[0], chunk):
        block = pairing_counts(A[start:start + chunk], B)
        flat = block.reshape(block.shape[0], -1)
        arg = np.argmin(flat, axis=1)
        values[start:start + chunk] = flat[np.arange(flat.shape[0]), arg]
        where[start:start + chunk] = arg
    return values, where

def minimize(A, B, chunk=None):
    """(value, row of A, row of B, pairing) of the first minimizer in
    row-major order, pairing '+' before '-'."""

    chunk = chunk or config.CHUNK_ROWS
    best = None
    for start in range(0, A.shape[0], chunk):
        block = pairing_counts(A[start:start + chunk], B)
        arg = int(np.argmin(block))
        i, j, t = np.unravel_index(arg, block.shape)
        value = int(block[i, j, t])
        if best is None or value < best[0]:
            best = (value, start + int(i), int(j), PAIRINGS[int(t)])
        if best[0] == 0:
            break
    return best

def vertical_split_minima(A, xs, chunk=None):
    """Per row of A, the minimum closed double wedge count against the
    vertical lines x = c and the line at infinity; the same values as
    row_minima(A, ParallelPencil(d, xs).signs), from prefix sums over
    the points sorted by x."""

    chunk = chunk or config.CHUNK_ROWS
    xs = list(xs)
    if not xs:
        return np.zeros(A.shape[0], dtype=np.int64)
    order = sorted(range(len(xs)), key=lambda i: (xs[i][0], i))
    values = [xs[i][0] for i in order]
    ends = [r for r in range(len(values)) if r == len(values) - 1 or values[r] != values[r + 1]]
    ends = np.array(ends, dtype=np.int64)
    starts = np.concatenate([[0], ends[:-1] + 1])
    sizes = ends - starts + 1
    out = np.empty(A.shape[0], dtype=np.int64)
    for start in range(0, A.shape[0], chunk):
        S = A[start:start + chunk][:, order]
        ge = np.cumsum(S >= 0, axis=1)
        le = np.cumsum(S <= 0, axis=1)
        tot_ge = ge[:, -1:]
        tot_le = le[:, -1:]
        ge_end, le_end = ge[:, ends], le[:, ends]
        zero = np.zeros((S.shape[0], 1), dtype=ge.dtype)
        ge_before = np.hstack([zero, ge_end[:, :-1]])
        le_before = np.hstack([zero, le_end[:, :-1]])
        # cut through a group: its points lie on the cut
        on_plus = le_before + sizes + (tot_ge - ge_end)
        on_minus = ge_before + sizes + (tot_le - le_end)
        # cut just right of a group (the last one stands for infinity)
        off_plus = le_end + (tot_ge - ge_end)
        off_minus = ge_end + (tot_le - le_end)
        best = np.minimum(np.minimum(on_plus, on_minus), np.minimum(off_plus, off_minus)).min(axis=1)
        inf = np.minimum(tot_ge[:, 0], tot_le[:, 0])
        out[start:start + chunk] = np.minimum(best, inf)
    return out

def _check_supported(f, g, d):
    if f.d != g.d:
        raise DimensionError("Error! flats live in different dimensions ({0} and {1})".format(f.d, g.d))
    if d not in (2, 3):
        raise DimensionError("Error! only dimensions 2 and 3 are supported, got {0}".format(d))
    if f.is_at_infinity and g.is_at_infinity:
        raise UnsupportedCaseError("Error! crossing distance between two flats at vertical infinity is not supported")

def wedge_count(wedge, xs):
    """(count, indices) of the points of xs in the closed double wedge."""

    return wedge.count(xs)

def crossing_distance(f, g, xs):
    """Minimum number of points of xs in a closed double wedge with one
    boundary through f and the other through g."""

    xs = make_points(xs)
    d = f.d
    _check_supported(f, g, d)
    if xs:
        dataset_dimension(xs, d)

    pf = build_pencil(f, xs)
    pg = build_pencil(g, xs)
    if pf.dimension == 2 and pg.dimension == 2:
        raise UnsupportedCaseError("Error! crossing distance between two two-dimensional pencils ({0!r}, {1!r}) is not supported".format(f, g))

    value, i, j, pairing = minimize(pf.signs, pg.signs)
    witness = DoubleWedge(pf.hyperplane(i), pg.hyperplane(j), pairing)
    count, idxs = witness.count(xs)
    if count != value:
        raise VerificationError("Error! witness recount {0} differs from the minimized count {1}".format(count, value))
    logging.info("crossing distance {0} over {1}x{2} candidates".format(value, pf.size, pg.size))
    return DepthCertificate(value, witness, idxs)

def regression_depth(f, k, xs):
    """Crossing distance of the affine k-flat f from the flat at
    vertical infinity. Vertical flats have depth 0 and no witness."""

    if not isinstance(f, AffineFlat):
        raise InputError("Error! regression depth is defined for affine flats")
    if k != f.k:
        raise InputError("Error! k={0} is inconsistent with a flat spanned by {1} vectors".format(k, f.k))
    if not 0 <= k <= f.d - 1:
        raise InputError("Error! k must be in 0..{0}".format(f.d - 1))
    xs = make_points(xs)
    if xs:
        dataset_dimension(xs, f.d)
    if f.is_vertical():
        return DepthCertificate(0, None, [])
    return crossing_distance(f, VerticalInfinity.for_regression(f.d, k), xs)

def tukey_depth(p, xs):
    """Minimum number of points in a closed halfspace whose boundary
    passes through p."""

    return regression_depth(AffineFlat(make_point(p)), 0, xs)

def flat_halfspace_depth(f, subset):
    """Minimum number of points of subset in a closed halfspace
    containing f (the boundary may be taken through f)."""

    if len(subset) == 0:
        return 0
    return crossing_distance(f, VerticalInfinity(f.d - 1, f.d), subset).depth
