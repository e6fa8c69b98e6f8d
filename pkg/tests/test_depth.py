from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from regdepth.exceptions import InputError, DimensionError, UnsupportedCaseError
from regdepth.geometry.flats import AffineFlat, VerticalInfinity
from regdepth.geometry.pencil import build_pencil, pencil_candidates, normal_basis
from regdepth.depth.engine import (regression_depth, tukey_depth, crossing_distance,
                                   flat_halfspace_depth, row_minima, vertical_split_minima,
                                   wedge_count)
from regdepth.depth.certificate import DepthCertificate
from regdepth.depth.audit import certify_not_deeper

import oracle
from conftest import coords, points, random_points, random_distinct_x

small = st.integers(min_value=-4, max_value=4).map(Fraction)

def test_cube_x_axis_has_depth_two(cube):
    # the two vertices on the axis lie on every wedge boundary
    cert = regression_depth(AffineFlat.parse("0,0,0;1,0,0"), 1, cube)
    assert cert.depth == 2
    cert.verify(cube)
    assert cert.depth == oracle.line_depth_3d((0, 0, 0), (1, 0, 0), cube)

def test_vertical_flats_have_depth_zero(square, cube):
    cert = regression_depth(AffineFlat((0, 0), [(0, 1)]), 1, square)
    assert cert.depth == 0 and cert.witness is None
    assert cert.contained_indices == []
    assert regression_depth(AffineFlat((0, 0, 0), [(0, 0, 1)]), 1, cube).depth == 0
    assert regression_depth(AffineFlat((0, 0, 0), [(1, 0, 0), (0, 0, 1)]), 2, cube).depth == 0

def test_k_must_match_flat(square):
    with pytest.raises(InputError):
        regression_depth(AffineFlat((0, 0), [(1, 0)]), 0, square)

def test_mixed_dimensions_rejected(square):
    with pytest.raises(DimensionError):
        regression_depth(AffineFlat((0, 0, 0), [(1, 0, 0)]), 1, square)

def test_two_infinity_flats_unsupported(square):
    with pytest.raises(UnsupportedCaseError):
        crossing_distance(VerticalInfinity(0, 2), VerticalInfinity(1, 2), square)

def test_certificate_witness_recount(square):
    line = AffineFlat((0, Fraction(1, 2)), [(1, 0)])
    cert = regression_depth(line, 1, square)
    assert cert.depth == 2
    assert cert.witness.count(square) == (cert.depth, cert.contained_indices)
    assert wedge_count(cert.witness, square) == (cert.depth, cert.contained_indices)
    assert cert.verify(square)

def test_tukey_depth_of_square_center(square):
    assert tukey_depth((Fraction(1, 2), Fraction(1, 2)), square).depth == 2
    assert tukey_depth((5, 5), square).depth == 0
    assert tukey_depth((0, 0), square).depth == 1

@given(points(2, min_size=1, max_size=8), small, small)
@settings(max_examples=80, deadline=None)
def test_planar_line_depth_matches_oracle(xs, slope, intercept):
    line = AffineFlat((0, intercept), [(1, slope)])
    assert regression_depth(line, 1, xs).depth == oracle.line_depth_2d(slope, intercept, xs)

@given(points(2, min_size=1, max_size=8), st.tuples(small, small))
@settings(max_examples=80, deadline=None)
def test_planar_tukey_depth_matches_oracle(xs, p):
    assert tukey_depth(p, xs).depth == oracle.tukey_depth_2d(p, xs)

@given(points(3, min_size=1, max_size=6), st.tuples(small, small, small))
@settings(max_examples=50, deadline=None)
def test_spatial_tukey_depth_matches_oracle(xs, p):
    assert tukey_depth(p, xs).depth == oracle.tukey_depth_3d(p, xs)

@given(points(3, min_size=1, max_size=6), st.tuples(small, small, small),
       st.tuples(st.integers(1, 3), st.integers(-3, 3), st.integers(-3, 3)))
@settings(max_examples=50, deadline=None)
def test_spatial_line_depth_matches_oracle(xs, anchor, direction):
    line = AffineFlat(anchor, [direction])
    assert regression_depth(line, 1, xs).depth == oracle.line_depth_3d(anchor, direction, xs)

@given(points(3, min_size=1, max_size=6), small, small, small)
@settings(max_examples=50, deadline=None)
def test_plane_depth_matches_oracle(xs, a, b, c):
    plane = AffineFlat((0, 0, c), [(1, 0, a), (0, 1, b)])
    assert regression_depth(plane, 2, xs).depth == oracle.plane_depth_3d(a, b, c, xs)

@given(points(2, min_size=2, max_size=8), small, small)
@settings(max_examples=50, deadline=None)
def test_deleting_a_point_lowers_depth_by_at_most_one(xs, slope, intercept):
    line = AffineFlat((0, intercept), [(1, slope)])
    full = regression_depth(line, 1, xs).depth
    for i in range(len(xs)):
        rest = regression_depth(line, 1, xs[:i] + xs[i + 1:]).depth
        assert full - 1 <= rest <= full

@given(points(2, min_size=1, max_size=8), st.tuples(small, small), st.tuples(small, small))
@settings(max_examples=50, deadline=None)
def test_crossing_distance_is_symmetric(xs, p, q):
    f, g = AffineFlat(p), AffineFlat(q)
    assert crossing_distance(f, g, xs).depth == crossing_distance(g, f, xs).depth

@given(points(2, min_size=1, max_size=8), small, small, st.tuples(small, small))
@settings(max_examples=50, deadline=None)
def test_depth_invariant_under_translation(xs, slope, intercept, t):
    line = AffineFlat((0, intercept), [(1, slope)])
    moved = AffineFlat((t[0], intercept + t[1]), [(1, slope)])
    shifted = [(p[0] + t[0], p[1] + t[1]) for p in xs]
    assert regression_depth(line, 1, xs).depth == regression_depth(moved, 1, shifted).depth

nonzero = small.filter(lambda v: v != 0)

@given(points(2, min_size=1, max_size=8), small, small,
       st.tuples(nonzero, small, small, nonzero, small))
@settings(max_examples=80, deadline=None)
def test_depth_invariant_under_affine_maps(xs, slope, intercept, m):
    # x' = a x + b, y' = c x + d y + e keeps verticals vertical
    a, b, c, d, e = m
    line = AffineFlat((0, intercept), [(1, slope)])
    mapped = AffineFlat((b, d*intercept + e), [(a, c + d*slope)])
    moved = [(a*x + b, c*x + d*y + e) for x, y in xs]
    assert regression_depth(line, 1, xs).depth == regression_depth(mapped, 1, moved).depth

def test_reflections_keep_depth(square):
    line = AffineFlat((0, Fraction(1, 3)), [(2, 1)])
    depth = regression_depth(line, 1, square).depth
    mirrored_x = [(-x, y) for x, y in square]
    mirrored_y = [(x, -y) for x, y in square]
    assert regression_depth(AffineFlat((0, Fraction(1, 3)), [(-2, 1)]), 1, mirrored_x).depth == depth
    assert regression_depth(AffineFlat((0, Fraction(-1, 3)), [(2, -1)]), 1, mirrored_y).depth == depth

def test_depth_never_exceeds_n():
    xs = random_points(3, 12, 2, scale=20)
    for p in xs:
        assert tukey_depth(p, xs).depth <= len(xs)

def test_flat_halfspace_depth_of_line(square):
    # every closed halfplane bounded through the diagonal holds 3 corners
    diagonal = AffineFlat((0, 0), [(1, 1)])
    assert flat_halfspace_depth(diagonal, square) == 3

@given(st.integers(min_value=0, max_value=2**16))
@settings(max_examples=30, deadline=None)
def test_vertical_split_minima_matches_row_minima(seed):
    rng = np.random.default_rng(seed)
    xs = [(Fraction(int(x)), Fraction(0)) for x in rng.integers(0, 5, size=7)]
    A = rng.integers(-1, 2, size=(9, 7)).astype(np.int8)
    B = build_pencil(VerticalInfinity.for_regression(2, 1), xs).signs
    assert list(vertical_split_minima(A, xs)) == list(row_minima(A, B)[0])

def test_pencil_candidates_empty_dataset():
    assert pencil_candidates(AffineFlat((0, 0)), []) == []

def test_audit_accepts_exact_certificate():
    xs = random_points(11, 15, 2, scale=50)
    line = AffineFlat.through([xs[0], xs[1]]) if xs[0][0] != xs[1][0] else AffineFlat(xs[0], [(1, 0)])
    cert = regression_depth(line, 1, xs)
    assert certify_not_deeper(cert, line, 1, xs, trials=2000, seed=0)

def test_audit_rejects_inflated_certificate():
    xs = random_points(11, 15, 2, scale=50)
    line = AffineFlat.through([xs[0], xs[1]]) if xs[0][0] != xs[1][0] else AffineFlat(xs[0], [(1, 0)])
    cert = regression_depth(line, 1, xs)
    extra = min(set(range(len(xs))) - set(cert.contained_indices))
    inflated = DepthCertificate(cert.depth + 1, cert.witness, cert.contained_indices + [extra])
    assert not certify_not_deeper(inflated, line, 1, xs, trials=2000, seed=0)

@pytest.mark.parametrize("seed", range(6))
def test_audit_rejects_inflated_spatial_line(seed):
    xs = random_distinct_x(seed, 20, 3)
    line = AffineFlat.through([xs[0], xs[1]])
    cert = regression_depth(line, 1, xs)
    assert certify_not_deeper(cert, line, 1, xs, trials=500, seed=seed)
    extra = min(set(range(len(xs))) - set(cert.contained_indices))
    inflated = DepthCertificate(cert.depth + 1, cert.witness, cert.contained_indices + [extra])
    assert not certify_not_deeper(inflated, line, 1, xs, trials=500, seed=seed)
    assert not certify_not_deeper(inflated, line, 1, xs, trials=1, seed=seed)

def test_audit_without_trials(square):
    line = AffineFlat((0, Fraction(1, 2)), [(1, 0)])
    cert = regression_depth(line, 1, square)
    inflated = DepthCertificate(cert.depth + 1, cert.witness, cert.contained_indices + [3])
    assert certify_not_deeper(cert, line, 1, square, trials=0, seed=0)
    assert certify_not_deeper(inflated, line, 1, square, trials=0, seed=0)
    with pytest.raises(InputError):
        certify_not_deeper(cert, line, 1, square, trials=-1, seed=0)

def test_audit_of_vertical_flat(square):
    line = AffineFlat((0, 0), [(0, 1)])
    cert = regression_depth(line, 1, square)
    assert certify_not_deeper(cert, line, 1, square, trials=10, seed=0)

BIG = 10**6
PENCIL_KINDS = ['point-2d', 'line-3d', 'point-3d', 'vertical-2d', 'vertical-line-3d', 'vertical-plane-3d']

def _pencil_flat(kind, xs, rng):
    d = len(xs[0])
    anchor = xs[0] if rng.random() < 0.5 else tuple(int(a) for a in rng.integers(-4, 5, size=d))
    anchor = tuple(int(a) for a in anchor)
    if kind in ('point-2d', 'point-3d'):
        return AffineFlat(anchor)
    if kind == 'line-3d':
        direction = (int(rng.integers(1, 4)),) + tuple(int(a) for a in rng.integers(-3, 4, size=2))
        return AffineFlat(anchor, [direction])
    return VerticalInfinity.for_regression(d, {'vertical-2d': 1, 'vertical-line-3d': 1,
                                               'vertical-plane-3d': 2}[kind])

def _random_members(kind, flat, P, rng, count):
    """Integer (normals, offsets) of random hyperplanes containing flat."""

    d = P.shape[1]
    if kind in ('point-2d', 'point-3d', 'line-3d'):
        if kind == 'line-3d':
            u, w = normal_basis(tuple(int(a) for a in flat.span[0]))
            ab = rng.integers(-BIG, BIG + 1, size=(count, 2))
            normals = ab[:, :1]*np.array(u, dtype=np.int64) + ab[:, 1:]*np.array(w, dtype=np.int64)
        else:
            normals = rng.integers(-BIG, BIG + 1, size=(count, d))
        return normals, normals.dot(np.array([int(a) for a in flat.anchor], dtype=np.int64))
    if kind == 'vertical-plane-3d':
        normals = np.zeros((count, 3), dtype=np.int64)
        normals[:, :2] = rng.integers(-BIG, BIG + 1, size=(count, 2))
        through = P[rng.integers(len(P), size=count)]
        return normals, (normals*through).sum(axis=1) + rng.integers(-5*BIG, 5*BIG, size=count)
    normals = np.zeros((count, d), dtype=np.int64)
    normals[:, 0] = 1
    return normals, rng.integers(-6, 7, size=count)

@pytest.mark.parametrize("kind", PENCIL_KINDS)
@pytest.mark.parametrize("seed", range(4))
def test_pencil_covers_random_members(kind, seed):
    # small coordinates give repeated points and collinear triples
    rng = np.random.default_rng(seed)
    d = 2 if kind.endswith('2d') else 3
    xs = random_points(seed, 3 + (seed*7) % 18, d, scale=4)
    flat = _pencil_flat(kind, xs, rng)
    P = np.array([[int(a) for a in p] for p in xs], dtype=np.int64)
    rows = set(tuple(h.orient(p) for p in xs) for h in pencil_candidates(flat, xs))
    normals, offsets = _random_members(kind, flat, P, rng, 10**4)
    sampled = np.unique(np.sign(normals.dot(P.T) - offsets.reshape(-1, 1)), axis=0)
    for s in sampled.tolist():
        assert tuple(s) in rows or tuple(-v for v in s) in rows
