from fractions import Fraction

import pytest
from hypothesis import given, settings

from regdepth.exceptions import InputError, DimensionError, VerificationError, SearchBudgetExhausted
from regdepth.geometry.hyperplane import Hyperplane
from regdepth.depth.engine import regression_depth, tukey_depth
from regdepth.constructions.partition import PartitionFamily, order_by_x
from regdepth.constructions.centerpoint import centerpoint, centerpoint_target
from regdepth.constructions.hamsandwich import (ham_sandwich_2d, ham_sandwich_3d,
                                                ham_sandwich_check, is_ham_sandwich)
from regdepth.constructions.catline import catline, catline_partition, catline_target
from regdepth.constructions.sixsector import six_sector_partition, is_transversal_triple
from regdepth.constructions.deepflats import (construct_deep_line_3d, construct_deep_plane_3d,
                                              median_guarantee, three_piece_guarantee,
                                              plane_guarantee, median_split, three_piece_split)
from regdepth.datagen import GeneratorSpec, generate

from conftest import points, random_points, random_distinct_x

F = Fraction

def test_partition_family_checks():
    fam = PartitionFamily([[0, 2], [1]], 'tverberg', n=3)
    assert fam.sizes() == [2, 1]
    assert fam.balanced()
    assert fam.union(0, 1) == [0, 1, 2]
    assert len(fam) == 2
    with pytest.raises(VerificationError):
        PartitionFamily([[0, 1], [1]], 'tverberg', n=3)
    with pytest.raises(VerificationError):
        PartitionFamily([[0, 5]], 'tverberg', n=3)
    with pytest.raises(InputError):
        PartitionFamily([[0]], 'no-such-kind')

def test_order_by_x_breaks_ties_by_index():
    xs = [(F(2), F(0)), (F(1), F(5)), (F(2), F(-1)), (F(0), F(0))]
    assert order_by_x(xs) == [3, 1, 0, 2]

def test_centerpoint_target():
    assert centerpoint_target(10, 2) == 4
    assert centerpoint_target(9, 3) == 3

@pytest.mark.parametrize("seed,n", [(0, 5), (1, 12), (2, 25), (3, 40)])
def test_centerpoint_planar(seed, n):
    xs = random_points(seed, n, 2)
    c = centerpoint(xs, seed=seed)
    assert tukey_depth(c, xs).depth >= centerpoint_target(n, 2)

@pytest.mark.parametrize("seed,n", [(0, 4), (1, 9), (2, 16)])
def test_centerpoint_spatial(seed, n):
    xs = random_points(seed, n, 3)
    c = centerpoint(xs, seed=seed)
    assert tukey_depth(c, xs).depth >= centerpoint_target(n, 3)

def test_centerpoint_of_repeated_point():
    xs = [(F(1), F(1))]*5
    assert tukey_depth(centerpoint(xs), xs).depth == 5

def test_centerpoint_empty():
    with pytest.raises(InputError):
        centerpoint([])

@given(points(2, min_size=1, max_size=7), points(2, min_size=1, max_size=7))
@settings(max_examples=60, deadline=None)
def test_ham_sandwich_2d_halves_both_sets(a, b):
    h = ham_sandwich_2d(a, b)
    assert is_ham_sandwich(h, [a, b])

def test_ham_sandwich_2d_nonvertical():
    a = [(F(0), F(0)), (F(1), F(3)), (F(2), F(1))]
    b = [(F(5), F(5)), (F(6), F(0)), (F(7), F(2)), (F(8), F(9))]
    h = ham_sandwich_2d(a, b, nonvertical=True)
    assert h.normal[1] != 0
    for (below, above), s in zip(ham_sandwich_check(h, [a, b]), [a, b]):
        assert below <= len(s)//2 and above <= len(s)//2

@pytest.mark.parametrize("seed", range(4))
def test_ham_sandwich_3d(seed):
    a, b, c = (random_points(10*seed + j, 5 + j, 3, scale=30) for j in range(3))
    h = ham_sandwich_3d(a, b, c, seed=seed)
    assert is_ham_sandwich(h, [a, b, c])

def test_ham_sandwich_3d_nonvertical():
    a, b, c = (random_points(50 + j, 6, 3, scale=30) for j in range(3))
    h = ham_sandwich_3d(a, b, c, nonvertical=True)
    assert h.normal[2] != 0
    assert is_ham_sandwich(h, [a, b, c])

def test_catline_partition_blocks():
    xs = random_distinct_x(4, 10, 2)
    fam = catline_partition(xs)
    assert fam.kind == 'vertical-thirds'
    assert fam.sizes() == [3, 4, 3]
    left_max = max(xs[i][0] for i in fam.parts[0])
    middle_min = min(xs[i][0] for i in fam.parts[1])
    assert left_max < middle_min

@pytest.mark.parametrize("seed", range(12))
def test_catline_depth_guarantee(seed):
    n = 6 + (seed*11) % 50
    xs = random_distinct_x(seed, n, 2)
    line = catline(xs)
    assert not line.is_vertical()
    assert regression_depth(line, 1, xs).depth >= catline_target(n)

def test_catline_small_inputs():
    xs = [(F(0), F(0)), (F(1), F(1))]
    assert regression_depth(catline(xs), 1, xs).depth >= 1
    with pytest.raises(InputError):
        catline([])

def test_transversal_triple_found():
    s1 = [(F(0), F(1)), (F(0), F(-1))]
    s2 = [(F(5), F(1)), (F(5), F(-1))]
    s3 = [(F(10), F(1)), (F(10), F(-1))]
    cut, line = is_transversal_triple(s1, s2, s3)
    assert cut
    for s in (s1, s2, s3):
        signs = {line.orient(p) for p in s}
        assert signs == {1, -1}

def test_far_apart_short_segments_are_not_transversal():
    s1 = [(F(0), F(0)), (F(1, 10), F(0))]
    s2 = [(F(10), F(0)), (F(10), F(1, 10))]
    s3 = [(F(5), F(10)), (F(51, 10), F(10))]
    assert is_transversal_triple(s1, s2, s3) == (False, None)

def test_single_point_sets_are_not_transversal():
    assert is_transversal_triple([(0, 0)], [(1, 1), (2, 0)], [(3, 3), (4, 0)]) == (False, None)

def test_six_sector_circle_of_twelve(circle12):
    witness = six_sector_partition(circle12)
    assert witness.sizes() == [2]*6
    assert witness.verify(circle12)
    cut, _ = is_transversal_triple(*witness.triple_points(circle12))
    assert not cut
    assert all(h.contains_point(witness.center) for h in witness.lines)

def test_six_sector_needs_six_points():
    with pytest.raises(InputError):
        six_sector_partition([(0, 0), (1, 1)])

@pytest.mark.parametrize("seed", range(3))
def test_six_sector_random(seed):
    xs = generate(GeneratorSpec('uniform-box', 18 + 6*seed, d=2, seed=seed, general_position=True))
    witness = six_sector_partition(xs)
    sizes = witness.sizes()
    assert max(sizes) - min(sizes) <= 1
    assert witness.family().balanced()

def test_guarantee_arithmetic():
    assert median_guarantee(60) == 8
    assert median_guarantee(9) == 1
    assert three_piece_guarantee(12, 12, 4) == 2
    assert three_piece_guarantee(3, 3, 10) == 1
    assert plane_guarantee(12) == 1
    assert plane_guarantee(120) == 10

def test_three_piece_guarantee_is_at_least_one():
    for n in range(5, 301):
        left = -(-2*n // 5)
        if 2*left > n:
            continue
        middle = n - 2*left
        g = -(-(n - left) // 4)
        # the clamp never lifts the formula on a real split
        assert min(g, 2*g - middle) >= 1
        assert three_piece_guarantee(n - left, n - left, middle) == min(g, 2*g - middle)
    xs = random_distinct_x(3, 5, 3)
    line, guarantee = construct_deep_line_3d(xs, strategy='three-piece')
    assert guarantee == 1
    assert regression_depth(line, 1, xs).depth >= 1

def test_splits():
    xs = random_distinct_x(2, 11, 3)
    low, high = median_split(xs).parts
    assert len(low) == len(high) == 5
    assert max(xs[i][0] for i in low) < min(xs[i][0] for i in high)
    left, middle, right = three_piece_split(xs).parts
    assert len(left) == len(right) == 5 and len(middle) == 1

@pytest.mark.parametrize("seed,strategy", [(s, st) for s in range(4) for st in ('median', 'three-piece')])
def test_deep_line_guarantee(seed, strategy):
    n = 8 + 9*seed
    xs = random_distinct_x(seed, n, 3)
    line, guarantee = construct_deep_line_3d(xs, strategy=strategy, seed=seed)
    assert not line.is_vertical()
    assert regression_depth(line, 1, xs).depth >= guarantee
    if strategy == 'median':
        assert guarantee == median_guarantee(n)

def test_deep_line_rejects_planar_data():
    with pytest.raises(DimensionError):
        construct_deep_line_3d(random_points(0, 5, 2))

def test_deep_plane_small_input():
    xs = random_points(1, 4, 3)
    plane, guarantee = construct_deep_plane_3d(xs)
    assert guarantee == 0 and plane.k == 2

def test_deep_plane_guarantee():
    successes = 0
    for seed in range(5):
        xs = generate(GeneratorSpec('uniform-box', 12 + 6*seed, d=3, seed=seed, general_position=True))
        try:
            plane, guarantee = construct_deep_plane_3d(xs, seed=seed)
        except SearchBudgetExhausted as e:
            assert e.diagnostics
            continue
        successes += 1
        assert regression_depth(plane, 2, xs).depth >= guarantee == plane_guarantee(len(xs))
    assert successes >= 4
