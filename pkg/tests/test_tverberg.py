from fractions import Fraction

import pytest

from regdepth.exceptions import InputError
from regdepth.geometry.flats import AffineFlat
from regdepth.geometry.hull import convex_hull_2d, hull_contains
from regdepth.depth.engine import tukey_depth
from regdepth.tverberg import (tverberg_partition_2d, catline_tverberg_partition,
                               verify_flat_tverberg)
from regdepth.datagen import GeneratorSpec, generate

from conftest import random_distinct_x

def _check_partition(result, xs):
    point = result.flat.anchor
    assert sorted(i for part in result.parts.parts for i in part) == list(range(len(xs)))
    for part in result.parts.parts:
        assert hull_contains(convex_hull_2d([xs[i] for i in part]), point)
    assert tukey_depth(point, xs).depth >= len(result.parts)

def test_circle_of_twelve(circle12):
    result = tverberg_partition_2d(circle12)
    assert len(result.parts) == result.target == 4
    assert result.valid
    _check_partition(result, circle12)

@pytest.mark.parametrize("n", [3, 4, 5, 9, 10, 11, 16, 20])
def test_planar_partition_sizes(n):
    xs = generate(GeneratorSpec('uniform-box', n, d=2, seed=n, general_position=True))
    result = tverberg_partition_2d(xs, seed=n)
    assert len(result.parts) == -(-n // 3)
    assert result.valid
    _check_partition(result, xs)

def test_partition_needs_three_points():
    with pytest.raises(InputError):
        tverberg_partition_2d([(0, 0), (1, 1)])

def test_result_dict():
    xs = generate(GeneratorSpec('uniform-box', 7, d=2, seed=1, general_position=True))
    out = tverberg_partition_2d(xs).to_dict()
    assert out['part_count'] == out['target'] == 3
    assert out['valid'] is True
    assert out['flat']['k'] == 0

def test_verify_flat_tverberg(square):
    centre = AffineFlat((Fraction(1, 2), Fraction(1, 2)))
    assert verify_flat_tverberg(centre, 0, [[0, 3], [1, 2]], square) == [1, 1]
    assert verify_flat_tverberg(centre, 0, [[0, 1], [2, 3]], square) == [0, 0]

def test_verify_flat_tverberg_rejects_overlap(square):
    with pytest.raises(InputError):
        verify_flat_tverberg(AffineFlat((0, 0)), 0, [[0, 1], [1, 2]], square)

@pytest.mark.parametrize("seed", range(6))
def test_catline_partition_parts_are_deep(seed):
    xs = random_distinct_x(seed, 9 + 4*seed, 2)
    result = catline_tverberg_partition(xs)
    assert result.k == 1 and result.valid
    assert all(v >= 1 for v in verify_flat_tverberg(result.flat, 1, result.parts, xs))
    assert sorted(i for part in result.parts.parts for i in part) == list(range(len(xs)))

def test_collinear_points_give_segments():
    xs = [(Fraction(i), Fraction(2*i)) for i in range(6)]
    result = tverberg_partition_2d(xs)
    assert len(result.parts) == 2
    _check_partition(result, xs)
