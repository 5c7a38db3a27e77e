import math
import warnings

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_hausdorff, delta
from ghsimplex import errors
from ghsimplex.metric import (
    diameter,
    hausdorff_distance,
    scale_space,
    space_from_points,
    validate_space,
)


def test_two_point_space():
    sp = validate_space([[0, 1], [1, 0]])
    assert sp.n == 2
    assert sp.diam == 1
    assert sp.diametral_pairs == ((0, 1),)


@pytest.mark.parametrize(
    "raw, exc, where",
    [
        ([[0, 1], [2, 0]], errors.AsymmetricEntry, (0, 1)),
        ([[0, 1, 3], [1, 0, 1], [3, 1, 0]], errors.TriangleViolation, (0, 1, 2)),
        ([[1, 1], [1, 0]], errors.NonzeroDiagonal, (0,)),
        ([[0, -1], [-1, 0]], errors.NegativeEntry, (0, 1)),
        ([[0, 0], [0, 0]], errors.ZeroOffDiagonal, (0, 1)),
    ],
)
def test_validation_errors(raw, exc, where):
    with pytest.raises(exc) as info:
        validate_space(raw)
    got = tuple(getattr(info.value, k) for k in "ijk"[: len(where)])
    assert got == where


@pytest.mark.parametrize("raw", [[], [[0, 1]], [[0, 1], [1]], [[[0]]]])
def test_non_square(raw):
    with pytest.raises(errors.NonSquare):
        validate_space(raw)


def test_non_finite():
    with pytest.raises(errors.NonFiniteEntry):
        validate_space([[0, math.inf], [math.inf, 0]])


def test_semimetric_allowed_with_warning():
    raw = [[0, 1, 3], [1, 0, 1], [3, 1, 0]]
    with pytest.warns(UserWarning):
        sp = validate_space(raw, check_triangle=False)
    assert sp.semimetric and sp.diam == 3


def test_tolerance_relaxes_equalities():
    raw = [[0, 1.0, 2.0], [1.0 + 1e-12, 0, 1.0], [2.0, 1.0, 0]]
    with pytest.raises(errors.AsymmetricEntry):
        validate_space(raw)
    sp = validate_space(raw, tol=1e-9)
    assert sp.d(0, 1) == sp.d(1, 0)
    noisy = validate_space([[0, 2, 1.9999999], [2, 0, 1], [1.9999999, 1, 0]], tol=1e-6)
    assert noisy.diametral_pairs == ((0, 1), (0, 2))


def test_diameter_examples(point1, line3):
    assert diameter(point1) == (0.0, ())
    value, pairs = diameter(delta(3))
    assert value == 1 and set(pairs) == {(0, 1), (0, 2), (1, 2)}
    assert diameter(line3) == (2.0, ((0, 2),))


def test_hausdorff_examples(line3):
    assert hausdorff_distance(line3, [0, 1, 2], [0, 1, 2]) == 0
    assert hausdorff_distance(line3, [0], [2]) == 2
    assert hausdorff_distance(line3, [0, 2], [1]) == 1


def test_hausdorff_rejects_empty(line3):
    with pytest.raises(errors.EmptySubset):
        hausdorff_distance(line3, [], [1])
    with pytest.raises(errors.IndexOutOfRange):
        hausdorff_distance(line3, [5], [1])


def test_points_examples():
    sp = space_from_points([[0], [3]], "l2")
    assert sp.dist.tolist() == [[0, 3], [3, 0]]
    sq = space_from_points([[0, 0], [1, 0], [1, 1], [0, 1]], "l2")
    assert sq.diam == math.sqrt(2)
    assert sq.diametral_pairs == ((0, 2), (1, 3))
    l1 = space_from_points([[0, 0], [1, 0], [0, 1]], "l1")
    assert l1.d(1, 2) == 2
    linf = space_from_points([[0, 0], [1, 3]], "linf")
    assert linf.d(0, 1) == 3


def test_points_errors():
    with pytest.raises(errors.DimensionMismatch):
        space_from_points([[0, 0], [1]], "l2")
    with pytest.raises(errors.EmptyPointSet):
        space_from_points([], "l2")


def test_collinear_points_pass_triangle_check():
    sp = space_from_points([[0.0], [0.1], [0.3]], "l2")
    assert sp.n == 3


def test_scale_examples(line3):
    d3 = scale_space(delta(3), 2)
    off = d3.dist[~np.eye(3, dtype=bool)]
    assert (off == 2).all()
    assert np.array_equal(scale_space(line3, 1).dist, line3.dist)
    half = scale_space(line3, 0.5)
    assert half.diam == 1 and half.diametral_pairs == ((0, 2),)
    with pytest.raises(errors.NonpositiveScale):
        scale_space(line3, 0)


def test_space_is_immutable(line3):
    with pytest.raises(ValueError):
        line3.dist[0, 1] = 5


coords = st.lists(
    st.tuples(st.integers(-50, 50), st.integers(-50, 50)), min_size=1, max_size=9, unique=True
)


@settings(max_examples=60, deadline=None)
@given(coords, st.sampled_from(["l1", "l2", "linf"]), st.floats(0.01, 100))
def test_scaling_properties(pts, norm, c):
    sp = space_from_points([list(p) for p in pts], norm)
    scaled = scale_space(sp, c)
    assert scaled.diam == c * sp.diam
    assert scaled.diametral_pairs == sp.diametral_pairs
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        # no triangle failure beyond rounding of a single multiplication
        validate_space(scaled.dist, triangle_rtol=1e-12)


@settings(max_examples=60, deadline=None)
@given(coords, st.data())
def test_hausdorff_properties(pts, data):
    sp = space_from_points([list(p) for p in pts], "l2")
    idx = st.lists(st.integers(0, sp.n - 1), min_size=1, max_size=sp.n, unique=True)
    a, b = data.draw(idx), data.draw(idx)
    h = hausdorff_distance(sp, a, b)
    assert h == hausdorff_distance(sp, b, a)
    assert hausdorff_distance(sp, a, a) == 0
    assert h == brute_hausdorff(sp.dist.tolist(), a, b)
    if len(a) == len(b) == 1:
        assert h == sp.d(a[0], b[0])
