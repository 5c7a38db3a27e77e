import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import all_set_partitions, blocks_objective, delta, rgs_of
from ghsimplex import errors
from ghsimplex.instances import instance_set
from ghsimplex.metric import scale_space
from ghsimplex.partition import (
    Partition,
    enumerate_partitions,
    objective,
    partition_diameter,
    separation_alpha,
    stirling2,
)

# Bell numbers B(0..8) via the Bell triangle, independent of stirling2.
def _bell_triangle(k):
    row, out = [1], [1]
    for _ in range(k):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
        out.append(row[0])
    return out


BELL = _bell_triangle(8)


def test_partition_canonical_form():
    assert Partition.from_labels([5, 5, 2, 5, 7]).rgs == (0, 0, 1, 0, 2)
    assert Partition.from_blocks([[2], [0, 1]]).rgs == (0, 0, 1)
    assert Partition((0, 0, 1)).blocks() == [[0, 1], [2]]
    with pytest.raises(ValueError):
        Partition((0, 2, 1))
    with pytest.raises(ValueError):
        Partition((1, 0))


def test_enumeration_small_cases():
    assert [p.rgs for p in enumerate_partitions(3, 3)] == [(0, 1, 2)]
    assert [p.rgs for p in enumerate_partitions(3, 1)] == [(0, 0, 0)]
    assert len(list(enumerate_partitions(4, 2))) == 7
    assert [p.rgs for p in enumerate_partitions(1, 1)] == [(0,)]


@pytest.mark.parametrize("n, m", [(0, 1), (3, 0), (3, 4)])
def test_enumeration_bad_counts(n, m):
    with pytest.raises(errors.BadBlockCount):
        enumerate_partitions(n, m)


@pytest.mark.parametrize("n", range(1, 9))
def test_enumeration_against_oracles(n):
    total = 0
    for m in range(1, n + 1):
        parts = [p.rgs for p in enumerate_partitions(n, m)]
        assert parts == sorted(parts), "lexicographic order"
        assert len(set(parts)) == len(parts)
        assert all(max(r) + 1 == m for r in parts)
        assert len(parts) == stirling2(n, m)
        total += len(parts)
    assert total == BELL[n]
    if n <= 6:
        expected = {rgs_of(b, n) for b in all_set_partitions(list(range(n)))}
        got = {p.rgs for m in range(1, n + 1) for p in enumerate_partitions(n, m)}
        assert got == expected


def test_enumeration_is_lazy():
    it = enumerate_partitions(30, 5)
    assert next(it).rgs[:6] == (0, 0, 0, 0, 0, 0)


def test_block_quantities_examples(line3):
    singletons = Partition((0, 1, 2))
    one = Partition((0, 0, 0))
    split = Partition((0, 0, 1))
    assert partition_diameter(line3, singletons) == 0
    assert partition_diameter(line3, one) == 2
    assert partition_diameter(line3, split) == 1
    assert separation_alpha(line3, one) == math.inf
    assert separation_alpha(delta(3), singletons) == 1
    assert separation_alpha(line3, split) == 1


def test_objective_examples(line3):
    assert objective(line3, Partition((0, 0, 1)), 1.0) == 1
    assert objective(line3, Partition((0, 1, 0)), 1.0) == 2
    assert objective(line3, Partition((0, 0, 0)), 1.0) == 2


def test_objective_errors(line3):
    with pytest.raises(errors.NonpositiveLambda):
        objective(line3, Partition((0, 0, 1)), 0.0)
    with pytest.raises(errors.SizeMismatch):
        objective(line3, Partition((0, 1)), 1.0)


SPACES = instance_set(seed=11, count=40, n_max=6)


@pytest.mark.parametrize("name, space", SPACES, ids=[s[0] for s in SPACES])
def test_block_invariants(name, space):
    dist = space.dist.tolist()
    for m in range(1, space.n + 1):
        for part in enumerate_partitions(space.n, m):
            pd = partition_diameter(space, part)
            al = separation_alpha(space, part)
            assert pd <= space.diam
            if m > 1:
                assert al >= space.min_positive
            for lam in (0.3, 1.0, 2.5):
                val = objective(space, part, lam)
                assert val == blocks_objective(dist, part.blocks(), lam, space.diam)
                assert val >= max(0.0, space.diam - lam)
                for c in (0.5, 2.0, 4.0):
                    assert objective(scale_space(space, c), part, c * lam) == c * val


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 7), st.data())
def test_from_labels_roundtrip(n, data):
    labels = data.draw(st.lists(st.integers(0, 4), min_size=n, max_size=n))
    part = Partition.from_labels(labels)
    assert Partition.from_blocks(part.blocks()) == part
    assert part in set(enumerate_partitions(n, part.m))
