import math

import numpy as np
import pytest

from ghsimplex.metric import simplex_space, space_from_points, validate_space


@pytest.fixture
def line3():
    return validate_space([[0, 1, 2], [1, 0, 1], [2, 1, 0]])


@pytest.fixture
def point1():
    return validate_space([[0]])


@pytest.fixture
def two_point():
    return validate_space([[0, 1], [1, 0]])


@pytest.fixture
def square():
    return space_from_points([[0, 0], [1, 0], [1, 1], [0, 1]], "l2")


def delta(n: int):
    return simplex_space(n, 1.0)


def brute_hausdorff(dist, a, b):
    """Directed sup-inf distances in plain Python."""
    ab = max(min(dist[i][j] for j in b) for i in a)
    ba = max(min(dist[i][j] for i in a) for j in b)
    return max(ab, ba)


def all_set_partitions(items):
    """Every set partition of ``items`` (recursive insertion, order-free)."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for smaller in all_set_partitions(rest):
        for k in range(len(smaller)):
            yield smaller[:k] + [[first] + smaller[k]] + smaller[k + 1 :]
        yield [[first]] + smaller


def blocks_objective(dist, blocks, lam, diam):
    """Objective straight from the three-term max, on explicit blocks."""
    bd = 0.0
    for b in blocks:
        for i in b:
            for j in b:
                bd = max(bd, dist[i][j])
    alpha = math.inf
    for x in range(len(blocks)):
        for y in range(len(blocks)):
            if x != y:
                for i in blocks[x]:
                    for j in blocks[y]:
                        alpha = min(alpha, dist[i][j])
    return max(bd, lam - alpha, diam - lam)


def rgs_of(blocks, n):
    labels = [0] * n
    for k, b in enumerate(blocks):
        for i in b:
            labels[i] = k
    remap = {}
    return tuple(remap.setdefault(x, len(remap)) for x in labels)
