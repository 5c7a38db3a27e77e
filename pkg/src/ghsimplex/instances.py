"""Seeded random test spaces.

Two families: uniform points in the unit square under the Euclidean norm,
and ultrametrics read off random merge hierarchies (every pair is at the
height of the merge that first joins them, heights increasing).
Ultrametrics have many tied distances, which exercises tie-breaking.
"""

from __future__ import annotations

import numpy as np

from .metric import ValidatedSpace, space_from_points, validate_space


def random_square_space(rng: np.random.Generator, n: int) -> ValidatedSpace:
    return space_from_points(rng.random((n, 2)).tolist(), "l2")


def random_ultrametric(rng: np.random.Generator, n: int) -> ValidatedSpace:
    """Ultrametric from a random agglomerative hierarchy.

    Merge heights are non-decreasing integers that often repeat, so many
    distances tie.
    """
    clusters = [[i] for i in range(n)]
    dist = np.zeros((n, n))
    height = 0
    while len(clusters) > 1:
        height = max(1, height + int(rng.integers(0, 2)))
        a, b = sorted(rng.choice(len(clusters), size=2, replace=False).tolist())
        for i in clusters[a]:
            for j in clusters[b]:
                dist[i, j] = dist[j, i] = height
        clusters[a] = clusters[a] + clusters[b]
        del clusters[b]
    return validate_space(dist)


def instance_set(seed: int, count: int, n_max: int = 8, n_min: int = 1) -> list[tuple[str, ValidatedSpace]]:
    """``count`` labelled spaces alternating between the two families."""
    rng = np.random.default_rng(seed)
    out = []
    for k in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        if k % 2 == 0:
            out.append((f"square-{k}-n{n}", random_square_space(rng, n)))
        else:
            out.append((f"ultra-{k}-n{n}", random_ultrametric(rng, n)))
    return out
