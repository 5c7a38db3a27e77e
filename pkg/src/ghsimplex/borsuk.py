"""Partitioning a finite space into ``m`` parts of strictly smaller diameter.

Two independent deciders:

* :func:`borsuk_decision` colors the diameter graph.  A finite space has
  finitely many distances, so a block has strictly smaller diameter iff it
  contains no diametral pair, i.e. iff the partition properly colors the
  graph of diametral pairs.
* :func:`borsuk_via_gh` compares twice the Gromov-Hausdorff distance to a
  simplex of edge ``0 < lam < diam X`` against ``diam X``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .coloring import adjacency_from_edges, greedy_clique, lex_first_coloring
from .errors import BadBlockCount, LambdaOutOfRange, NonpositiveD
from .metric import ValidatedSpace
from .partition import Partition, partition_diameter
from .solver import SimplexSpec, Strategy, gh_to_simplex


@dataclass(frozen=True)
class DiameterGraph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def adjacency(self) -> list[int]:
        return adjacency_from_edges(self.n, self.edges)


@dataclass(frozen=True)
class BorsukAnswer:
    answer: bool
    witness: Partition | None = None
    epsilon_margin: float | None = None
    certificate: str | None = None


def diameter_graph(space: ValidatedSpace, tol: float | None = None) -> DiameterGraph:
    """Graph whose edges are the pairs at distance ``>= diam X - tol``.

    ``tol`` defaults to the tolerance the space was validated with.
    """
    if tol is None or tol == space.tol:
        return DiameterGraph(space.n, space.diametral_pairs)
    n = space.n
    edges = tuple(
        (i, j) for i in range(n) for j in range(i + 1, n) if space.dist[i, j] >= space.diam - tol
    )
    return DiameterGraph(n, edges)


def m_colorable(graph: DiameterGraph, m: int) -> list[int] | None:
    """Lexicographically smallest proper coloring with at most ``m`` colors, or None."""
    if m < 1:
        raise BadBlockCount(f"need m >= 1, got {m}")
    return lex_first_coloring(graph.adjacency(), m)


def _pad_to(labels: list[int], m: int) -> list[int]:
    """Split classes until exactly ``m`` labels are used.

    Moves the last member of the currently largest class (smallest label on
    ties) into a fresh class; this never increases any block diameter.
    """
    labels = list(labels)
    k = max(labels) + 1
    while k < m:
        sizes = [labels.count(c) for c in range(k)]
        big = max(range(k), key=lambda c: (sizes[c], -c))
        last = max(i for i, c in enumerate(labels) if c == big)
        labels[last] = k
        k += 1
    return labels


def borsuk_decision(space: ValidatedSpace, m: int) -> BorsukAnswer:
    if not 1 <= m <= space.n:
        raise BadBlockCount(f"block count must satisfy 1 <= m <= n={space.n}, got m={m}")
    if space.n == 1:
        return BorsukAnswer(False, certificate="single point: the only block has diameter 0 = diam X")
    graph = diameter_graph(space)
    adj = graph.adjacency()
    clique = greedy_clique(adj)
    if len(clique) > m:
        return BorsukAnswer(
            False,
            certificate=f"diameter graph contains a clique {clique} of size {len(clique)} > {m}",
        )
    colors = lex_first_coloring(adj, m)
    if colors is None:
        return BorsukAnswer(
            False,
            certificate=(
                f"diameter graph ({graph.n} vertices, {len(graph.edges)} edges) "
                f"is not {m}-colorable (exhaustive search)"
            ),
        )
    part = Partition.from_labels(_pad_to(colors, m))
    block_diam = partition_diameter(space, part)
    margin = space.diam - block_diam
    # keep diam - margin >= block_diam exact in floating point
    while space.diam - margin < block_diam:
        margin = math.nextafter(margin, 0.0)
    return BorsukAnswer(True, witness=part, epsilon_margin=margin)


def borsuk_via_gh(
    space: ValidatedSpace, m: int, lam: float, strategy: Strategy | str = Strategy.AUTO
) -> bool:
    """True iff ``2 d_GH(lam * simplex_m, X) < diam X`` (for any ``0 < lam < diam X``)."""
    if not 1 <= m <= space.n:
        raise BadBlockCount(f"block count must satisfy 1 <= m <= n={space.n}, got m={m}")
    if not 0 < lam < space.diam:
        raise LambdaOutOfRange(f"lambda must lie in (0, {space.diam}), got {lam}")
    res = gh_to_simplex(space, SimplexSpec(m, lam), strategy)
    return res.twice_distance < space.diam


def sphere_membership(
    space: ValidatedSpace, d: float, m: int, lam: float, strategy: Strategy | str = Strategy.AUTO
) -> bool:
    """Whether ``X`` is at GH distance ``d/2`` from both a point and ``lam * simplex_m``."""
    if not d > 0:
        raise NonpositiveD(f"d must be > 0, got {d}")
    if not 0 < lam < d:
        raise LambdaOutOfRange(f"lambda must lie in (0, {d}), got {lam}")
    if space.diam != d:
        return False
    return gh_to_simplex(space, SimplexSpec(m, lam), strategy).twice_distance == d
