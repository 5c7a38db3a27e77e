"""Twice the Gromov-Hausdorff distance from a finite space to a simplex.

For ``m > n`` the value has the closed form ``max{lam, diam X - lam}``; for
``m == 1`` the simplex is a point and the value is ``diam X``.  Otherwise it
is the minimum, over partitions ``D`` of the points into exactly ``m``
blocks, of ``max{diam D, lam - alpha(D), diam X - lam}``.

All values returned here are *twice* the distance.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from itertools import islice

import numpy as np

from .coloring import NodeCounter, lex_first_coloring
from .errors import BadBlockCount, BudgetExceeded, NonpositiveLambda
from .metric import ValidatedSpace
from .partition import Partition, iter_rgs, objective, stirling2

BRUTE_LIMIT = 10**6
_CHUNK = 1 << 15


class Regime(str, enum.Enum):
    POINT = "POINT"
    LARGE_M = "LARGE_M"
    PARTITION = "PARTITION"


class Strategy(str, enum.Enum):
    AUTO = "auto"
    BRUTE = "brute"
    BNB = "bnb"
    GREEDY = "greedy"


@dataclass(frozen=True)
class SimplexSpec:
    """The simplex with ``m`` points at mutual distance ``lam``."""

    m: int
    lam: float

    def __post_init__(self) -> None:
        if self.m < 1:
            raise BadBlockCount(f"simplex needs m >= 1, got {self.m}")
        if not self.lam > 0:
            raise NonpositiveLambda(f"lambda must be > 0, got {self.lam}")


@dataclass(frozen=True)
class GHResult:
    twice_distance: float
    regime: Regime
    optimal: bool
    witness: Partition | None = None
    nodes_explored: int = 0
    strategy: str = ""
    budget_exceeded: bool = False

    @property
    def distance(self) -> float:
        return self.twice_distance / 2


def _check(space: ValidatedSpace, m: int, lam: float) -> None:
    if not lam > 0:
        raise NonpositiveLambda(f"lambda must be > 0, got {lam}")
    if not 1 <= m <= space.n:
        raise BadBlockCount(f"block count must satisfy 1 <= m <= n={space.n}, got m={m}")


def gh_to_point(space: ValidatedSpace) -> float:
    """Gromov-Hausdorff distance to a single point, ``diam X / 2``."""
    return space.diam / 2


def candidate_values(space: ValidatedSpace, lam: float) -> list[float]:
    """Every value the partition objective can take, ascending and deduplicated."""
    if not lam > 0:
        raise NonpositiveLambda(f"lambda must be > 0, got {lam}")
    n = space.n
    dists = space.dist[np.triu_indices(n, 1)] if n > 1 else np.empty(0)
    vals = {0.0}
    for d in dists.tolist():
        vals.add(d)
        if lam - d >= 0:
            vals.add(lam - d)
    if space.diam - lam >= 0:
        vals.add(space.diam - lam)
    return sorted(vals)


# -- brute force ------------------------------------------------------------


@lru_cache(maxsize=64)
def _rgs_table(n: int, m: int) -> np.ndarray:
    table = np.array(list(iter_rgs(n, m)), dtype=np.int16).reshape(-1, n)
    table.setflags(write=False)
    return table


def _rgs_chunks(n: int, m: int):
    if stirling2(n, m) <= 4 * _CHUNK:
        yield _rgs_table(n, m)
        return
    it = iter_rgs(n, m)
    while True:
        rows = list(islice(it, _CHUNK))
        if not rows:
            return
        yield np.array(rows, dtype=np.int16)


def brute_force_min(
    space: ValidatedSpace, m: int, lam: float, budget: int = BRUTE_LIMIT
) -> GHResult:
    """Exhaustive minimum over all partitions into ``m`` blocks.

    Partitions are scanned in lexicographic order and a strictly smaller
    value is required to replace the incumbent, so the witness is the
    lexicographically smallest optimal partition.
    """
    _check(space, m, lam)
    n = space.n
    total = stirling2(n, m)
    if total > budget:
        raise BudgetExceeded(f"S({n},{m}) = {total} partitions exceeds budget {budget}")
    iu, ju = np.triu_indices(n, 1)
    dvec = space.dist[iu, ju]
    tail = space.diam - lam
    best_val = np.inf
    best_rgs = None
    for table in _rgs_chunks(n, m):
        same = table[:, iu] == table[:, ju]
        diam_d = np.where(same, dvec, 0.0).max(axis=1, initial=0.0)
        alpha = np.where(same, np.inf, dvec).min(axis=1, initial=np.inf)
        vals = np.maximum(np.maximum(diam_d, lam - alpha), tail)
        k = int(np.argmin(vals))
        if vals[k] < best_val:
            best_val = float(vals[k])
            best_rgs = tuple(int(v) for v in table[k])
    return GHResult(
        twice_distance=best_val,
        regime=Regime.PARTITION,
        optimal=True,
        witness=Partition(best_rgs),
        nodes_explored=total,
        strategy=Strategy.BRUTE.value,
    )


# -- greedy -------------------------------------------------------------------


def greedy_upper_bound(space: ValidatedSpace, m: int, lam: float) -> tuple[float, Partition]:
    """Farthest-first seeding followed by index-order best-fit assignment.

    Seeds start at point 0; each next seed maximizes the distance to the
    seeds chosen so far (ties to the smaller index).  The other points join,
    in index order, the block that minimizes the objective of the partial
    partition built so far (ties to the smaller block label).
    """
    _check(space, m, lam)
    d = space.dist
    n = space.n
    seeds = [0]
    near = d[0].copy()
    for _ in range(1, m):
        nxt = int(np.argmax(near))
        seeds.append(nxt)
        near = np.minimum(near, d[nxt])

    labels = [-1] * n
    members: list[list[int]] = []
    for k, s in enumerate(seeds):
        labels[s] = k
        members.append([s])
    block_diam = [0.0] * m
    cur_diam = 0.0
    alpha = np.inf
    for a in range(m):
        for b in range(a + 1, m):
            alpha = min(alpha, float(d[seeds[a], seeds[b]]))
    assigned = list(seeds)
    tail = space.diam - lam

    for p in range(n):
        if labels[p] >= 0:
            continue
        row = d[p]
        best = None
        for k in range(m):
            bd = max(block_diam[k], float(row[members[k]].max()))
            others = [q for q in assigned if labels[q] != k]
            al = min(alpha, float(row[others].min())) if others else alpha
            val = max(cur_diam, bd, lam - al, tail)
            if best is None or val < best[0]:
                best = (val, k, bd, al)
        _, k, bd, al = best
        labels[p] = k
        members[k].append(p)
        block_diam[k] = bd
        cur_diam = max(cur_diam, bd)
        alpha = al
        assigned.append(p)

    part = Partition.from_labels(labels)
    return objective(space, part, lam), part


# -- branch and bound ---------------------------------------------------------


def _lex_first_within(
    space: ValidatedSpace, m: int, lam: float, t: float, counter: NodeCounter
) -> Partition | None:
    """Lexicographically smallest partition with objective <= ``t``, if any.

    A partition meets the threshold iff no block holds a pair farther than
    ``t`` apart and no pair with ``lam - d > t`` is split.  The second rule
    glues points into components; the search colors components (in order of
    their smallest point) so that conflicting components differ.
    """
    n = space.n
    d = space.dist
    if space.diam - lam > t:
        return None
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    iu, ju = np.triu_indices(n, 1)
    dvec = d[iu, ju]
    glue = (lam - dvec) > t
    for i, j in zip(iu[glue].tolist(), ju[glue].tolist()):
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    roots = [find(i) for i in range(n)]
    leaders = sorted(set(roots))
    if len(leaders) < m:
        return None
    comp = {r: k for k, r in enumerate(leaders)}
    adj = [0] * len(leaders)
    clash = dvec > t
    for i, j in zip(iu[clash].tolist(), ju[clash].tolist()):
        a, b = comp[roots[i]], comp[roots[j]]
        if a == b:
            return None
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    colors = lex_first_coloring(adj, m, exact=True, counter=counter)
    if colors is None:
        return None
    return Partition(tuple(colors[comp[roots[i]]] for i in range(n)))


def branch_and_bound(
    space: ValidatedSpace, m: int, lam: float, budget: int | None = None
) -> GHResult:
    """Exact minimum with the lexicographically smallest optimal witness.

    The objective only takes values from :func:`candidate_values`, so the
    search bisects that sorted list between the trivial lower bound
    ``max{0, diam X - lam}`` and the greedy incumbent.  Each probe asks for
    a partition strictly better than the incumbent and is answered by an
    exact component-coloring search.  ``budget`` caps the number of search
    nodes; when it runs out the best partition found so far is returned
    with ``optimal=False``.
    """
    _check(space, m, lam)
    counter = NodeCounter(budget)
    if m == 1:
        part = Partition((0,) * space.n)
        return GHResult(objective(space, part, lam), Regime.PARTITION, True, part, 1, Strategy.BNB.value)

    ub, incumbent = greedy_upper_bound(space, m, lam)
    lb = max(0.0, space.diam - lam)
    cands = [c for c in candidate_values(space, lam) if lb <= c <= ub]
    lo, hi = 0, len(cands) - 1
    found: tuple[int, Partition] | None = None
    try:
        while lo < hi:
            mid = (lo + hi) // 2
            part = _lex_first_within(space, m, lam, cands[mid], counter)
            if part is None:
                lo = mid + 1
            else:
                hi = mid
                found = (mid, part)
                incumbent = part
        if found is None or found[0] != hi:
            part = _lex_first_within(space, m, lam, cands[hi], counter)
            assert part is not None, "threshold at the incumbent value must be feasible"
            incumbent = part
    except BudgetExceeded:
        return GHResult(
            twice_distance=objective(space, incumbent, lam),
            regime=Regime.PARTITION,
            optimal=False,
            witness=incumbent,
            nodes_explored=counter.count,
            strategy=Strategy.BNB.value,
            budget_exceeded=True,
        )
    value = objective(space, incumbent, lam)
    assert value == cands[hi]
    return GHResult(value, Regime.PARTITION, True, incumbent, counter.count, Strategy.BNB.value)


# -- dispatcher ---------------------------------------------------------------


def gh_to_simplex(
    space: ValidatedSpace,
    spec: SimplexSpec,
    strategy: Strategy | str = Strategy.AUTO,
    *,
    budget: int | None = None,
    brute_limit: int = BRUTE_LIMIT,
) -> GHResult:
    """Twice the Gromov-Hausdorff distance from ``space`` to ``spec``'s simplex.

    ``budget`` is the node limit for branch-and-bound; ``brute_limit`` caps
    the partition count for exhaustive search and selects between the two
    under ``AUTO``.
    """
    strategy = Strategy(strategy)
    n, m, lam = space.n, spec.m, spec.lam
    if m > n:
        return GHResult(max(lam, space.diam - lam), Regime.LARGE_M, True, strategy=strategy.value)
    if m == 1:
        return GHResult(space.diam, Regime.POINT, True, strategy=strategy.value)
    if strategy is Strategy.AUTO:
        strategy = Strategy.BRUTE if stirling2(n, m) <= brute_limit else Strategy.BNB
    if strategy is Strategy.BRUTE:
        return brute_force_min(space, m, lam, brute_limit)
    if strategy is Strategy.BNB:
        return branch_and_bound(space, m, lam, budget)
    value, part = greedy_upper_bound(space, m, lam)
    return GHResult(value, Regime.PARTITION, False, part, n, Strategy.GREEDY.value)
