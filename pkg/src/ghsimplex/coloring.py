"""Exact graph coloring on bitmask adjacency.

Graphs are lists of Python ints: bit ``j`` of ``adj[i]`` is set iff ``i``
and ``j`` are adjacent.  The search is DSATUR-style backtracking (most
constrained vertex first, one representative for all unused colors),
which decides k-colorability exactly.  :func:`lex_first_coloring` drives
it from a fixed vertex order to produce the lexicographically smallest
proper coloring.
"""

from __future__ import annotations

from typing import Sequence

from .errors import BudgetExceeded


class NodeCounter:
    """Shared search-node counter with an optional hard limit."""

    def __init__(self, limit: int | None = None):
        self.count = 0
        self.limit = limit

    def tick(self) -> None:
        self.count += 1
        if self.limit is not None and self.count > self.limit:
            raise BudgetExceeded(f"node limit {self.limit} reached")


def adjacency_from_edges(n: int, edges: Sequence[tuple[int, int]]) -> list[int]:
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return adj


def greedy_clique(adj: Sequence[int]) -> list[int]:
    """A maximal clique grown greedily from high-degree vertices."""
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-bin(adj[v]).count("1"), v))
    best: list[int] = []
    for start in order[: min(n, 8)]:
        clique = [start]
        cand = adj[start]
        for v in order:
            if cand >> v & 1:
                clique.append(v)
                cand &= adj[v]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def complete_coloring(
    adj: Sequence[int],
    k: int,
    colors: list[int],
    counter: NodeCounter | None = None,
) -> list[int] | None:
    """Extend the partial coloring ``colors`` (-1 = uncolored) to a proper one.

    Uses at most ``k`` colors.  Returns a new list or ``None`` if no
    extension exists.  Raises :class:`BudgetExceeded` via ``counter``.
    """
    n = len(adj)
    full = (1 << k) - 1
    colors = list(colors)
    forbid = [0] * n
    used = 0
    for v, c in enumerate(colors):
        if c >= 0:
            used |= 1 << c
            bit = 1 << c
            nb = adj[v]
            while nb:
                low = nb & -nb
                forbid[low.bit_length() - 1] |= bit
                nb ^= low
    for v, c in enumerate(colors):
        if c >= 0 and forbid[v] >> c & 1:
            return None
    uncolored = {v for v in range(n) if colors[v] < 0}
    counter = counter or NodeCounter()

    def options(v: int, used: int) -> int:
        opts = used & ~forbid[v] & full
        fresh = ~used & full
        if fresh:
            opts |= fresh & -fresh
        return opts

    def rec(used: int) -> bool:
        if not uncolored:
            return True
        counter.tick()
        best_v = -1
        best_opts = 0
        best_key = None
        for v in uncolored:
            opts = options(v, used)
            cnt = bin(opts).count("1")
            if cnt == 0:
                return False
            key = (cnt, -bin(forbid[v]).count("1"), -bin(adj[v]).count("1"), v)
            if best_key is None or key < best_key:
                best_key, best_v, best_opts = key, v, opts
        v = best_v
        uncolored.discard(v)
        opts = best_opts
        while opts:
            low = opts & -opts
            opts ^= low
            c = low.bit_length() - 1
            colors[v] = c
            touched = []
            nb = adj[v]
            while nb:
                lb = nb & -nb
                nb ^= lb
                u = lb.bit_length() - 1
                if u in uncolored and not forbid[u] & low:
                    forbid[u] |= low
                    touched.append(u)
            if rec(used | low):
                return True
            for u in touched:
                forbid[u] &= ~low
        colors[v] = -1
        uncolored.add(v)
        return False

    if not rec(used):
        return None
    return colors


def lex_first_coloring(
    adj: Sequence[int],
    k: int,
    exact: bool = False,
    counter: NodeCounter | None = None,
) -> list[int] | None:
    """Lexicographically smallest proper coloring with at most ``k`` colors.

    Vertices are taken in index order; colors follow restricted-growth
    order (vertex ``v`` may use a new color only if all smaller ones are
    in use).  With ``exact`` set, all ``k`` colors must be used.
    Each tentative choice is confirmed by an exact completion search, so
    the construction never backtracks.
    """
    n = len(adj)
    counter = counter or NodeCounter()
    target = k if exact else 0
    if target > n or k < 1:
        return None
    if len(greedy_clique(adj)) > k:
        return None
    colors = [-1] * n
    top = -1
    for v in range(n):
        placed = False
        for c in range(min(top + 1, k - 1) + 1):
            if adj[v] and any(colors[u] == c for u in _bits(adj[v]) if u < v):
                continue
            new_top = max(top, c)
            # remaining vertices can always open fresh colors one by one
            if (new_top + 1) + (n - v - 1) < target:
                continue
            colors[v] = c
            if complete_coloring(adj, k, colors, counter) is not None:
                top = new_top
                placed = True
                break
            colors[v] = -1
        if not placed:
            return None
    if top + 1 < target:
        return None
    return colors


def _bits(mask: int):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low.bit_length() - 1
