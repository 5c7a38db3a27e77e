"""Set partitions into exactly ``m`` blocks and the quantities defined on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .errors import BadBlockCount, NonpositiveLambda, SizeMismatch
from .metric import ValidatedSpace


@dataclass(frozen=True, order=True)
class Partition:
    """A partition of ``0..n-1`` stored as a restricted growth string.

    ``rgs[i]`` is the block label of point ``i``; labels first appear in
    increasing order, so equal partitions have equal strings and the
    dataclass ordering is lexicographic on ``rgs``.
    """

    rgs: tuple[int, ...]

    def __post_init__(self) -> None:
        top = -1
        for label in self.rgs:
            if label < 0 or label > top + 1:
                raise ValueError(f"not a restricted growth string: {self.rgs}")
            top = max(top, label)
        if not self.rgs:
            raise ValueError("empty partition")

    @property
    def n(self) -> int:
        return len(self.rgs)

    @property
    def m(self) -> int:
        return max(self.rgs) + 1

    def blocks(self) -> list[list[int]]:
        """Blocks as sorted index lists, ordered by smallest member."""
        out: list[list[int]] = [[] for _ in range(self.m)]
        for i, label in enumerate(self.rgs):
            out[label].append(i)
        return out

    @classmethod
    def from_labels(cls, labels: Sequence[int]) -> "Partition":
        """Canonicalize arbitrary block labels by order of first appearance."""
        remap: dict[int, int] = {}
        return cls(tuple(remap.setdefault(lab, len(remap)) for lab in labels))

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[int]], n: int | None = None) -> "Partition":
        if n is None:
            n = sum(len(b) for b in blocks)
        labels = [-1] * n
        for k, block in enumerate(blocks):
            if not block:
                raise ValueError("empty block")
            for i in block:
                if not 0 <= i < n or labels[i] != -1:
                    raise ValueError(f"blocks do not partition 0..{n - 1}")
                labels[i] = k
        if -1 in labels:
            raise ValueError(f"blocks do not cover 0..{n - 1}")
        return cls.from_labels(labels)

    def __str__(self) -> str:
        return "{" + ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks()) + "}"


@lru_cache(maxsize=None)
def stirling2(n: int, m: int) -> int:
    """Stirling number of the second kind, via S(n,m) = S(n-1,m-1) + m S(n-1,m)."""
    if n == m:
        return 1
    if m == 0 or m > n:
        return 0
    return stirling2(n - 1, m - 1) + m * stirling2(n - 1, m)


def bell(n: int) -> int:
    return sum(stirling2(n, m) for m in range(n + 1))


def _check_counts(n: int, m: int) -> None:
    if n < 1:
        raise BadBlockCount(f"need at least one point, got n={n}")
    if not 1 <= m <= n:
        raise BadBlockCount(f"block count must satisfy 1 <= m <= n={n}, got m={m}")


def enumerate_partitions(n: int, m: int) -> Iterator[Partition]:
    """Lazily yield every partition of ``0..n-1`` into exactly ``m`` blocks.

    Output is in lexicographic order of the restricted growth string.
    """
    return (Partition(rgs) for rgs in iter_rgs(n, m))


def iter_rgs(n: int, m: int) -> Iterator[tuple[int, ...]]:
    """Raw restricted growth strings behind :func:`enumerate_partitions`."""
    _check_counts(n, m)
    rgs = [0] * n

    def rec(i: int, top: int) -> Iterator[tuple[int, ...]]:
        # top = largest label used in rgs[:i]
        if i == n:
            yield tuple(rgs)
            return
        remaining = n - i
        opened = top + 1
        hi = min(top + 1, m - 1)
        for label in range(hi + 1):
            new_open = max(opened, label + 1)
            if remaining - 1 < m - new_open:
                continue
            rgs[i] = label
            yield from rec(i + 1, max(top, label))

    return rec(1, 0)


def _check_size(space: ValidatedSpace, part: Partition) -> None:
    if part.n != space.n:
        raise SizeMismatch(f"partition has {part.n} points, space has {space.n}")


def partition_diameter(space: ValidatedSpace, part: Partition) -> float:
    _check_size(space, part)
    d = space.dist
    best = 0.0
    for block in part.blocks():
        if len(block) > 1:
            best = max(best, float(d[block][:, block].max()))
    return best


def separation_alpha(space: ValidatedSpace, part: Partition) -> float:
    """Smallest distance between points in different blocks; ``inf`` for one block."""
    _check_size(space, part)
    rgs = part.rgs
    d = space.dist
    best = math.inf
    n = part.n
    for i in range(n):
        for j in range(i + 1, n):
            if rgs[i] != rgs[j] and d[i, j] < best:
                best = float(d[i, j])
    return best


def objective(space: ValidatedSpace, part: Partition, lam: float) -> float:
    """``max{diam D, lam - alpha(D), diam X - lam}`` for the partition ``D``.

    This is twice the Gromov-Hausdorff distance contribution of ``D``; the
    middle term vanishes (is ``-inf``) for a single block.
    """
    if not lam > 0:
        raise NonpositiveLambda(f"lambda must be > 0, got {lam}")
    diam_d = partition_diameter(space, part)
    alpha = separation_alpha(space, part)
    return max(diam_d, lam - alpha, space.diam - lam)
