"""Finite metric spaces stored as validated distance matrices."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    AsymmetricEntry,
    DimensionMismatch,
    EmptyPointSet,
    EmptySubset,
    IndexOutOfRange,
    NegativeEntry,
    NonFiniteEntry,
    NonpositiveScale,
    NonSquare,
    NonzeroDiagonal,
    TriangleViolation,
    ZeroOffDiagonal,
)

NORMS = ("l1", "l2", "linf")


@dataclass(frozen=True, eq=False)
class ValidatedSpace:
    """A finite metric space on the points ``0..n-1``.

    Instances are produced by :func:`validate_space` (or the helpers built
    on it) and are immutable: the distance matrix is flagged read-only.
    Distances are plain IEEE doubles; separation values that may be
    infinite (an empty infimum) are represented by ``math.inf``.
    """

    dist: np.ndarray
    diam: float
    diametral_pairs: tuple[tuple[int, int], ...]
    tol: float = 0.0
    semimetric: bool = False
    _min_positive: float = field(default=0.0, repr=False)

    @property
    def n(self) -> int:
        return int(self.dist.shape[0])

    @property
    def min_positive(self) -> float:
        """Smallest off-diagonal distance (``inf`` for a single point)."""
        return self._min_positive

    def d(self, i: int, j: int) -> float:
        return float(self.dist[i, j])

    def __len__(self) -> int:
        return self.n


def _diametral(dist: np.ndarray, diam: float, tol: float) -> tuple[tuple[int, int], ...]:
    n = dist.shape[0]
    if n < 2:
        return ()
    iu, ju = np.triu_indices(n, 1)
    hit = dist[iu, ju] >= diam - tol
    return tuple((int(i), int(j)) for i, j in zip(iu[hit], ju[hit]))


def _build(
    dist: np.ndarray,
    tol: float,
    semimetric: bool,
    pairs: tuple[tuple[int, int], ...] | None = None,
) -> ValidatedSpace:
    dist = np.array(dist, dtype=np.float64, copy=True)
    dist.setflags(write=False)
    n = dist.shape[0]
    diam = float(dist.max()) if n > 1 else 0.0
    if n > 1:
        off = dist[~np.eye(n, dtype=bool)]
        min_pos = float(off.min())
    else:
        min_pos = float("inf")
    return ValidatedSpace(
        dist=dist,
        diam=diam,
        diametral_pairs=_diametral(dist, diam, tol) if pairs is None else pairs,
        tol=float(tol),
        semimetric=semimetric,
        _min_positive=min_pos,
    )


def _first(mask: np.ndarray) -> tuple[int, ...] | None:
    hits = np.argwhere(mask)
    if hits.size == 0:
        return None
    return tuple(int(v) for v in hits[0])


def validate_space(
    raw: Sequence[Sequence[float]] | np.ndarray,
    *,
    check_triangle: bool = True,
    tol: float = 0.0,
    triangle_rtol: float = 0.0,
) -> ValidatedSpace:
    """Check that ``raw`` is a metric and wrap it.

    ``tol`` relaxes every equality test (symmetry, zero diagonal, diametral
    pair detection) and the triangle inequality; the default is exact
    comparison.  ``triangle_rtol`` adds slack relative to the diameter to
    the triangle check only, for matrices computed from coordinates.

    With ``check_triangle=False`` a semimetric is accepted and a
    :class:`UserWarning` is emitted.
    """
    if tol < 0:
        raise ValueError("tol must be >= 0")
    try:
        arr = np.asarray(raw, dtype=np.float64)
    except (TypeError, ValueError) as exc:
        raise NonSquare(f"matrix is not a rectangular array of reals: {exc}") from None
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1] or arr.shape[0] < 1:
        raise NonSquare(f"expected a non-empty square matrix, got shape {arr.shape}")
    n = arr.shape[0]

    bad = _first(~np.isfinite(arr))
    if bad is not None:
        raise NonFiniteEntry(*bad)

    diag = np.abs(np.diag(arr)) > tol
    if diag.any():
        raise NonzeroDiagonal(int(np.argmax(diag)))

    upper = np.triu(np.ones((n, n), dtype=bool), 1)
    bad = _first(upper & (np.abs(arr - arr.T) > tol))
    if bad is not None:
        raise AsymmetricEntry(*bad)

    bad = _first(arr < 0)
    if bad is not None:
        i, j = bad
        raise NegativeEntry(min(i, j), max(i, j))

    bad = _first(upper & (arr <= tol))
    if bad is not None:
        raise ZeroOffDiagonal(*bad)

    # Symmetrize within tol so later computations see one value per pair.
    if tol > 0:
        arr = np.triu(arr) + np.triu(arr, 1).T

    if check_triangle:
        slack = tol + triangle_rtol * float(arr.max())
        for i in range(n):
            # viol[j, k] <=> d(i, k) > d(i, j) + d(j, k)
            viol = arr[i][None, :] > arr[i][:, None] + arr + slack
            bad = _first(viol)
            if bad is not None:
                raise TriangleViolation(i, *bad)
    else:
        warnings.warn(
            "triangle inequality not checked; input treated as a semimetric",
            UserWarning,
            stacklevel=2,
        )
    return _build(arr, tol, semimetric=not check_triangle)


def diameter(space: ValidatedSpace) -> tuple[float, tuple[tuple[int, int], ...]]:
    return space.diam, space.diametral_pairs


def _index_set(space: ValidatedSpace, idx: Iterable[int], name: str) -> np.ndarray:
    arr = np.unique(np.asarray(list(idx), dtype=np.int64))
    if arr.size == 0:
        raise EmptySubset(f"index set {name} is empty")
    if arr[0] < 0 or arr[-1] >= space.n:
        raise IndexOutOfRange(f"index set {name} has indices outside 0..{space.n - 1}")
    return arr


def hausdorff_distance(space: ValidatedSpace, a: Iterable[int], b: Iterable[int]) -> float:
    """Hausdorff distance between two index subsets of ``space``.

    Uses the max of the two directed distances
    ``max_a min_b d(a, b)`` and ``max_b min_a d(a, b)``.
    """
    ia = _index_set(space, a, "A")
    ib = _index_set(space, b, "B")
    sub = space.dist[np.ix_(ia, ib)]
    return float(max(sub.min(axis=1).max(), sub.min(axis=0).max()))


def space_from_points(points: Sequence[Sequence[float]], norm: str = "l2") -> ValidatedSpace:
    """Distance matrix of a point cloud under the L1, L2 or L-infinity norm."""
    norm = norm.lower()
    if norm not in NORMS:
        raise ValueError(f"norm must be one of {NORMS}, got {norm!r}")
    if len(points) == 0:
        raise EmptyPointSet("no points given")
    dims = {len(p) for p in points}
    if len(dims) != 1 or 0 in dims:
        raise DimensionMismatch(f"points must share one dimension >= 1, got {sorted(dims)}")
    pts = np.asarray(points, dtype=np.float64)
    diff = np.abs(pts[:, None, :] - pts[None, :, :])
    if norm == "l1":
        dist = diff.sum(axis=2)
    elif norm == "l2":
        dist = np.sqrt((diff * diff).sum(axis=2))
    else:
        dist = diff.max(axis=2)
    # Mirror the upper triangle so symmetry is bitwise exact.
    dist = np.triu(dist, 1)
    dist = dist + dist.T
    # Rounding in coordinate arithmetic can break the triangle inequality
    # by a few ulps on (near-)collinear points.
    return validate_space(dist, triangle_rtol=16 * np.finfo(np.float64).eps)


def scale_space(space: ValidatedSpace, c: float) -> ValidatedSpace:
    if not c > 0:
        raise NonpositiveScale(f"scale must be > 0, got {c}")
    return _build(space.dist * c, space.tol * c, space.semimetric, space.diametral_pairs)


def simplex_space(m: int, lam: float = 1.0) -> ValidatedSpace:
    """The simplex with ``m`` points and all non-zero distances ``lam``."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if not lam > 0:
        raise NonpositiveScale(f"edge length must be > 0, got {lam}")
    dist = np.full((m, m), float(lam))
    np.fill_diagonal(dist, 0.0)
    return _build(dist, 0.0, False)
