"""Randomized cross-checks run by ``ghsimplex selfcheck``.

Three suites over a seeded instance set:

``oracle``
    branch-and-bound against exhaustive search (value and witness).
``theorem``
    diameter-graph coloring against the GH criterion on a 9-point lambda grid.
``regime``
    closed forms for ``m > n`` and ``m == 1``.

The report depends only on the seed and the options, never on worker count.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor

from .borsuk import borsuk_decision, borsuk_via_gh
from .instances import instance_set
from .metric import ValidatedSpace
from .solver import SimplexSpec, brute_force_min, branch_and_bound, gh_to_point, gh_to_simplex

ORACLE_FRACTIONS = (0.25, 0.5, 0.75)
THEOREM_GRID = tuple(k / 10 for k in range(1, 10))
REGIME_FRACTIONS = (0.25, 0.5, 0.75, 1.5)


def _lambdas(space: ValidatedSpace, fractions) -> list[float]:
    scale = space.diam if space.diam > 0 else 1.0
    return [f * scale for f in fractions]


def check_oracle(space: ValidatedSpace) -> tuple[int, list[dict]]:
    checks, bad = 0, []
    for m in range(1, space.n + 1):
        for lam in _lambdas(space, ORACLE_FRACTIONS):
            ref = brute_force_min(space, m, lam)
            got = branch_and_bound(space, m, lam)
            checks += 1
            if ref.twice_distance != got.twice_distance or ref.witness != got.witness:
                bad.append(
                    {
                        "m": m,
                        "lambda": lam,
                        "brute": [ref.twice_distance, list(ref.witness.rgs)],
                        "bnb": [got.twice_distance, list(got.witness.rgs)],
                    }
                )
    return checks, bad


def check_theorem(space: ValidatedSpace) -> tuple[int, list[dict]]:
    checks, bad = 0, []
    if space.n < 2:
        return checks, bad
    for m in range(1, space.n + 1):
        colored = borsuk_decision(space, m).answer
        for lam in _lambdas(space, THEOREM_GRID):
            checks += 1
            via_gh = borsuk_via_gh(space, m, lam)
            if via_gh != colored:
                bad.append({"m": m, "lambda": lam, "coloring": colored, "gh": via_gh})
    return checks, bad


def check_regime(space: ValidatedSpace) -> tuple[int, list[dict]]:
    checks, bad = 0, []
    n, diam = space.n, space.diam
    for m in sorted({n + 1, n + 2, 2 * n}):
        for lam in _lambdas(space, REGIME_FRACTIONS):
            checks += 1
            got = gh_to_simplex(space, SimplexSpec(m, lam)).twice_distance
            if got != max(lam, diam - lam):
                bad.append({"m": m, "lambda": lam, "got": got})
    for lam in _lambdas(space, REGIME_FRACTIONS):
        checks += 1
        got = gh_to_simplex(space, SimplexSpec(1, lam)).twice_distance
        if got != diam or gh_to_point(space) != got / 2:
            bad.append({"m": 1, "lambda": lam, "got": got})
    return checks, bad


SUITES = {"oracle": check_oracle, "theorem": check_theorem, "regime": check_regime}


def _run_one(item: tuple[str, ValidatedSpace]) -> dict:
    name, space = item
    out = {}
    for suite, fn in SUITES.items():
        checks, bad = fn(space)
        out[suite] = (checks, [dict(b, instance=name) for b in bad])
    return out


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("GHSIMPLEX_THREADS", "1")))
    except ValueError:
        return 1


def run_selfcheck(seed: int = 0, trials: int = 200, n_max: int = 7, workers: int | None = None) -> dict:
    instances = instance_set(seed, trials, n_max=n_max)
    workers = worker_count() if workers is None else workers
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            per_instance = list(pool.map(_run_one, instances, chunksize=8))
    else:
        per_instance = [_run_one(item) for item in instances]

    suites = {}
    for suite in SUITES:
        checks = sum(r[suite][0] for r in per_instance)
        mismatches = [b for r in per_instance for b in r[suite][1]]
        suites[suite] = {"checks": checks, "mismatches": len(mismatches), "details": mismatches}
    return {
        "seed": seed,
        "trials": trials,
        "n_max": n_max,
        "instances": len(instances),
        "suites": suites,
        "passed": all(s["mismatches"] == 0 for s in suites.values()),
    }
