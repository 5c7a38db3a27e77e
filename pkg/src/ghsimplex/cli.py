"""Command-line interface.

Every invocation writes exactly one JSON result document to stdout::

    {"command", "argv", "input_digest", "n", "result", "error",
     "diagnostics", "timing_s"}

Exit status: 0 success (a "no" answer included), 1 input or validation
error, 2 work budget exceeded, 3 internal cross-check mismatch.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
import warnings
from pathlib import Path
from typing import Any, Sequence

import numpy as np

from .borsuk import borsuk_decision, borsuk_via_gh, diameter_graph, sphere_membership
from .errors import BudgetExceeded, GHSimplexError, InputError
from .metric import ValidatedSpace, hausdorff_distance, space_from_points, validate_space
from .partition import Partition
from .selfcheck import run_selfcheck
from .solver import SimplexSpec, Strategy, gh_to_simplex

log = logging.getLogger("ghsimplex")

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_MISMATCH = 0, 1, 2, 3


class UsageError(InputError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad usage; 2 is reserved for budget overruns here.
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def load_document(path: str, *, csv: bool, check_triangle: bool, tol: float):
    """Read a space document; returns ``(space, labels, digest)``."""
    raw = Path(path).read_bytes()
    digest = "sha256:" + hashlib.sha256(raw).hexdigest()
    if csv:
        matrix = np.loadtxt(path, delimiter=",", ndmin=2)
        return validate_space(matrix, check_triangle=check_triangle, tol=tol), None, digest
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc})") from None
    if not isinstance(doc, dict) or ("matrix" in doc) == ("points" in doc):
        raise InputError("space document needs exactly one of 'matrix' or 'points'")
    if "matrix" in doc:
        space = validate_space(doc["matrix"], check_triangle=check_triangle, tol=tol)
    else:
        space = space_from_points(doc["points"], doc.get("norm", "l2"))
    labels = doc.get("labels")
    if labels is not None:
        if not isinstance(labels, list) or len(labels) != space.n:
            raise InputError(f"'labels' must be a list of {space.n} strings")
        labels = [str(x) for x in labels]
    return space, labels, digest


def _blocks(part: Partition | None, labels: list[str] | None):
    if part is None:
        return None
    blocks = part.blocks()
    if labels is None:
        return blocks
    return [[labels[i] for i in b] for b in blocks]


def _pairs(pairs, labels):
    if labels is None:
        return [list(p) for p in pairs]
    return [[labels[i], labels[j]] for i, j in pairs]


def _index_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated indices, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ghsimplex", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true", help="log diagnostics to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    fileopts = _Parser(add_help=False)
    fileopts.add_argument("file", help="JSON space document (or CSV matrix with --csv)")
    fileopts.add_argument("--csv", action="store_true", help="read FILE as a headerless CSV matrix")
    fileopts.add_argument("--tol", type=float, default=0.0, help="equality tolerance (default exact)")
    fileopts.add_argument(
        "--allow-semimetric", action="store_true", help="skip the triangle inequality check"
    )

    sub.add_parser("validate", parents=[fileopts], help="validate a distance matrix")
    sub.add_parser("diam", parents=[fileopts], help="diameter and diametral pairs")

    p = sub.add_parser("hausdorff", parents=[fileopts], help="Hausdorff distance of index sets")
    p.add_argument("--a", required=True, type=_index_list)
    p.add_argument("--b", required=True, type=_index_list)

    p = sub.add_parser("gh", parents=[fileopts], help="GH distance to a simplex")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--lambda", dest="lam", required=True, type=float)
    p.add_argument("--strategy", choices=[s.value for s in Strategy], default="auto")
    p.add_argument("--witness", action="store_true", help="report the optimal partition")
    p.add_argument("--budget", type=int, default=None, help="branch-and-bound node limit")

    p = sub.add_parser("borsuk", parents=[fileopts], help="partition into m smaller-diameter parts")
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--method", choices=["coloring", "gh", "both"], default="coloring")
    p.add_argument("--lambda", dest="lam", type=float, default=None, help="default diam/2")

    p = sub.add_parser("sphere", parents=[fileopts], help="sphere-intersection membership")
    p.add_argument("--d", required=True, type=float)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--lambda", dest="lam", required=True, type=float)

    p = sub.add_parser("selfcheck", help="randomized cross-check suites")
    p.add_argument("--n-max", type=int, default=7)
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--rng-seed", type=int, default=0)
    return parser


class _Mismatch(GHSimplexError):
    def __init__(self, message: str, result: dict):
        super().__init__(message)
        self.result = result


def _cmd_validate(args, space: ValidatedSpace, labels) -> tuple[dict, dict, int]:
    result = {"valid": True, "n": space.n, "diam": space.diam, "semimetric": space.semimetric}
    return result, {}, EXIT_OK


def _cmd_diam(args, space, labels):
    return {"diam": space.diam, "pairs": _pairs(space.diametral_pairs, labels)}, {}, EXIT_OK


def _cmd_hausdorff(args, space, labels):
    value = hausdorff_distance(space, args.a, args.b)
    return {"a": args.a, "b": args.b, "hausdorff": value}, {}, EXIT_OK


def _cmd_gh(args, space, labels):
    res = gh_to_simplex(space, SimplexSpec(args.m, args.lam), args.strategy, budget=args.budget)
    result = {
        "m": args.m,
        "lambda": args.lam,
        "twice_distance": res.twice_distance,
        "d_gh": res.distance,
        "regime": res.regime.value,
        "optimal": res.optimal,
        "witness": _blocks(res.witness, labels) if args.witness else None,
    }
    diag = {
        "strategy": res.strategy,
        "nodes_explored": res.nodes_explored,
        "budget_exceeded": res.budget_exceeded,
    }
    return result, diag, EXIT_BUDGET if res.budget_exceeded else EXIT_OK


def _cmd_borsuk(args, space, labels):
    lam = args.lam if args.lam is not None else space.diam / 2
    result: dict[str, Any] = {
        "m": args.m,
        "method": args.method,
        "answer": None,
        "witness": None,
        "epsilon_margin": None,
        "certificate": None,
        "coloring_answer": None,
        "gh_answer": None,
        "lambda": None,
    }
    if args.method in ("coloring", "both"):
        ans = borsuk_decision(space, args.m)
        result.update(
            answer=ans.answer,
            witness=_blocks(ans.witness, labels),
            epsilon_margin=ans.epsilon_margin,
            certificate=ans.certificate,
            coloring_answer=ans.answer,
        )
    if args.method in ("gh", "both"):
        via_gh = borsuk_via_gh(space, args.m, lam)
        result.update(gh_answer=via_gh, **{"lambda": lam})
        if args.method == "gh":
            result["answer"] = via_gh
    if args.method == "both" and result["coloring_answer"] != result["gh_answer"]:
        raise _Mismatch("coloring and GH criteria disagree", result)
    graph = diameter_graph(space)
    return result, {"diameter_graph_edges": len(graph.edges)}, EXIT_OK


def _cmd_sphere(args, space, labels):
    member = sphere_membership(space, args.d, args.m, args.lam)
    result = {"d": args.d, "m": args.m, "lambda": args.lam, "diam": space.diam, "member": member}
    return result, {}, EXIT_OK


COMMANDS = {
    "validate": _cmd_validate,
    "diam": _cmd_diam,
    "hausdorff": _cmd_hausdorff,
    "gh": _cmd_gh,
    "borsuk": _cmd_borsuk,
    "sphere": _cmd_sphere,
}


def _emit(doc: dict, stream) -> None:
    stream.write(json.dumps(doc, indent=2, allow_nan=False) + "\n")


def run(argv: Sequence[str] | None = None, stdout=None) -> int:
    """Execute one CLI invocation and return the exit status."""
    stdout = stdout or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    doc: dict[str, Any] = {
        "command": None,
        "argv": argv,
        "input_digest": None,
        "n": None,
        "result": None,
        "error": None,
        "diagnostics": {},
        "timing_s": None,
    }
    status = EXIT_OK
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        doc["command"] = args.command
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
        if args.command == "selfcheck":
            report = run_selfcheck(args.rng_seed, args.trials, args.n_max)
            doc["result"] = report
            status = EXIT_OK if report["passed"] else EXIT_MISMATCH
            # timing would break byte-identical reports
            log.info("selfcheck finished in %.2fs", time.perf_counter() - start)
        else:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore" if not args.verbose else "default")
                space, labels, digest = load_document(
                    args.file, csv=args.csv, check_triangle=not args.allow_semimetric, tol=args.tol
                )
            doc["input_digest"], doc["n"] = digest, space.n
            result, diag, status = COMMANDS[args.command](args, space, labels)
            doc["result"], doc["diagnostics"] = result, diag
            doc["timing_s"] = time.perf_counter() - start
    except _Mismatch as exc:
        doc["result"] = exc.result
        doc["error"] = {"type": "Mismatch", "message": str(exc)}
        status = EXIT_MISMATCH
    except BudgetExceeded as exc:
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        status = EXIT_BUDGET
    except (InputError, ValueError, OSError) as exc:
        if doc["command"] == "validate":
            doc["result"] = {"valid": False}
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        status = EXIT_INPUT
    if doc["error"] is not None:
        log.error("%s: %s", doc["error"]["type"], doc["error"]["message"])
    _emit(doc, stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
