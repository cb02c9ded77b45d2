"""Command-line front end.

    grover-decomp params   --lambda 0.125
    grover-decomp simulate --n 3 --targets 0 --mode decomposed-ii
    grover-decomp verify   --seed 42
    grover-decomp verify   --suite golden

Results go to stdout (JSON by default), diagnostics to stderr.  Exit
codes: 0 success, 1 verification failure, 2 usage error, 3 resource cap.
"""

import argparse
import json
import math
import sys
import time

import numpy as np

from . import verify as verify_mod
from .errors import GroverDecompError, TooLargeForDense
from .operators import (CallCounter, TargetSet, grover_iterate, initial_state)
from .decomposition import reduced_state_I, reduced_state_II
from .params import matching_phase, rotation_phase, solve
from .parallel import build_parallel_operator
from .shortcut import build_shortcut

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

MODES = ("iterative", "decomposed-i", "decomposed-ii", "shortcut", "parallel")


def _cnum(z: complex) -> dict:
    return {"re": float(np.real(z)), "im": float(np.imag(z))}


def _emit(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "csv":
        flat = _flatten(payload)
        print(",".join(flat))
        print(",".join(str(v) for v in flat.values()))
    else:
        for key, value in sorted(_flatten(payload).items()):
            print(f"{key:32s} {value}")


def _flatten(payload: dict, prefix: str = "") -> dict:
    flat = {}
    for key, value in payload.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            flat.update(_flatten(value, f"{name}."))
        elif isinstance(value, (list, tuple)):
            flat[name] = ";".join(str(v) for v in value)
        else:
            flat[name] = value
    return flat


def cmd_params(args) -> int:
    params = solve(args.lam)
    payload = {
        "lambda": params.lam,
        "k": params.k,
        "alpha_radians": params.alpha,
        "theta_radians": params.theta,
        "cos_theta_check": abs(
            math.cos(params.theta)
            - (1.0 - params.lam * (1.0 - math.cos(params.alpha)))),
        "no_iteration": params.no_iteration,
    }
    _emit(payload, args.output)
    return EXIT_OK


def _resolve_run(args):
    """Fill (k, alpha, theta) from the solver, honoring overrides."""
    targets = TargetSet(n=args.n, indices=args.targets)
    solved = solve(targets.lam)
    k = args.k if args.k is not None else solved.k
    alpha = args.alpha if args.alpha is not None else (
        matching_phase(targets.lam, k) if k >= 1 else 0.0)
    theta = args.theta if args.theta is not None else rotation_phase(
        targets.lam, alpha)
    consistent = abs(
        math.cos(theta)
        - (1.0 - targets.lam * (1.0 - math.cos(alpha)))) <= args.tol
    return targets, k, alpha, theta, consistent


def cmd_simulate(args) -> int:
    targets, k, alpha, theta, consistent = _resolve_run(args)
    n = args.n
    counter = CallCounter()
    start = time.perf_counter()
    if args.mode == "iterative":
        state = grover_iterate(initial_state(n), targets, alpha, k, counter)
    elif args.mode == "decomposed-i":
        state = reduced_state_I(n, targets, alpha, theta, k, counter)
    elif args.mode == "decomposed-ii":
        state = reduced_state_II(n, targets, alpha, theta, k, counter)
    elif args.mode == "shortcut":
        op = build_shortcut(n, targets, solve(targets.lam))
        counter.count = op.oracle_calls
        state = op.matrix @ initial_state(n)
    else:  # parallel; channel one carries the search result
        op = build_parallel_operator(n, targets, solve(targets.lam))
        counter.count = 1
        state = op.factors[0] @ initial_state(n)
    elapsed = time.perf_counter() - start

    idx = list(targets.indices)
    success = float(np.sum(np.abs(state[idx]) ** 2))
    non_target_idx = next(
        (i for i in range(targets.size) if i not in set(idx)), None)
    payload = {
        "mode": args.mode,
        "n": n,
        "targets": idx,
        "lambda": targets.lam,
        "k": k,
        "alpha_radians": alpha,
        "theta_radians": theta,
        "params_consistent": consistent,
        "target_amplitude": _cnum(state[idx[0]]),
        "nontarget_amplitude": (_cnum(state[non_target_idx])
                                if non_target_idx is not None else None),
        "success_probability": success,
        "oracle_calls": counter.count,
        "wall_time_s": elapsed,
    }
    if args.full:
        payload["amplitudes"] = [_cnum(z) for z in state]
    _emit(payload, args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    offset = 0.1 if args.inject_fault == "theta-offset" else 0.0
    if args.suite == "golden":
        outcome = verify_mod.golden_suite(tol=args.tol)
    else:
        outcome = verify_mod.run_all(args.seed, theta_offset=offset)
    payload = {
        "seed": args.seed,
        "suite": args.suite,
        "passed": outcome.passed,
        "checks": {r.name: {"passed": r.passed,
                            "max_residual": r.max_residual}
                   for r in outcome.results},
    }
    _emit(payload, args.output)
    if not outcome.passed:
        failing = [r.name for r in outcome.results if not r.passed]
        print(f"failing checks: {', '.join(failing)}", file=sys.stderr)
        return EXIT_VERIFY_FAIL
    return EXIT_OK


def _parse_targets(text: str) -> tuple:
    try:
        return tuple(int(t) for t in text.replace(",", " ").split())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad target list {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grover-decomp",
        description="Exact phase-matched quantum search: parameters, "
                    "simulation and verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "csv", "pretty"),
                        default="json")
    common.add_argument("--tol", type=float, default=1e-10)

    p = sub.add_parser("params", parents=[common],
                       help="solve (k, alpha, theta) from lambda")
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.set_defaults(func=cmd_params)

    s = sub.add_parser("simulate", parents=[common],
                       help="run one search in the chosen mode")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--targets", type=_parse_targets, default=(0,),
                   help="comma- or space-separated target indices")
    s.add_argument("--num-targets", type=int, default=None,
                   help="mark the first NUM indices instead of --targets")
    s.add_argument("--mode", choices=MODES, default="iterative")
    s.add_argument("--k", type=int, default=None)
    s.add_argument("--alpha", type=float, default=None)
    s.add_argument("--theta", type=float, default=None)
    s.add_argument("--full", action="store_true",
                   help="emit all N amplitudes")
    s.set_defaults(func=cmd_simulate)

    v = sub.add_parser("verify", parents=[common],
                       help="run the verification suites")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--suite", choices=("random", "golden"), default="random")
    v.add_argument("--inject-fault", choices=("theta-offset",), default=None)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "num_targets", None) is not None:
        args.targets = tuple(range(args.num_targets))
    try:
        return args.func(args)
    except TooLargeForDense as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except GroverDecompError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
