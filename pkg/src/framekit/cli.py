"""Command-line interface.

Every subcommand reads frames from JSON files, delegates all numerics
to the library, and prints a single deterministic JSON report on
stdout.  Exit codes: 0 when the verdict is "pass" or "n/a", 1 when a
verified property fails (a tolerance problem or a bug -- the underlying
statements are theorems), 2 for usage or input errors.  Diagnostics go
to stderr.

The default seed comes from the FRAMEKIT_SEED environment variable when
--seed is absent; with neither, seed 0 is used.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Tuple

import numpy as np

from .errors import BadParametersError, FramekitError
from .frames import (
    COMPLEX,
    Frame,
    ToleranceConfig,
    analysis_matrix,
    excess,
    frame_bounds,
    is_frame,
    is_parseval,
    synthesis_matrix,
)
from .duals import (
    canonical_dual,
    check_duality,
    dual_from_free_operator,
    dual_from_projection,
    verify_excess_equality,
    verify_lemma_decomposition,
)
from .parseval import (
    construct_parseval_dual,
    nonexistence_reasons,
    parseval_dual_exists,
)
from .identity import (
    IndexSet,
    identity_sides,
    nu_bounds,
    nu_minus_global,
    tail_threshold,
    verify_tail_bound,
)
from .generators import KINDS, generate
from .io import Report, read_frame, read_matrix, rows_obj, vector_obj, write_frame
from .linalg import adjoint, gaussian_matrix, operator_norm


def _resolve_seed(args: argparse.Namespace) -> int:
    if getattr(args, "seed", None) is not None:
        return int(args.seed)
    raw = os.environ.get("FRAMEKIT_SEED", "").strip()
    if not raw:
        return 0
    try:
        return int(raw)
    except ValueError as exc:
        raise BadParametersError(
            f"FRAMEKIT_SEED must be an integer, got {raw!r}") from exc


def _parse_index_list(text: str, n: int) -> IndexSet:
    text = text.strip()
    if not text:
        return IndexSet(members=(), n=n)
    try:
        members = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise BadParametersError(
            f"index list must be comma-separated integers, got {text!r}") from exc
    return IndexSet(members=members, n=n)


def _parse_alpha(text: Optional[str]) -> Optional[np.ndarray]:
    if text is None:
        return None
    try:
        return np.array([float(part) for part in text.split(",")])
    except ValueError as exc:
        raise BadParametersError(
            f"alpha must be comma-separated numbers, got {text!r}") from exc


def _random_unit_vectors(rng: np.random.Generator, dim: int, count: int,
                         complex_valued: bool) -> np.ndarray:
    x = gaussian_matrix(rng, count, dim, complex_valued)
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def _cmd_analyze(args: argparse.Namespace, tol: ToleranceConfig, seed: int) -> Report:
    f = read_frame(args.frame)
    bounds = frame_bounds(f)
    spanning = is_frame(f, tol)
    payload = {
        "n": f.n,
        "dim": f.dim,
        "field": f.field,
        "a_opt": bounds.a_opt,
        "b_opt": bounds.b_opt,
        "is_frame": spanning,
        "is_parseval": is_parseval(f, tol),
        "norms_sq": [float(v) for v in np.sum(np.abs(f.vectors) ** 2, axis=1)],
    }
    if spanning:
        report = excess(f, tol)
        payload["excess"] = report.excess
        payload["rank"] = report.rank
        payload["singular_values"] = report.singular_values
    else:
        payload["excess"] = None
        payload["rank"] = None
        payload["singular_values"] = None
    return Report(command="analyze", inputs={"frame": args.frame, "seed": seed},
                  verdict="n/a", payload=payload, tolerances=tol)


def _cmd_dual(args: argparse.Namespace, tol: ToleranceConfig, seed: int) -> Report:
    f = read_frame(args.frame)
    if args.mode == "canonical":
        g = canonical_dual(f, tol)
    elif args.mode == "from-projection":
        if not args.proj:
            raise BadParametersError("--proj is required for mode from-projection")
        g = dual_from_projection(f, read_matrix(args.proj), tol)
    elif args.mode == "from-w":
        if not args.w:
            raise BadParametersError("--w is required for mode from-w")
        g = dual_from_free_operator(f, read_matrix(args.w), tol)
    else:  # random
        w = gaussian_matrix(np.random.default_rng(seed), f.n, f.dim,
                            f.field == COMPLEX)
        g = dual_from_free_operator(f, w, tol)
    report = check_duality(f, g, tol)
    equal = verify_excess_equality(f, g, tol)
    if args.out:
        write_frame(g, args.out)
    payload = {
        "mode": args.mode,
        "dual_vectors": rows_obj(g.vectors, g.field),
        "deviation_norm": report.deviation_norm,
        "min_singular_vu": report.min_singular_vu,
        "excess_f": excess(f, tol).excess,
        "excess_g": excess(g, tol).excess,
        "excess_equal": equal,
    }
    verdict = "pass" if report.is_exact_dual and equal else "fail"
    inputs = {"frame": args.frame, "mode": args.mode, "proj": args.proj,
              "w": args.w, "out": args.out, "seed": seed}
    return Report(command="dual", inputs=inputs, verdict=verdict,
                  payload=payload, tolerances=tol)


def _cmd_check(args: argparse.Namespace, tol: ToleranceConfig, seed: int) -> Report:
    f = read_frame(args.frame)
    g = read_frame(args.other)
    report = check_duality(f, g, tol)
    payload = {
        "is_exact_dual": report.is_exact_dual,
        "is_pseudo_dual": report.is_pseudo_dual,
        "is_approx_dual": report.is_approx_dual,
        "deviation_norm": report.deviation_norm,
        "min_singular_vu": report.min_singular_vu,
        "excess_f": excess(f, tol).excess,
        "excess_g": excess(g, tol).excess,
    }
    if report.is_pseudo_dual:
        equal = verify_excess_equality(f, g, tol)
        payload["excess_equal"] = equal
        verdict = "pass" if equal else "fail"
    else:
        payload["excess_equal"] = None
        verdict = "n/a"
    inputs = {"frame": args.frame, "other": args.other, "seed": seed}
    return Report(command="check", inputs=inputs, verdict=verdict,
                  payload=payload, tolerances=tol)


def _cmd_parseval_dual(args: argparse.Namespace, tol: ToleranceConfig,
                       seed: int) -> Report:
    f = read_frame(args.frame)
    existence = parseval_dual_exists(f, tol)
    payload = {
        "exists": existence.exists,
        "a_opt": existence.a_opt,
        "deviation_dim": existence.deviation_dim,
        "excess": existence.excess_val,
        "reasons": nonexistence_reasons(existence, tol),
    }
    verdict = "pass"
    if existence.exists:
        g = construct_parseval_dual(f, tol).dual
        v = analysis_matrix(g)
        residual_parseval = operator_norm(adjoint(v) @ v - np.eye(f.dim))
        residual_dual = operator_norm(
            synthesis_matrix(g) @ analysis_matrix(f) - np.eye(f.dim))
        payload["dual_vectors"] = rows_obj(g.vectors, g.field)
        payload["residual_parseval"] = residual_parseval
        payload["residual_dual"] = residual_dual
        if residual_parseval > tol.atol or residual_dual > tol.atol:
            verdict = "fail"
        if args.out:
            write_frame(g, args.out)
    inputs = {"frame": args.frame, "out": args.out, "seed": seed}
    return Report(command="parseval-dual", inputs=inputs, verdict=verdict,
                  payload=payload, tolerances=tol)


def _cmd_nu(args: argparse.Namespace, tol: ToleranceConfig, seed: int) -> Report:
    f = read_frame(args.frame)
    lower = 0.75 - tol.atol
    if args.global_min:
        value, witness = nu_minus_global(f, tol)
        payload = {"mode": "global", "nu_minus": value,
                   "witness_j": list(witness.members)}
        verdict = "pass" if value >= lower else "fail"
        j_echo = None
    else:
        j = _parse_index_list(args.j, f.n)
        bounds = nu_bounds(f, j, tol)
        in_range = bounds.nu_minus >= lower and bounds.nu_plus <= 1.0 + tol.atol
        payload = {
            "mode": "subset",
            "j": list(j.members),
            "nu_minus": bounds.nu_minus,
            "nu_plus": bounds.nu_plus,
            "argmin_vector": vector_obj(bounds.argmin_vector, f.field),
            "argmax_vector": vector_obj(bounds.argmax_vector, f.field),
            "in_range": in_range,
        }
        verdict = "pass" if in_range else "fail"
        j_echo = args.j
    inputs = {"frame": args.frame, "j": j_echo,
              "global_min": bool(args.global_min), "seed": seed}
    return Report(command="nu", inputs=inputs, verdict=verdict,
                  payload=payload, tolerances=tol)


def _cmd_identity(args: argparse.Namespace, tol: ToleranceConfig, seed: int) -> Report:
    f = read_frame(args.frame)
    if args.trials < 1:
        raise BadParametersError("--trials must be at least 1")
    j = _parse_index_list(args.j, f.n)
    rng = np.random.default_rng(seed)
    xs = _random_unit_vectors(rng, f.dim, args.trials, f.field == COMPLEX)
    worst = 0.0
    for x in xs:
        lhs, rhs = identity_sides(f, j, x, tol)
        worst = max(worst, abs(lhs - rhs))
    payload = {"j": list(j.members), "trials": args.trials, "max_residual": worst}
    verdict = "pass" if worst <= tol.atol else "fail"
    inputs = {"frame": args.frame, "j": args.j, "trials": args.trials, "seed": seed}
    return Report(command="identity", inputs=inputs, verdict=verdict,
                  payload=payload, tolerances=tol)


def _cmd_tail(args: argparse.Namespace, tol: ToleranceConfig, seed: int) -> Report:
    f = read_frame(args.frame)
    n0 = tail_threshold(f, args.eps, tol)
    if args.j is not None:
        j = _parse_index_list(args.j, f.n)
    else:
        j = IndexSet.from_iterable(range(1, n0 + 1), f.n)
    holds = verify_tail_bound(f, args.eps, j, tol)
    payload = {
        "n0": n0,
        "j": list(j.members),
        "nu_minus": nu_bounds(f, j, tol).nu_minus,
        "nu_minus_mirrored": nu_bounds(f, j.complement(), tol).nu_minus,
        "bound": 1.0 - args.eps,
        "holds": holds,
    }
    inputs = {"frame": args.frame, "eps": args.eps, "j": args.j, "seed": seed}
    return Report(command="tail", inputs=inputs,
                  verdict="pass" if holds else "fail",
                  payload=payload, tolerances=tol)


def _cmd_lemma(args: argparse.Namespace, tol: ToleranceConfig, seed: int) -> Report:
    f = read_frame(args.frame)
    g = read_frame(args.other)
    if args.probes < 1:
        raise BadParametersError("--probes must be at least 1")
    report = verify_lemma_decomposition(analysis_matrix(f), synthesis_matrix(g),
                                        args.probes, seed, tol)
    residuals = {
        "st_is_identity_residual": report.st_is_identity_residual,
        "kernel_match_residual": report.kernel_match_residual,
        "direct_sum_residual": report.direct_sum_residual,
        "idempotent_residual": report.idempotent_residual,
    }
    verdict = "pass" if max(residuals.values()) <= tol.atol else "fail"
    inputs = {"frame": args.frame, "other": args.other,
              "probes": args.probes, "seed": seed}
    return Report(command="lemma", inputs=inputs, verdict=verdict,
                  payload=residuals, tolerances=tol)


def _cmd_gen(args: argparse.Namespace, tol: ToleranceConfig, seed: int) -> Report:
    frame = generate(args.kind, dim=args.dim, n=args.n, seed=seed,
                     field=args.field, k=args.k, alpha=_parse_alpha(args.alpha),
                     tol=tol)
    write_frame(frame, args.out)
    payload = {
        "kind": args.kind,
        "n": frame.n,
        "dim": frame.dim,
        "field": frame.field,
        "excess": excess(frame, tol).excess,
        "is_parseval": is_parseval(frame, tol),
        "out": args.out,
    }
    inputs = {"kind": args.kind, "dim": args.dim, "n": args.n, "k": args.k,
              "alpha": args.alpha, "field": args.field, "out": args.out,
              "seed": seed}
    return Report(command="gen", inputs=inputs, verdict="n/a",
                  payload=payload, tolerances=tol)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framekit",
        description="Finite frame toolkit: bounds, excess, duals, Parseval "
                    "duals, and subset quantity bounds.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--rank-rtol", type=float, default=1e-10,
                        help="relative singular-value cutoff for rank decisions")
    common.add_argument("--atol", type=float, default=1e-8,
                        help="absolute comparison tolerance")
    common.add_argument("--eig-one-atol", type=float, default=1e-8,
                        help="band half-width for eigenvalue-equals-1 tests")
    common.add_argument("--seed", type=int, default=None,
                        help="RNG seed (default: FRAMEKIT_SEED or 0)")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("analyze", parents=[common],
                       help="bounds, Parseval flag, excess, and norms")
    p.add_argument("frame", help="frame JSON file")
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("dual", parents=[common], help="compute a dual frame")
    p.add_argument("frame")
    p.add_argument("--mode", choices=["canonical", "from-projection",
                                      "from-w", "random"], default="canonical")
    p.add_argument("--proj", help="projection matrix file (from-projection)")
    p.add_argument("--w", help="free-operator matrix file (from-w)")
    p.add_argument("--out", help="write the dual frame here")
    p.set_defaults(handler=_cmd_dual)

    p = sub.add_parser("check", parents=[common],
                       help="duality classification and excess equality")
    p.add_argument("frame")
    p.add_argument("other")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("parseval-dual", parents=[common],
                       help="Parseval dual existence, construction, verification")
    p.add_argument("frame")
    p.add_argument("--out", help="write the constructed dual here")
    p.set_defaults(handler=_cmd_parseval_dual)

    p = sub.add_parser("nu", parents=[common],
                       help="subset quantity bounds (per J or global minimum)")
    p.add_argument("frame")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--j", help="comma-separated 1-based indices (may be empty)")
    group.add_argument("--global-min", action="store_true",
                       help="minimize nu_minus over all index subsets")
    p.set_defaults(handler=_cmd_nu)

    p = sub.add_parser("identity", parents=[common],
                       help="two-sided identity residual over random vectors")
    p.add_argument("frame")
    p.add_argument("--j", required=True,
                   help="comma-separated 1-based indices (may be empty)")
    p.add_argument("--trials", type=int, default=100)
    p.set_defaults(handler=_cmd_identity)

    p = sub.add_parser("tail", parents=[common],
                       help="norm-deficit tail threshold and lower bound check")
    p.add_argument("frame")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--j", help="index set containing 1..n0 (default exactly 1..n0)")
    p.set_defaults(handler=_cmd_tail)

    p = sub.add_parser("lemma", parents=[common],
                       help="decomposition-lemma residuals on a dual pair")
    p.add_argument("frame")
    p.add_argument("other")
    p.add_argument("--probes", type=int, default=25)
    p.set_defaults(handler=_cmd_lemma)

    p = sub.add_parser("gen", parents=[common], help="generate a frame file")
    p.add_argument("--kind", choices=list(KINDS), required=True)
    p.add_argument("--dim", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int, help="adjoined-vector count (near-riesz)")
    p.add_argument("--alpha", help="comma-separated coefficients (projected-basis)")
    p.add_argument("--field", choices=["real", "complex"], default="real")
    p.add_argument("--out", required=True)
    p.set_defaults(handler=_cmd_gen)
    return parser


def run_command(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        tol = ToleranceConfig(rank_rtol=args.rank_rtol, atol=args.atol,
                              eig_one_atol=args.eig_one_atol)
        seed = _resolve_seed(args)
        report = args.handler(args, tol, seed)
    except FramekitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json())
    return 0 if report.verdict in ("pass", "n/a") else 1


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
