"""Command-line interface.

Subcommands: classify, sweep, parent-ham, secant-dim, slocc.  States come
either from a JSON file (--file) or by name (--state ghz|w|x|dicke with --n
and the family parameters).  Exit codes: 0 success, 2 usage or parse error,
3 numerically unstable result, 4 domain error.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .catalecticant import secant_dim_estimate
from .errors import ArgumentError, DomainError, NumericalError, ResourceError
from .rdm import interaction_length, parent_hamiltonian
from .scalars import ModeError
from .slocc import asymptotic_sweep, slocc_apply
from .states import EXACT, FLOAT, standard_state
from .stateio import (
    dump_json,
    load_matrix_file,
    load_state_file,
    parent_ham_to_dict,
    parse_scalar,
    report_to_dict,
    state_to_dict,
    sweep_to_csv,
    sweep_to_dicts,
)
from .sylvester import classify

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_UNSTABLE = 3
EXIT_DOMAIN = 4


def _add_state_arguments(parser):
    parser.add_argument("--state", choices=["ghz", "w", "x", "dicke"],
                        help="named standard state")
    parser.add_argument("--n", type=int, help="party count for --state")
    parser.add_argument("--w", default="1",
                        help="weight parameter of the x family (rational or float)")
    parser.add_argument("--dicke", help="multi-index for --state dicke, e.g. 2,1")
    parser.add_argument("--file", help="JSON state file")


def _add_common_arguments(parser):
    parser.add_argument("--mode", choices=[EXACT, FLOAT], default=EXACT)
    parser.add_argument("--tol", type=float, default=1e-9)
    parser.add_argument("--seed", type=int, default=0)


def _build_state(args):
    if args.file and args.state:
        raise ArgumentError("give either --state or --file, not both")
    if args.file:
        return load_state_file(args.file, mode=args.mode)
    if not args.state:
        raise ArgumentError("a state is required: --state NAME --n N, or --file PATH")
    if args.n is None:
        raise ArgumentError("--state needs --n")
    kwargs = {"mode": args.mode}
    if args.state == "x":
        kwargs["w"] = parse_scalar(args.w, args.mode)
    if args.state == "dicke":
        if not args.dicke:
            raise ArgumentError("--state dicke needs --dicke n0,n1")
        kwargs["dicke"] = tuple(int(part) for part in args.dicke.split(","))
    return standard_state(args.state, args.n, **kwargs)


def _emit(text, out_path=None):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_classify(args):
    state = _build_state(args)
    report = classify(state, tol=args.tol, seed=args.seed)
    if args.format == "json":
        _emit(dump_json(report_to_dict(report)), args.out)
    else:
        lines = [
            f"N: {report.N}",
            f"mode: {report.rank_profile.mode}",
            "rank profile C_1..C_{N-1}: "
            + " ".join(str(r) for r in report.rank_profile.ranks),
            f"border rank (secant family): {report.border_rank}"
            f"  [sigma_{report.border_rank}]",
            f"symmetric rank: {report.symmetric_rank}",
            f"class: {report.label_text}  [{report.taxonomy}]",
        ]
        if report.witness is not None:
            lines.append(
                f"witness: {len(report.witness.terms)}-term decomposition"
                f" (exact: {report.witness_exact})"
            )
        if report.tangent_certificate is not None:
            cert = report.tangent_certificate
            lines.append(
                f"tangent certificate: kernel family at degree {cert.degree} "
                f"shares a repeated root"
            )
        if report.flags:
            lines.append("flags: " + "; ".join(report.flags))
        _emit("\n".join(lines), args.out)
    if report.flags:
        return EXIT_UNSTABLE
    return EXIT_OK


def _parse_eps_grid(args):
    if args.eps_grid:
        try:
            values = [float(x) for x in args.eps_grid.split(",") if x.strip()]
        except ValueError as exc:
            raise ArgumentError(f"invalid epsilon grid: {exc}") from exc
    elif args.eps_start is not None and args.eps_stop is not None:
        import numpy as np

        values = list(
            np.geomspace(args.eps_start, args.eps_stop, num=args.eps_points)
        )
    else:
        raise ArgumentError("give --eps-grid or --eps-start/--eps-stop")
    if not values:
        raise ArgumentError("empty epsilon grid")
    return values


def _cmd_sweep(args):
    if args.protocol != "ghz-to-w":
        raise ArgumentError(f"unknown protocol {args.protocol!r}")
    rows = asymptotic_sweep(_parse_eps_grid(args))
    if args.format == "json":
        _emit(dump_json({"schema": 1, "rows": sweep_to_dicts(rows)}), args.out)
    else:
        _emit(sweep_to_csv(rows), args.out)
    return EXIT_OK


def _cmd_parent_ham(args):
    state = _build_state(args)
    if args.j == "auto":
        j = interaction_length(state, tol=args.tol)
    else:
        try:
            j = int(args.j)
        except ValueError as exc:
            raise ArgumentError(f"--j must be an integer or 'auto', got {args.j!r}") from exc
    ham = parent_hamiltonian(state, j, cap=args.cap, tol=args.tol)
    if args.format == "text":
        lines = [
            f"N: {ham.N}",
            f"interaction length j: {ham.j}",
            f"terms at positions: {', '.join(map(str, ham.positions))}",
            f"residual |H psi| / (|H| |psi|): {ham.residual:.3e}",
            f"min eigenvalue: {ham.min_eigenvalue:.3e}",
            f"ground space dimension: {ham.ground_space_dim}",
        ]
        _emit("\n".join(lines), args.out)
    else:
        _emit(
            dump_json(parent_ham_to_dict(ham, include_sparse=args.export_h)),
            args.out,
        )
    return EXIT_OK


def _cmd_secant_dim(args):
    predicted = min(2 * args.k - 1, args.n)
    estimated = secant_dim_estimate(
        args.n, args.k, samples=args.samples, seed=args.seed
    )
    match = estimated == predicted
    if args.format == "json":
        _emit(
            dump_json(
                {
                    "schema": 1,
                    "N": args.n,
                    "k": args.k,
                    "estimated": estimated,
                    "predicted": predicted,
                    "match": match,
                }
            ),
            args.out,
        )
    else:
        flag = "ok" if match else "MISMATCH"
        _emit(
            f"N={args.n} k={args.k} estimated={estimated} "
            f"predicted=min(2k-1,N)={predicted} [{flag}]",
            args.out,
        )
    return EXIT_OK if match else EXIT_UNSTABLE


def _cmd_slocc(args):
    state = _build_state(args)
    operator = load_matrix_file(args.matrix, mode=args.mode)
    if not operator.is_invertible():
        raise ArgumentError("the operator matrix is singular")
    before = classify(state, tol=args.tol, seed=args.seed)
    moved = slocc_apply(state, operator)
    after = classify(moved, tol=args.tol, seed=args.seed)
    _emit(dump_json(state_to_dict(moved)), args.out)
    sys.stdout.write(
        f"label before: {before.label_text}\nlabel after:  {after.label_text}\n"
    )
    if before.label_text != after.label_text:
        sys.stderr.write(
            "warning: classification changed under an invertible operator; "
            "this indicates numerical instability\n"
        )
        return EXIT_UNSTABLE
    if before.flags or after.flags:
        return EXIT_UNSTABLE
    return EXIT_OK


# ---------------------------------------------------------------------------
# driver
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="entfam",
        description=(
            "Classify symmetric multiqubit states into entanglement families "
            "(secant varieties via catalecticant ranks), refine into proper "
            "versus tangent classes, and build parent Hamiltonians."
        ),
    )
    parser.add_argument("--version", action="version", version=f"entfam {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="entanglement family and class of a state")
    _add_state_arguments(p)
    _add_common_arguments(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", help="write the report to a file")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("sweep", help="asymptotic GHZ -> W conversion table")
    p.add_argument("--protocol", default="ghz-to-w")
    p.add_argument("--eps-grid", help="comma-separated epsilon values")
    p.add_argument("--eps-start", type=float)
    p.add_argument("--eps-stop", type=float)
    p.add_argument("--eps-points", type=int, default=13)
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", help="write the table to a file")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("parent-ham", help="construct and verify a parent Hamiltonian")
    _add_state_arguments(p)
    _add_common_arguments(p)
    p.add_argument("--j", default="auto", help="interaction length, or 'auto'")
    p.add_argument("--cap", type=int, default=2 ** 14)
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.add_argument("--export-h", action="store_true",
                   help="include the Hamiltonian as sparse triplets")
    p.add_argument("--out", help="write the report to a file")
    p.set_defaults(func=_cmd_parent_ham)

    p = sub.add_parser("secant-dim", help="Monte Carlo secant variety dimension")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_secant_dim)

    p = sub.add_parser("slocc", help="apply an invertible local operator")
    _add_state_arguments(p)
    _add_common_arguments(p)
    p.add_argument("--matrix", required=True, help="JSON matrix file")
    p.add_argument("--out", help="write the transformed state to a file")
    p.set_defaults(func=_cmd_slocc)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else EXIT_OK
    try:
        return args.func(args)
    except (ArgumentError, ModeError, FileNotFoundError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        sys.stderr.write(f"domain error: {exc}\n")
        return EXIT_DOMAIN
    except (NumericalError, ResourceError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_UNSTABLE


def console_main():
    raise SystemExit(main())


if __name__ == "__main__":
    console_main()
