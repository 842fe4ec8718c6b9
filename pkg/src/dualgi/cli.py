"""Command-line front end.

    dualgi inverse --kind cep matrix.json
    dualgi decompose matrix.json
    dualgi solve --mode general matrix.json rhs.json

Reports are emitted as JSON on standard output.  Exit statuses:
0 success, 1 usage/parse error, 2 proven nonexistence, 3 theorem
hypothesis failure.  The default tolerance (1e-10) can be overridden
with --tol or the DUALGI_TOL environment variable.
"""

import argparse
import hashlib
import json
import os
import sys
import time

import numpy as np

from . import decomposition, inverses, io, relations, solver
from .dual import DualMatrix
from .errors import DimensionError, HypothesisError, InverseNotExistError
from .realkernel import DEFAULT_TOL

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NOT_EXIST = 2
EXIT_HYPOTHESIS = 3

TOL_ENV_VAR = "DUALGI_TOL"

_INVERSE_KINDS = {
    "mpdgi": lambda ah, tol: inverses.mpdgi(ah),
    "dmpgi": inverses.dmpgi,
    "ddgi": inverses.ddgi,
    "group": inverses.dual_group,
    "core": inverses.dual_core_inverse,
    "cep": inverses.dcepgi,
    "cep-compact": inverses.dcepgi_compact,
}

_EXISTENCE_TESTS = {
    "dmpgi": inverses.dmpgi_exists,
    "ddgi": inverses.ddgi_exists,
    "group": inverses.dcepgi_exists,
    "core": inverses.dcepgi_exists,
    "cep": inverses.dcepgi_exists,
    "cep-compact": inverses.dcepgi_exists,
}


def _digest(path):
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _certificate_dict(cert):
    if cert is None:
        return None
    return {
        "exists": cert.exists,
        "residuals": {k: float(v) for k, v in cert.residuals.items()},
        "tolerance": cert.tolerance,
    }


def _default_tol():
    env = os.environ.get(TOL_ENV_VAR)
    if env is not None:
        try:
            return float(env)
        except ValueError:
            raise SystemExit(f"invalid {TOL_ENV_VAR} value: {env!r}")
    return DEFAULT_TOL


def _emit(report, output):
    text = json.dumps(report, indent=2)
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    print(text)


def cmd_inverse(args):
    name, ah = io.read_dual_matrix(args.input)
    start = time.perf_counter()
    report = {
        "command": f"inverse {args.kind}",
        "inputs": {args.input: _digest(args.input)},
        "tolerance": args.tol,
    }
    try:
        result = _INVERSE_KINDS[args.kind](ah, args.tol) \
            if args.kind != "mpdgi" else inverses.mpdgi(ah)
    except InverseNotExistError as exc:
        report["exists"] = False
        report["message"] = str(exc)
        report["certificate"] = _certificate_dict(exc.certificate)
        report["elapsed_seconds"] = time.perf_counter() - start
        _emit(report, args.output)
        return EXIT_NOT_EXIST
    report["exists"] = True
    report["result"] = io.dual_matrix_to_dict(result, name=f"{name or 'input'}_{args.kind}")
    if args.kind in _EXISTENCE_TESTS:
        cert = _EXISTENCE_TESTS[args.kind](ah, args.tol)
        report["certificate"] = _certificate_dict(cert)
    report["elapsed_seconds"] = time.perf_counter() - start
    _emit(report, args.output)
    return EXIT_OK


def cmd_decompose(args):
    name, ah = io.read_dual_matrix(args.input)
    start = time.perf_counter()
    d = decomposition.dual_core_ep_decompose(ah, args.tol)
    recon_res = (d.reconstruct() - ah).norm() / (1.0 + ah.norm())
    report = {
        "command": "decompose",
        "inputs": {args.input: _digest(args.input)},
        "tolerance": args.tol,
        "rank_of_power": d.t,
        "index": d.m,
        "canonical": d.canonical,
        "U_hat": io.dual_matrix_to_dict(d.U_hat, name="U_hat"),
        "T1_hat": io.dual_matrix_to_dict(d.T1_hat, name="T1_hat"),
        "T2_hat": io.dual_matrix_to_dict(d.T2_hat, name="T2_hat"),
        "N_hat": io.dual_matrix_to_dict(d.N_hat, name="N_hat"),
        "U3": d.U3.tolist(),
        "reconstruction_residual": recon_res,
    }
    cert = inverses.dcepgi_exists(ah, args.tol)
    report["dcepgi_certificate"] = _certificate_dict(cert)
    if cert.exists:
        split = decomposition.dual_cn_split(ah, args.tol)
        report["core_part"] = io.dual_matrix_to_dict(split.core, name="core")
        report["nilpotent_part"] = io.dual_matrix_to_dict(split.nilpotent,
                                                          name="nilpotent")
    report["elapsed_seconds"] = time.perf_counter() - start
    _emit(report, args.output)
    return EXIT_OK


def cmd_solve(args):
    name, ah = io.read_dual_matrix(args.matrix)
    _, bhat = io.read_dual_vector(args.rhs)
    start = time.perf_counter()
    report = {
        "command": f"solve {args.mode}",
        "inputs": {args.matrix: _digest(args.matrix),
                   args.rhs: _digest(args.rhs)},
        "tolerance": args.tol,
        "seed": args.seed,
    }
    if args.mode == "general":
        sol = solver.solve_general(ah, bhat, args.tol)
        report["particular"] = io.dual_vector_to_dict(sol.particular,
                                                      name="particular")
        report["homogeneous_projector"] = io.dual_matrix_to_dict(
            sol.homogeneous_projector, name="projector")
        report["residual"] = sol.residual
        # spot-check random homogeneous shifts
        rng = np.random.default_rng(args.seed)
        from .dual import DualVector, dual_power
        from .inverses import dmpgi, _eff_index
        m = _eff_index(ah.std)
        ahm = dual_power(ah, m)
        rhs_fixed = dual_power(ah, 2 * m) @ (dmpgi(ahm, args.tol) @ bhat)
        checks = []
        for _ in range(args.spot_checks):
            yhat = DualVector(rng.standard_normal(len(bhat)),
                              rng.standard_normal(len(bhat)))
            xh = sol.solution(yhat)
            res = (dual_power(ah, m + 1) @ xh - rhs_fixed).norm() \
                / (1.0 + bhat.norm())
            checks.append(res)
        report["spot_check_residuals"] = checks
    else:
        xhat = solver.solve_unique_in_range(ah, bhat, args.tol)
        report["solution"] = io.dual_vector_to_dict(xhat, name="solution")
    report["elapsed_seconds"] = time.perf_counter() - start
    _emit(report, args.output)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="dualgi",
        description="Generalized inverses of dual-number matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--tol", type=float, default=None,
                       help="residual tolerance (default 1e-10, or "
                            f"{TOL_ENV_VAR})")
        p.add_argument("--seed", type=int, default=0,
                       help="seed for randomized spot checks")
        p.add_argument("--output", default=None,
                       help="also write the report to this path")

    p_inv = sub.add_parser("inverse", help="compute a dual generalized inverse")
    p_inv.add_argument("--kind", required=True, choices=sorted(_INVERSE_KINDS))
    p_inv.add_argument("input", help="dual matrix JSON file")
    add_common(p_inv)
    p_inv.set_defaults(func=cmd_inverse)

    p_dec = sub.add_parser("decompose", help="dual core-EP decomposition")
    p_dec.add_argument("input", help="dual matrix JSON file")
    add_common(p_dec)
    p_dec.set_defaults(func=cmd_decompose)

    p_sol = sub.add_parser("solve", help="solve a dual linear system")
    p_sol.add_argument("matrix", help="dual matrix JSON file")
    p_sol.add_argument("rhs", help="dual vector JSON file")
    p_sol.add_argument("--mode", choices=["general", "unique-in-range"],
                       default="general")
    p_sol.add_argument("--spot-checks", type=int, default=5)
    add_common(p_sol)
    p_sol.set_defaults(func=cmd_solve)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    if args.tol is None:
        args.tol = _default_tol()
    try:
        return args.func(args)
    except InverseNotExistError as exc:
        print(json.dumps({"error": str(exc), "exists": False,
                          "certificate": _certificate_dict(exc.certificate)},
                         indent=2))
        return EXIT_NOT_EXIST
    except HypothesisError as exc:
        print(json.dumps({"error": str(exc)}, indent=2))
        return EXIT_HYPOTHESIS
    except (OSError, ValueError, KeyError, DimensionError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
