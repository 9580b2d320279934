"""Command-line front end.

Exit codes: 0 success/pass, 1 verdict failure, 2 input error, 3 internal
self-check failure.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import golden, interp, schurclass, serialize
from .errors import SchurInterpError, SelfCheckFailed, ValidationMismatch
from .ratfun import Poly, RatFun, const, identity, ratfun_reduce
from .schurclass import Blaschke, ContourSpec


class InputError(Exception):
    pass


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_problem(args):
    if not args.problem:
        raise InputError("--problem is required")
    problem = serialize.problem_from_json(_load_json(args.problem))
    if getattr(args, "kappa", None) is not None:
        problem = interp.InterpProblem(nodes=problem.nodes, kappa=args.kappa)
    return problem


def parse_function_spec(spec):
    """Mini-language for rational functions: const:<re>[,<im>], identity,
    ratio:<numfile>:<denfile>, blaschke:<zerosfile>."""
    if spec == "identity":
        return identity()
    if spec.startswith("const:"):
        parts = spec[len("const:"):].split(",")
        try:
            re = float(parts[0])
            im = float(parts[1]) if len(parts) > 1 else 0.0
        except (ValueError, IndexError) as exc:
            raise InputError(f"bad const spec {spec!r}") from exc
        return const(complex(re, im))
    if spec.startswith("ratio:"):
        parts = spec[len("ratio:"):].split(":")
        if len(parts) != 2:
            raise InputError(f"bad ratio spec {spec!r}")
        num = [serialize.pair_to_complex(p) for p in _load_json(parts[0])]
        den = [serialize.pair_to_complex(p) for p in _load_json(parts[1])]
        return ratfun_reduce(Poly(num), Poly(den))
    if spec.startswith("blaschke:"):
        zeros = [serialize.pair_to_complex(p) for p in _load_json(spec[len("blaschke:"):])]
        return schurclass.blaschke_from_zeros(zeros).as_ratfun()
    raise InputError(f"unrecognized function spec {spec!r}")


def parse_blaschke_spec(spec):
    if spec.startswith("blaschke:"):
        zeros = [serialize.pair_to_complex(p) for p in _load_json(spec[len("blaschke:"):])]
        return schurclass.blaschke_from_zeros(zeros)
    if spec.startswith("const:"):
        # degree-zero product with the given unimodular factor
        f = parse_function_spec(spec)
        return schurclass.blaschke_from_zeros([], f.num.coeffs[0])
    raise InputError(f"unrecognized Blaschke spec {spec!r}")


def _load_param(args):
    if args.param_e:
        return interp.ParamPair.from_e(parse_function_spec(args.param_e))
    if args.param_s:
        S = parse_function_spec(args.param_s)
        B = parse_blaschke_spec(args.param_b) if args.param_b else Blaschke(zeros=())
        return interp.ParamPair(S=S, B=B)
    raise InputError("a parameter is required (--param-e or --param-s [--param-b])")


def _contour(args):
    return ContourSpec(radius=args.radius, points=args.points)


def _grid(args, f=None):
    if args.grid_file:
        return [serialize.pair_to_complex(p) for p in _load_json(args.grid_file)]
    avoid = [p for p, _ in f.poles()] if f is not None else ()
    return schurclass.default_grid(avoid=avoid)


def _emit(args, report, text_lines=None):
    if args.text and text_lines is not None:
        print("\n".join(text_lines))
    else:
        print(serialize.dumps(report))


def cmd_analyze(args):
    problem = _load_problem(args)
    ps = interp.pick_system(problem, require_invertible=False)
    report = {
        "pick_matrix": serialize.matrix_to_json(ps.P),
        "inertia": list(ps.inertia.as_tuple()),
        "min_kappa": ps.min_kappa,
        "invertible": ps.P_inv is not None,
    }
    if ps.P_inv is not None:
        report["pick_inverse"] = serialize.matrix_to_json(ps.P_inv)
    _emit(args, report, [
        f"Pick matrix inertia (pos, neg, zero): {ps.inertia.as_tuple()}",
        f"minimal kappa: {ps.min_kappa}",
        f"invertible: {ps.P_inv is not None}",
    ])
    return 0


def cmd_theta(args):
    problem = _load_problem(args)
    theta = interp.build_theta(interp.pick_system(problem))
    report_sc = interp.theta_selfcheck(theta)
    report = {
        "entries": [[serialize.ratfun_to_json(theta[a, b]) for b in range(2)]
                    for a in range(2)],
        "det_closed_form": serialize.ratfun_to_json(theta.det_closed_form),
        "selfcheck": report_sc.as_dict(),
    }
    _emit(args, report, [
        "coefficient matrix entries:",
        *(f"  [{a}][{b}] = {serialize.ratfun_pretty(theta[a, b])}"
          for a in range(2) for b in range(2)),
        f"self-check: {report_sc.as_dict()}",
    ])
    return 0


def cmd_solve(args):
    problem = _load_problem(args)
    theta = interp.build_theta(interp.pick_system(problem))
    param = _load_param(args)
    res = interp.lft_apply(theta, param)
    adm, detail = interp.admissible(theta, param, problem)
    verdict = interp.verify_solution(problem, res.f, tol=args.tol_verify)
    report = {
        "f": serialize.ratfun_to_json(res.f),
        "admissible": adm,
        "verdict": verdict.as_dict(),
    }
    _emit(args, report, [
        f"f = {serialize.ratfun_pretty(res.f)}",
        f"admissible: {adm}",
        f"verdict: pass={verdict.passed} index={verdict.index}",
    ])
    return 0 if verdict.passed else 1


def cmd_verify(args):
    problem = _load_problem(args)
    f = parse_function_spec(args.f)
    verdict = interp.verify_solution(problem, f, tol=args.tol_verify)
    _emit(args, {"verdict": verdict.as_dict()}, [
        f"pass: {verdict.passed}",
        f"class index: {verdict.index}",
        "residuals: " + ", ".join(f"{r:.3g}" for r in verdict.residuals),
        *verdict.notes,
    ])
    return 0 if verdict.passed else 1


def cmd_invert(args):
    problem = _load_problem(args)
    theta = interp.build_theta(interp.pick_system(problem))
    f = parse_function_spec(args.f)
    E = interp.lft_invert(theta, f)
    _emit(args, {"parameter": serialize.ratfun_to_json(E)},
          [f"parameter = {serialize.ratfun_pretty(E)}"])
    return 0


def cmd_classify(args):
    problem = _load_problem(args)
    theta = interp.build_theta(interp.pick_system(problem))
    param = _load_param(args)
    report = interp.classify_parameter(theta, param, problem, tol=args.tol_verify)
    _emit(args, report.as_dict(), [
        f"node zero multiplicities: {list(report.m)}",
        f"index sets +/-/0: {list(report.I_plus)} {list(report.I_minus)} {list(report.I_zero)}",
        f"gamma: {report.gamma_m}",
        f"predicted class index: {report.predicted_index} (realized {report.realized_index})",
        f"retained conditions: {[list(rc) for rc in report.retained_conditions]}",
    ])
    return 0


def cmd_decompose(args):
    problem = _load_problem(args)
    f = parse_function_spec(args.f)
    dr = interp.divisor_remainder(problem, f)
    report = {
        "phi": serialize.poly_to_json(dr.phi),
        "theta_zeros": serialize.vector_to_json(np.asarray(dr.theta.zeros)),
        "h": serialize.ratfun_to_json(dr.h),
        "h_index": dr.h_index,
    }
    _emit(args, report, [
        f"phi = {serialize.ratfun_pretty(RatFun(dr.phi, Poly([1.0])))}",
        f"theta zeros: {list(dr.theta.zeros)}",
        f"h = {serialize.ratfun_pretty(dr.h)} (disk poles: {dr.h_index})",
    ])
    return 0


def cmd_omega(args):
    problem = _load_problem(args)
    if args.kappa is None:
        raise InputError("--kappa is required for omega")
    f = parse_function_spec(args.f)
    verdict = interp.omega_check(problem, args.kappa, f, grid=_grid(args, f))
    _emit(args, verdict.as_dict(), [
        f"divisor form: {verdict.divisor_form}",
        f"kernel bound: {verdict.kernel_bound}",
        f"inverse parameter: {verdict.inverse_parameter}",
        f"agree: {verdict.agree}",
    ])
    return 0 if verdict.member else 1


def cmd_selftest(args):
    passed, lines = golden.run_selftest()
    _emit(args, {"pass": passed, "checks": lines}, lines + [f"overall: {'PASS' if passed else 'FAIL'}"])
    return 0 if passed else 3


COMMANDS = {
    "analyze": cmd_analyze,
    "theta": cmd_theta,
    "solve": cmd_solve,
    "verify": cmd_verify,
    "invert": cmd_invert,
    "classify": cmd_classify,
    "decompose": cmd_decompose,
    "omega": cmd_omega,
    "selftest": cmd_selftest,
}


def build_parser():
    parser = argparse.ArgumentParser(
        prog="schurinterp",
        description="Multi-point interpolation in generalized Schur classes "
                    "on the unit disk: Pick matrix analysis, linear fractional "
                    "parametrization of solutions, verification and "
                    "classification.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in COMMANDS:
        p = sub.add_parser(verb)
        p.add_argument("--problem", help="problem JSON file")
        p.add_argument("--kappa", type=int, default=None,
                       help="target pole budget (class index)")
        p.add_argument("--param-e", help="generalized Schur parameter spec")
        p.add_argument("--param-s", help="Schur-part parameter spec")
        p.add_argument("--param-b", help="Blaschke-part parameter spec")
        p.add_argument("--f", help="candidate function spec")
        p.add_argument("--radius", type=float, default=0.85,
                       help="contour radius for quadrature (default 0.85)")
        p.add_argument("--points", type=int, default=128,
                       help="quadrature points per contour (default 128)")
        p.add_argument("--grid-file", help="JSON list of [re, im] grid points")
        p.add_argument("--tol-eig", type=float, default=None,
                       help="inertia eigenvalue threshold "
                            "(default 1e-9 * Frobenius norm)")
        p.add_argument("--tol-zero", type=float, default=1e-9,
                       help="zero/cancellation decision threshold (default 1e-9)")
        p.add_argument("--tol-verify", type=float, default=1e-9,
                       help="interpolation residual tolerance (default 1e-9)")
        fmt = p.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", default=True)
        fmt.add_argument("--text", action="store_true", default=False)
    return parser


def dispatch(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return COMMANDS[args.verb](args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (SelfCheckFailed, ValidationMismatch) as exc:
        print(f"internal self-check failure: {exc}", file=sys.stderr)
        return 3
    except SchurInterpError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
