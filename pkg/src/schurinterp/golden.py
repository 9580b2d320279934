"""Built-in golden fixture: the two-node problem f(0) = 1, f(1/2) = 1/2.

Its Pick matrix has one negative eigenvalue, so solutions exist exactly for
pole budgets kappa >= 1, and every quantity of interest has a closed form.
The self-test replays the whole pipeline against those closed forms.
"""

from __future__ import annotations

import numpy as np

from . import interp, schurclass
from .ratfun import Poly, RatFun, const, ratfun_reduce
from .schurclass import Blaschke

GOLDEN_P = np.array([[0.0, 0.5], [0.5, 1.0]], dtype=complex)
GOLDEN_P_INV = np.array([[-4.0, 2.0], [2.0, 0.0]], dtype=complex)

# Theta(z) = (2 - z)^{-1} [[3z-2, 2z(1-z)], [2(z-1), z(3-2z)]]
GOLDEN_THETA_NUMS = (
    (Poly([-2.0, 3.0]), Poly([0.0, 2.0, -2.0])),
    (Poly([-2.0, 2.0]), Poly([0.0, 3.0, -2.0])),
)
GOLDEN_THETA_DEN = Poly([2.0, -1.0])


def golden_problem(kappa=1):
    return interp.InterpProblem.simple([(0.0, 1.0), (0.5, 0.5)], kappa=kappa)


def golden_theta():
    return interp.build_theta(interp.pick_system(golden_problem()))


def golden_solution_half():
    """Image of the constant parameter 1/2: a one-pole solution."""
    theta = golden_theta()
    param = interp.ParamPair(S=const(0.5), B=Blaschke(zeros=()))
    return interp.lft_apply(theta, param).f


def golden_solution_pole():
    """Image of the parameter 1/(4z), which has a pole at the node 0."""
    theta = golden_theta()
    param = interp.ParamPair(S=const(0.25), B=Blaschke(zeros=(0.0,)))
    return interp.lft_apply(theta, param).f


def _close(a, b, tol):
    return np.max(np.abs(np.asarray(a) - np.asarray(b))) <= tol


def run_selftest():
    """Replay the golden suite; returns (passed, list of check lines)."""
    lines = []
    ok = True

    def check(name, cond):
        nonlocal ok
        ok = ok and bool(cond)
        lines.append(f"{'PASS' if cond else 'FAIL'}  {name}")

    problem = golden_problem()
    ps = interp.pick_system(problem)
    check("system matrices", _close(ps.sys.T, np.diag([0.0, 0.5]), 0)
          and _close(ps.sys.E, [1.0, 1.0], 0) and _close(ps.sys.C, [1.0, 0.5], 0))
    check("Pick matrix", _close(ps.P, GOLDEN_P, 1e-12))
    check("Pick inverse", _close(ps.P_inv, GOLDEN_P_INV, 1e-12))
    check("inertia (1, 1, 0)", ps.inertia.as_tuple() == (1, 1, 0))

    theta = interp.build_theta(ps)
    coeff_ok = True
    for a in range(2):
        for b in range(2):
            want = ratfun_reduce(GOLDEN_THETA_NUMS[a][b], GOLDEN_THETA_DEN)
            got = theta[a, b]
            coeff_ok = coeff_ok and _close(got.num.coeffs, want.num.coeffs, 1e-12)
            coeff_ok = coeff_ok and _close(got.den.coeffs, want.den.coeffs, 1e-12)
    check("coefficient matrix entries", coeff_ok)
    check("theta at 0", _close(theta.eval(0.0), [[-1.0, 0.0], [-1.0, 0.0]], 1e-12))
    check("theta at 1", _close(theta.eval(1.0), np.eye(2), 1e-12))
    check("structural self-checks", interp.theta_selfcheck(theta) is not None)
    det = theta.det_closed_form
    want_det = ratfun_reduce(Poly([0.0, -1.0, 2.0]), Poly([2.0, -1.0]))
    check("determinant closed form", _close(det.num.coeffs, want_det.num.coeffs, 1e-10)
          and _close(det.den.coeffs, want_det.den.coeffs, 1e-10))

    f1 = golden_solution_half()
    v1 = interp.verify_solution(problem, f1)
    check("constant-parameter solution (kappa 1)", v1.passed and v1.index == 1)
    param_half = interp.ParamPair(S=const(0.5), B=Blaschke(zeros=()))
    adm, _ = interp.admissible(theta, param_half, problem)
    check("constant parameter admissible", adm)

    f2 = golden_solution_pole()
    v2 = interp.verify_solution(interp.InterpProblem.simple(
        [(0.0, 1.0), (0.5, 0.5)], kappa=2), f2)
    check("pole-parameter solution (kappa 2)", v2.passed and v2.index == 2)
    param_pole = interp.ParamPair(S=const(0.25), B=Blaschke(zeros=(0.0,)))
    adm2, detail2 = interp.admissible(theta, param_pole, problem)
    check("pole clause at node 0", adm2 and detail2[0]["pole_clause"]
          and abs(theta[1, 1](0.0)) < 1e-12 and abs(theta[1, 0](0.0) + 1.0) < 1e-12)

    # degenerate parameter z: the image collapses to f(z) = z in the Schur class
    param_z = interp.ParamPair(S=RatFun(Poly([0.0, 1.0]), Poly([1.0])),
                               B=Blaschke(zeros=()))
    report = interp.classify_parameter(theta, param_z, problem)
    check("degenerate parameter classification",
          report.m == (1, 0) and report.gamma_m == 1
          and report.predicted_index == 0 and report.realized_index == 0
          and report.retained_conditions == ((1, 0),))

    dr = interp.divisor_remainder(problem, RatFun(Poly([0.0, 1.0]), Poly([1.0])))
    # h = (2 - z)/z: one disk pole, at the node 0's deleted neighborhood
    check("divisor-remainder of the identity function",
          dr.h_index == 1 and _close(dr.h.num.coeffs, [2.0, -1.0], 1e-10)
          and _close(dr.h.den.coeffs, [0.0, 1.0], 1e-10))

    sp = interp.schwarz_pick_matrix(f1, problem,
                                    schurclass.ContourSpec(radius=0.85, points=128))
    check("kernel-section quadrature matches Pick matrix", _close(sp, GOLDEN_P, 1e-6))

    return ok, lines
