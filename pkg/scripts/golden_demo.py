#!/usr/bin/env python3
"""End-to-end walkthrough of the golden two-node fixture.

Builds the Pick system for the data f(0) = 1, f(1/2) = 1/2 with one negative
square, assembles the coefficient matrix, generates two solutions (a constant
parameter and a parameter with a pole at a node), verifies them, classifies a
degenerate parameter, and finishes with the divisor-remainder decomposition.
"""

import numpy as np

from schurinterp import golden, interp
from schurinterp.interp import InterpProblem, ParamPair
from schurinterp.ratfun import const, identity
from schurinterp.schurclass import Blaschke, ContourSpec, class_index


def main():
    problem = golden.golden_problem()
    print("problem:", problem.nodes, "index", problem.kappa)

    ps = interp.pick_system(problem)
    print("\nPick matrix:\n", ps.P)
    print("inertia (n+, n-, n0):", ps.inertia.as_tuple())
    print("minimal index:", ps.min_kappa)

    theta = interp.build_theta(ps)
    report = interp.theta_selfcheck(theta)
    print("\ncoefficient matrix selfcheck:")
    print("  J-unitarity defect on the circle:", report.j_unitary_max)
    print("  kernel identity defect:", report.kernel_identity_max)
    print("  diagonal disk-zero counts:", report.zeros_theta11, report.zeros_theta22)

    print("\n-- solution from the constant parameter E = 1/2 --")
    res = interp.lft_apply(theta, ParamPair(S=const(0.5), B=Blaschke(zeros=())))
    verdict = interp.verify_solution(problem, res.f)
    print("f =", res.f)
    print("f(0) =", res.f(0.0), " f(1/2) =", res.f(0.5))
    print("verified:", verdict.passed, " index:", verdict.index)

    print("\n-- solution from E = 1/(4z), a pole at the first node --")
    res2 = interp.lft_apply(theta, ParamPair(S=const(0.25), B=Blaschke(zeros=(0.0,))))
    problem2 = InterpProblem(nodes=problem.nodes, kappa=2)
    verdict2 = interp.verify_solution(problem2, res2.f)
    print("f =", res2.f)
    print("f(0) =", res2.f(0.0), " f(1/2) =", res2.f(0.5))
    print("verified:", verdict2.passed, " index:", verdict2.index)

    print("\n-- parameter recovery --")
    e_rec = interp.lft_invert(theta, res.f)
    print("recovered E for the first solution:", e_rec, "=", e_rec(0.1))

    print("\n-- kernel-section quadrature --")
    sp = interp.schwarz_pick_matrix(res.f, problem, ContourSpec(radius=0.85, points=128))
    print("max |quadrature - Pick matrix|:", np.max(np.abs(sp - ps.P)))

    print("\n-- degenerate parameter E(z) = z --")
    param = ParamPair(S=identity(), B=Blaschke(zeros=()))
    cls = interp.classify_parameter(theta, param, problem)
    print("degeneracy orders m:", cls.m, " gamma:", cls.gamma_m)
    print("predicted index:", cls.predicted_index, " realized:", cls.realized_index)
    print("retained conditions:", cls.retained_conditions)
    f_deg = interp.lft_apply(theta, param).f
    print("realized function at 0.3:", f_deg(0.3), "(the image is f(z) = z)")
    print("class index of the image:", class_index(f_deg).index)

    print("\n-- divisor-remainder decomposition of the first solution --")
    dr = interp.divisor_remainder(problem, res.f)
    print("polynomial interpolant phi:", dr.phi)
    print("divisor theta:", dr.theta)
    print("quotient h:", dr.h, " with index", dr.h_index)
    omega = interp.omega_check(problem, 1, res.f)
    print("membership clauses agree:", omega.agree, " member:", omega.member)


if __name__ == "__main__":
    main()
