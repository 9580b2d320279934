"""Acceptance gate: one test and one printed pass/fail line per criterion.

The golden two-node fixture (nodes 0 and 1/2 with values 1 and 1/2) anchors
the exact checks; the property criteria draw fresh random problems from the
samplers with a fixed seed.
"""

import time

import numpy as np
import pytest

from schurinterp import golden, interp, sampling, schurclass
from schurinterp.interp import InterpProblem, ParamPair
from schurinterp.ratfun import Poly, RatFun, const, identity, ratfun_jet, ratfun_reduce
from schurinterp.schurclass import Blaschke, ContourSpec, class_index


def _report(n, desc, ok):
    line = f"[criterion {n}] {'PASS' if ok else 'FAIL'} - {desc}"
    print(line)
    assert ok, line


@pytest.fixture(scope="module")
def round_trip_fixtures():
    """50 random nondegenerate problems with admissible parameters, shared by
    the round-trip and zero-count criteria."""
    rng = np.random.default_rng(31415)
    out = []
    for _ in range(50):
        problem, ps = sampling.random_problem(rng)
        theta = interp.build_theta(ps)
        param = sampling.random_admissible_param(rng, theta, problem)
        out.append((problem, ps, theta, param, interp.lft_apply(theta, param)))
    return out


def test_criterion_1_golden_suite(golden_ps, golden_theta):
    start = time.monotonic()
    ok = np.max(np.abs(golden_ps.P - golden.GOLDEN_P)) <= 1e-12
    ok = ok and np.max(np.abs(golden_ps.P_inv - golden.GOLDEN_P_INV)) <= 1e-12
    ok = ok and golden_ps.inertia.as_tuple() == (1, 1, 0)
    for a in range(2):
        for b in range(2):
            want = ratfun_reduce(golden.GOLDEN_THETA_NUMS[a][b], golden.GOLDEN_THETA_DEN)
            got = golden_theta[a, b]
            ok = ok and got.num.coeffs.shape == want.num.coeffs.shape
            ok = ok and np.max(np.abs(got.num.coeffs - want.num.coeffs)) <= 1e-12
            ok = ok and np.max(np.abs(got.den.coeffs - want.den.coeffs)) <= 1e-12
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 1.0
    _report(1, "golden two-node fixture: Pick matrix, inverse, inertia and "
               f"coefficient matrix to 1e-12 in {elapsed:.3f}s", ok)


def test_criterion_2_solution_generation(golden_theta):
    f1 = interp.lft_apply(
        golden_theta, ParamPair(S=const(0.5), B=Blaschke(zeros=()))
    ).f
    ok = abs(f1(0.0) - 1.0) <= 1e-10 and abs(f1(0.5) - 0.5) <= 1e-10
    ok = ok and class_index(f1).index == 1
    f2 = interp.lft_apply(
        golden_theta, ParamPair(S=const(0.25), B=Blaschke(zeros=(0.0,)))
    ).f
    ok = ok and abs(f2(0.0) - 1.0) <= 1e-10 and abs(f2(0.5) - 0.5) <= 1e-10
    ok = ok and class_index(f2).index == 2
    _report(2, "generated solutions for the constant and pole-at-node "
               "parameters hit both targets to 1e-10 with indices 1 and 2", ok)


def test_criterion_3_structural_property_suite():
    start = time.monotonic()
    rng = np.random.default_rng(2718)
    ok = True
    for _ in range(50):
        problem, ps = sampling.random_problem(rng)
        theta = interp.build_theta(ps)
        report = interp.theta_selfcheck(theta)  # raises on any violated clause
        ok = ok and report.j_unitary_max <= 1e-9
        ok = ok and report.kernel_identity_max <= 1e-8
        ok = ok and report.zeros_theta11 == ps.inertia.n_plus
        ok = ok and report.zeros_theta22 == ps.inertia.n_minus
        ok = ok and report.lower_row_min > 1e-6
        ok = ok and report.residue_max <= 1e-8
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 30.0
    _report(3, "structural identities of the coefficient matrix hold on 50 "
               f"random problems in {elapsed:.1f}s", ok)


def test_criterion_4_round_trip(round_trip_fixtures):
    ok = True
    for problem, ps, theta, param, res in round_trip_fixtures:
        kappa = ps.inertia.n_minus + param.B.degree
        verdict = interp.verify_solution(
            InterpProblem(nodes=problem.nodes, kappa=kappa), res.f
        )
        ok = ok and verdict.passed
        e_rec = interp.lft_invert(theta, res.f)
        e = param.as_ratfun()
        same_shape = (
            e_rec.num.coeffs.shape == e.num.coeffs.shape
            and e_rec.den.coeffs.shape == e.den.coeffs.shape
        )
        ok = ok and same_shape
        if same_shape:
            ok = ok and np.max(np.abs(e_rec.num.coeffs - e.num.coeffs)) <= 1e-8
            ok = ok and np.max(np.abs(e_rec.den.coeffs - e.den.coeffs)) <= 1e-8
    _report(4, "50 random admissible parameters: verified solutions and "
               "parameter recovery to 1e-8", ok)


def test_criterion_5_zero_count_law(round_trip_fixtures):
    ok = True
    for problem, ps, theta, param, res in round_trip_fixtures:
        kappa = ps.inertia.n_minus + param.B.degree
        direct = schurclass.zeros_in_disk(res.V)
        winding = schurclass.winding_count(res.V)
        ok = ok and direct == kappa and winding == direct
    _report(5, "denominator zero count equals negative inertia plus Blaschke "
               "degree, root counting and winding quadrature agreeing exactly", ok)


def test_criterion_6_classification(golden_problem, golden_theta):
    param = ParamPair(S=identity(), B=Blaschke(zeros=()))
    report = interp.classify_parameter(golden_theta, param, golden_problem)
    ok = report.m == (1, 0) and report.gamma_m == 1
    ok = ok and report.predicted_index == 0 and report.realized_index == 0
    ok = ok and report.retained_conditions == ((1, 0),)
    f = interp.lft_apply(golden_theta, param).f
    ok = ok and abs(f(0.25) - 0.25) <= 1e-9 and abs(f(0.5) - 0.5) <= 1e-9
    rng = np.random.default_rng(777)
    validated = 0
    while validated < 20:
        problem, ps = sampling.random_problem(rng)
        theta = interp.build_theta(ps)
        param = sampling.degenerate_param(rng, theta, problem)
        if param is None:
            continue
        rep = interp.classify_parameter(theta, param, problem)
        ok = ok and rep.predicted_index == rep.realized_index
        validated += 1
    _report(6, "degenerate-parameter classification: golden identity fixture "
               "exact, 20 engineered parameters validated", ok)


def test_criterion_7_schwarz_pick_quadrature(golden_problem):
    contour = ContourSpec(radius=0.85, points=128)
    ok = True
    for f in [golden.golden_solution_half(), golden.golden_solution_pole()]:
        sp = interp.schwarz_pick_matrix(f, golden_problem, contour)
        ok = ok and np.max(np.abs(sp - golden.GOLDEN_P)) <= 1e-6
    _report(7, "kernel-section quadrature at radius 0.85 with 128 points "
               "reproduces the Pick matrix to 1e-6 for both solutions", ok)


def test_criterion_8_divisor_remainder_suite(golden_problem):
    f1 = golden.golden_solution_half()
    dr = interp.divisor_remainder(golden_problem, f1)
    back = RatFun(dr.phi, Poly([1.0])) + dr.theta.as_ratfun() * dr.h
    ok = all(abs(back(z) - f1(z)) <= 1e-9 for z in [0.1, -0.2 + 0.3j, 0.4j])
    dr_z = interp.divisor_remainder(golden_problem, identity())
    ok = ok and dr_z.h_index == 1
    ok = ok and np.allclose(dr_z.h.num.coeffs, [2.0, -1.0], atol=1e-10)
    ok = ok and np.allclose(dr_z.h.den.coeffs, [0.0, 1.0], atol=1e-10)
    fixtures = [
        (golden_problem, 1, f1),
        (golden_problem, 1, identity()),
        (golden_problem, 1, const(2.0)),
        (golden_problem, 2, golden.golden_solution_pole()),
    ]
    for problem, kappa, f in fixtures:
        verdict = interp.omega_check(problem, kappa, f)
        ok = ok and verdict.agree
    _report(8, "divisor-remainder round trip to 1e-9, the identity-function "
               "remainder structure, and three-way membership agreement", ok)
