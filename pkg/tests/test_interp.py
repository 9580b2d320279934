"""Interpolation core: Pick system, coefficient matrix, LFT, verification."""

import numpy as np
import pytest

from schurinterp import golden, interp, sampling
from schurinterp.errors import PoleAtNode, SingularPick
from schurinterp.interp import InterpProblem, ParamPair
from schurinterp.ratfun import Poly, RatFun, const, identity, ratfun_jet, ratfun_reduce
from schurinterp.schurclass import Blaschke, ContourSpec


class TestPickSystem:
    def test_golden_matrix_and_inverse(self, golden_ps):
        assert np.allclose(golden_ps.P, golden.GOLDEN_P, atol=1e-12)
        assert np.allclose(golden_ps.P_inv, golden.GOLDEN_P_INV, atol=1e-12)
        assert golden_ps.inertia.as_tuple() == (1, 1, 0)
        assert golden_ps.min_kappa == 1

    def test_positive_for_data_from_a_schur_function(self):
        # a 2-jet read off 0.3 + 0.1 z must give a positive Pick matrix
        problem = InterpProblem.make([(0.0, 2, (0.3, 0.1))])
        ps = interp.pick_system(problem)
        assert ps.inertia.as_tuple() == (2, 0, 0)

    def test_singular_matrix_refused(self):
        # single node with |value| = 1 forces a zero Pick matrix
        problem = InterpProblem.simple([(0.0, 1.0)])
        with pytest.raises(SingularPick):
            interp.pick_system(problem)

    def test_singular_matrix_reported_when_not_refused(self):
        problem = InterpProblem.simple([(0.0, 1.0)])
        ps = interp.pick_system(problem, require_invertible=False)
        assert ps.P_inv is None and ps.inertia.n_zero == 1


class TestMomentVector:
    def test_jets_of_a_simple_function(self, golden_problem):
        f = ratfun_reduce(Poly([1.0, -1.0]), Poly([1.0]))
        vec = interp.moment_vector(f, golden_problem)
        assert np.allclose(vec, [1.0, 0.5])

    def test_quadrature_cross_check(self, golden_problem):
        f = golden.golden_solution_half()
        vec = interp.moment_vector(
            f, golden_problem, contour=ContourSpec(radius=0.85, points=128)
        )
        assert np.allclose(vec, [1.0, 0.5], atol=1e-10)

    def test_pole_at_node_refused(self, golden_problem):
        f = ratfun_reduce(Poly([1.0]), Poly([0.0, 1.0]))
        with pytest.raises(PoleAtNode):
            interp.moment_vector(f, golden_problem)


class TestTheta:
    def test_golden_entries_coefficientwise(self, golden_theta):
        for a in range(2):
            for b in range(2):
                want = ratfun_reduce(
                    golden.GOLDEN_THETA_NUMS[a][b], golden.GOLDEN_THETA_DEN
                )
                got = golden_theta[a, b]
                assert np.allclose(got.num.coeffs, want.num.coeffs, atol=1e-12)
                assert np.allclose(got.den.coeffs, want.den.coeffs, atol=1e-12)

    def test_normalization_at_one(self, golden_theta):
        assert np.allclose(golden_theta.eval(1.0), np.eye(2), atol=1e-12)

    def test_structured_and_rational_forms_agree(self, golden_theta, rng):
        pts = 0.9 * np.sqrt(rng.uniform(size=20)) * np.exp(
            2j * np.pi * rng.uniform(size=20)
        )
        for z in pts:
            assert np.allclose(
                golden_theta.eval(z), golden_theta.eval_structured(z), atol=1e-10
            )

    def test_selfcheck_passes_on_random_problems(self, rng):
        for _ in range(10):
            problem, ps = sampling.random_problem(rng)
            theta = interp.build_theta(ps)
            report = interp.theta_selfcheck(theta)
            assert report.zeros_theta11 == ps.inertia.n_plus
            assert report.zeros_theta22 == ps.inertia.n_minus

    def test_determinant_closed_form(self, golden_theta, rng):
        for z in 0.8 * rng.uniform(size=8) * np.exp(2j * np.pi * rng.uniform(size=8)):
            det = np.linalg.det(golden_theta.eval(z))
            assert abs(det - golden_theta.det_closed_form(z)) < 1e-10


class TestLFT:
    def test_constant_parameter_solution(self, golden_problem, golden_theta):
        param = ParamPair(S=const(0.5), B=Blaschke(zeros=()))
        res = interp.lft_apply(golden_theta, param)
        verdict = interp.verify_solution(golden_problem, res.f)
        assert verdict.passed and verdict.index == 1

    def test_pole_parameter_solution(self, golden_theta):
        param = ParamPair(S=const(0.25), B=Blaschke(zeros=(0.0,)))
        res = interp.lft_apply(golden_theta, param)
        problem2 = InterpProblem.simple([(0.0, 1.0), (0.5, 0.5)], kappa=2)
        verdict = interp.verify_solution(problem2, res.f)
        assert verdict.passed and verdict.index == 2

    def test_from_e_splits_a_meromorphic_parameter(self):
        e = ratfun_reduce(Poly([0.25]), Poly([0.0, 1.0]))
        param = ParamPair.from_e(e)
        assert param.B.degree == 1 and abs(param.S(0.7) - 0.25) < 1e-12

    def test_round_trip_on_golden_fixture(self, golden_theta):
        param = ParamPair(S=const(0.5), B=Blaschke(zeros=()))
        res = interp.lft_apply(golden_theta, param)
        e_rec = interp.lft_invert(golden_theta, res.f)
        assert e_rec.num.degree == 0 and e_rec.den.degree == 0
        assert abs(e_rec(0.1) - 0.5) < 1e-10

    def test_admissibility_of_the_pole_clause(self, golden_problem, golden_theta):
        param = ParamPair(S=const(0.25), B=Blaschke(zeros=(0.0,)))
        ok, details = interp.admissible(golden_theta, param, golden_problem)
        assert ok
        assert details[0]["pole_clause"]

    def test_verify_rejects_a_non_solution(self, golden_problem):
        verdict = interp.verify_solution(golden_problem, const(0.9))
        assert not verdict.passed


class TestSchwarzPick:
    def test_matches_pick_matrix_for_solutions(self, golden_problem):
        for f in [golden.golden_solution_half(), golden.golden_solution_pole()]:
            sp = interp.schwarz_pick_matrix(
                f, golden_problem, ContourSpec(radius=0.85, points=128)
            )
            assert np.max(np.abs(sp - golden.GOLDEN_P)) < 1e-6

    def test_detects_a_non_solution(self, golden_problem):
        sp = interp.schwarz_pick_matrix(identity(), golden_problem)
        assert np.max(np.abs(sp - golden.GOLDEN_P)) > 1e-3


class TestDivisorRemainder:
    def test_hermite_phi_on_golden_fixture(self, golden_problem):
        phi = interp.hermite_phi(golden_problem)
        assert np.allclose(phi.coeffs, [1.0, -1.0], atol=1e-12)

    def test_hermite_phi_with_jet_data(self):
        problem = InterpProblem.make([(0.0, 2, (1.0, 2.0))])
        phi = interp.hermite_phi(problem)
        assert np.allclose(phi.coeffs, [1.0, 2.0], atol=1e-12)

    def test_identity_function_decomposition(self, golden_problem):
        dr = interp.divisor_remainder(golden_problem, identity())
        assert dr.h_index == 1
        assert np.allclose(dr.h.num.coeffs, [2.0, -1.0], atol=1e-10)
        assert np.allclose(dr.h.den.coeffs, [0.0, 1.0], atol=1e-10)

    def test_round_trip(self, golden_problem):
        f = golden.golden_solution_half()
        dr = interp.divisor_remainder(golden_problem, f)
        back = RatFun(dr.phi, Poly([1.0])) + dr.theta.as_ratfun() * dr.h
        for z in [0.1, 0.3 + 0.2j, -0.4]:
            assert abs(back(z) - f(z)) < 1e-9

    def test_exact_interpolant_leaves_zero_remainder(self, golden_problem):
        phi = interp.hermite_phi(golden_problem)
        dr = interp.divisor_remainder(golden_problem, RatFun(phi, Poly([1.0])))
        assert dr.h.is_zero()


class TestOmega:
    def test_solution_satisfies_all_clauses(self, golden_problem):
        verdict = interp.omega_check(golden_problem, 1, golden.golden_solution_half())
        assert verdict.member and verdict.agree

    def test_identity_is_a_member_but_not_a_solution(self, golden_problem):
        verdict = interp.omega_check(golden_problem, 1, identity())
        assert verdict.member and verdict.agree
        assert not interp.verify_solution(golden_problem, identity()).passed

    def test_expanding_function_fails_all_clauses(self, golden_problem):
        verdict = interp.omega_check(golden_problem, 1, const(2.0))
        assert not verdict.member and verdict.agree

    def test_bordered_kernel_counts(self, golden_problem):
        assert interp.big_kernel_negsquares(
            golden_problem, golden.golden_solution_half()
        ) == 1
        assert interp.big_kernel_negsquares(golden_problem, identity()) == 1
        trivial = InterpProblem.simple([(0.0, 0.0)])
        assert interp.big_kernel_negsquares(trivial, identity()) == 0
