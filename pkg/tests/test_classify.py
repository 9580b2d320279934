"""Classification of degenerate parameters and its validation machinery."""

import numpy as np

from schurinterp import interp, sampling
from schurinterp.interp import ParamPair
from schurinterp.ratfun import Poly, RatFun, const, identity, poly_roots
from schurinterp.schurclass import Blaschke, class_index


class TestGoldenDegenerate:
    def test_identity_parameter_collapses_to_schur(self, golden_problem, golden_theta):
        # S(z) = z makes the denominator vanish at the node 0; the image
        # drops to the Schur class and keeps only the second condition
        param = ParamPair(S=identity(), B=Blaschke(zeros=()))
        report = interp.classify_parameter(golden_theta, param, golden_problem)
        assert report.m == (1, 0)
        assert report.gamma_m == 1
        assert report.predicted_index == 0
        assert report.realized_index == 0
        assert report.retained_conditions == ((1, 0),)
        res = interp.lft_apply(golden_theta, param)
        assert abs(res.f(0.3) - 0.3) < 1e-9  # the image is f(z) = z

    def test_constant_one_parameter(self, golden_problem, golden_theta):
        # E == 1 degenerates at the node 1/2 and realizes f == 1
        param = ParamPair(S=const(1.0), B=Blaschke(zeros=()))
        report = interp.classify_parameter(golden_theta, param, golden_problem)
        assert report.predicted_index == report.realized_index == 0
        res = interp.lft_apply(golden_theta, param)
        assert abs(res.f(0.2) - 1.0) < 1e-9

    def test_admissible_parameter_has_no_degeneracy(self, golden_problem, golden_theta):
        param = ParamPair(S=const(0.5), B=Blaschke(zeros=()))
        report = interp.classify_parameter(golden_theta, param, golden_problem)
        assert report.m == (0, 0)
        assert report.gamma_m == 0
        assert report.predicted_index == 1
        assert len(report.retained_conditions) == golden_problem.size


class TestEngineeredDegenerate:
    def test_twenty_random_engineered_parameters(self, rng):
        validated = 0
        while validated < 20:
            problem, ps = sampling.random_problem(rng)
            theta = interp.build_theta(ps)
            param = sampling.degenerate_param(rng, theta, problem)
            if param is None:
                continue
            report = interp.classify_parameter(theta, param, problem)
            assert report.predicted_index == report.realized_index
            assert sum(report.m) >= 1
            validated += 1

    def test_common_zeros_lie_in_the_node_set(self, rng):
        # shared zeros of the uncancelled pair may only occur at nodes,
        # with multiplicity at most the jet length there
        checked = 0
        while checked < 10:
            problem, ps = sampling.random_problem(rng)
            theta = interp.build_theta(ps)
            param = sampling.degenerate_param(rng, theta, problem)
            if param is None:
                continue
            res = interp.lft_apply(theta, param)
            u_roots = poly_roots(res.U.num) if res.U.num.degree > 0 else []
            v_roots = poly_roots(res.V.num) if res.V.num.degree > 0 else []
            for ur, um in u_roots:
                for vr, vm in v_roots:
                    if abs(ur - vr) < 1e-6:
                        dists = [abs(ur - z) for z in problem.node_points]
                        i = int(np.argmin(dists))
                        assert dists[i] < 1e-6
                        assert min(um, vm) <= problem.multiplicities[i]
            checked += 1


class TestValidation:
    def test_realized_index_confirms_prediction(self, golden_problem, golden_theta):
        param = ParamPair(S=const(0.5), B=Blaschke(zeros=()))
        report = interp.classify_parameter(golden_theta, param, golden_problem)
        assert report.realized_index == report.predicted_index == 1

    def test_index_split_of_a_meromorphic_function(self):
        f = const(0.5) / RatFun(Poly([0.0, 1.0]), Poly([1.0]))
        kl = class_index(f)
        assert kl.index == 1 and kl.b.degree == 1
