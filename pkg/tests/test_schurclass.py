"""Blaschke products, class-index certification, and zero counting."""

import numpy as np
import pytest

from schurinterp.errors import (
    NotContractive,
    NonUnimodularFactor,
    ZeroFunction,
    ZeroOutsideDisk,
)
from schurinterp.ratfun import Poly, const, identity, ratfun_reduce
from schurinterp.schurclass import (
    Blaschke,
    blaschke_from_zeros,
    class_index,
    default_grid,
    kernel_negsquares,
    winding_count,
    zeros_in_disk,
)


class TestBlaschke:
    def test_unimodular_on_the_circle(self):
        b = blaschke_from_zeros([0.3, -0.2 + 0.4j, 0.1j], unimodular_factor=1j)
        t = np.exp(2j * np.pi * np.arange(64) / 64)
        assert np.max(np.abs(np.abs(b(t)) - 1.0)) < 1e-12

    def test_ratfun_form_agrees_with_direct_evaluation(self):
        b = blaschke_from_zeros([0.5, -0.3j])
        f = b.as_ratfun()
        for z in [0.0, 0.2 + 0.1j, -0.6]:
            assert abs(f(z) - b(z)) < 1e-12

    def test_zero_outside_disk_refused(self):
        with pytest.raises(ZeroOutsideDisk):
            blaschke_from_zeros([1.5])

    def test_non_unimodular_factor_refused(self):
        with pytest.raises(NonUnimodularFactor):
            blaschke_from_zeros([0.1], unimodular_factor=0.5)


class TestClassIndex:
    def test_schur_function_has_index_zero(self):
        kl = class_index(const(0.5))
        assert kl.index == 0 and kl.b.degree == 0

    def test_pole_at_a_point_gives_index_one(self):
        # 1/(4z) = (1/4) / z: Schur part 1/4 over the Blaschke factor z
        f = ratfun_reduce(Poly([0.25]), Poly([0.0, 1.0]))
        kl = class_index(f)
        assert kl.index == 1
        assert abs(kl.b.zeros[0]) < 1e-12
        assert abs(kl.s(0.3) - 0.25) < 1e-12

    def test_two_disk_poles(self):
        b = blaschke_from_zeros([0.2, -0.4]).as_ratfun()
        f = const(0.5) / b
        assert class_index(f).index == 2

    def test_expanding_function_refused(self):
        with pytest.raises(NotContractive):
            class_index(const(2.0))


class TestZeroCounting:
    def test_known_polynomial(self):
        g = ratfun_reduce(Poly([-0.5, 1.0]) * Poly([-3.0, 1.0]), Poly([1.0]))
        assert zeros_in_disk(g) == 1

    def test_agrees_with_winding_count_on_random_rationals(self, rng):
        checked = 0
        for _ in range(200):
            if checked >= 100:
                break
            num = rng.normal(size=4) + 1j * rng.normal(size=4)
            den = rng.normal(size=3) + 1j * rng.normal(size=3)
            g = ratfun_reduce(Poly(num), Poly(den))
            if g.is_zero():
                continue
            roots = [r for r, _ in g.zeros()] + [r for r, _ in g.poles()]
            if any(abs(abs(r) - 1.0) < 1e-2 for r in roots):
                continue  # keep clear of both counters' boundary guards
            if any(abs(abs(r) - 0.99) < 1e-2 for r in roots):
                continue
            inside_zeros = zeros_in_disk(g)
            inside_poles = sum(m for r, m in g.poles() if abs(r) < 1.0)
            assert winding_count(g) == inside_zeros - inside_poles
            checked += 1
        assert checked == 100

    def test_zero_function_refused(self):
        with pytest.raises(ZeroFunction):
            zeros_in_disk(const(0.0))


class TestKernelNegSquares:
    def test_schur_function_gives_zero(self):
        grid = default_grid()
        assert kernel_negsquares(const(0.3), grid) == 0
        assert kernel_negsquares(identity(), grid) == 0

    def test_single_pole_gives_one(self):
        f = ratfun_reduce(Poly([0.25]), Poly([0.0, 1.0]))
        grid = default_grid(avoid=[0.0])
        assert kernel_negsquares(f, grid) == 1

    def test_count_matches_class_index_up_to_two(self):
        for zeros in ([0.2], [0.2, -0.35 + 0.1j]):
            f = const(0.5) / blaschke_from_zeros(zeros).as_ratfun()
            grid = default_grid(avoid=zeros)
            assert kernel_negsquares(f, grid) == len(zeros)
