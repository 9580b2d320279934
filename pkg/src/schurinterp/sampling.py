"""Random generators for problems and parameters, used by the property
suites and the experiment scripts."""

from __future__ import annotations

import numpy as np

from . import interp
from .errors import SingularPick
from .ratfun import Poly, RatFun, boundary_sup, ratfun_reduce
from .schurclass import Blaschke


def random_problem(rng, max_nodes=3, max_mult=2, max_modulus=0.7, min_sep=0.2):
    """Nondegenerate random problem: well-separated nodes, invertible Pick matrix."""
    for _ in range(200):
        k = int(rng.integers(1, max_nodes + 1))
        nodes = []
        pts = []
        ok = True
        for _ in range(k):
            for _ in range(50):
                z = max_modulus * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
                if all(abs(z - w) >= min_sep for w in pts):
                    break
            else:
                ok = False
                break
            pts.append(z)
            n = int(rng.integers(1, max_mult + 1))
            vals = tuple(rng.normal(scale=0.8) + 1j * rng.normal(scale=0.8) for _ in range(n))
            nodes.append((z, n, vals))
        if not ok:
            continue
        problem = interp.InterpProblem.make(nodes)
        try:
            ps = interp.pick_system(problem)
        except SingularPick:
            continue
        eigs = np.abs(np.linalg.eigvalsh(ps.P))
        if np.min(eigs) < 1e-3 * max(np.max(eigs), 1.0):
            continue  # too close to singular for tight tolerances
        return problem, ps
    raise RuntimeError("failed to sample a nondegenerate problem")


def random_schur(rng, max_degree=2, margin=0.05):
    """Random rational Schur-class function, scaled below the unit ball."""
    d = int(rng.integers(0, max_degree + 1))
    coeffs = rng.normal(size=d + 1) + 1j * rng.normal(size=d + 1)
    p = RatFun(Poly(coeffs), Poly([1.0]))
    sup = boundary_sup(p)
    if sup == 0.0:
        return RatFun(Poly([0.3]), Poly([1.0]))
    scale = rng.uniform(0.2, 1.0 - margin) / sup
    return ratfun_reduce(Poly(coeffs * scale), Poly([1.0]))


def random_blaschke(rng, degree, avoid=(), min_dist=0.05, max_modulus=0.85):
    """Random Blaschke product whose zeros stay away from the given points."""
    zeros = []
    while len(zeros) < degree:
        a = max_modulus * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform())
        if all(abs(a - w) >= min_dist for w in avoid):
            zeros.append(a)
    return Blaschke(zeros=tuple(zeros), unimodular_factor=np.exp(2j * np.pi * rng.uniform()))


def random_admissible_param(rng, theta, problem, max_blaschke=2):
    """Random (S, B) pair passing the node admissibility conditions."""
    for _ in range(100):
        S = random_schur(rng)
        deg = int(rng.integers(0, max_blaschke + 1))
        B = random_blaschke(rng, deg, avoid=problem.node_points)
        if deg and any(abs(S(a)) < 1e-8 for a in B.zeros):
            continue  # common zero with the Blaschke part
        param = interp.ParamPair(S=S, B=B)
        ok, _ = interp.admissible(theta, param, problem, tol=1e-6)
        if ok:
            return param
    raise RuntimeError("failed to sample an admissible parameter")


def degenerate_param(rng, theta, problem, node_index=0):
    """Parameter engineered so the LFT denominator vanishes at one node."""
    z = problem.node_points[node_index]
    for _ in range(100):
        deg = int(rng.integers(0, 2))
        B = random_blaschke(rng, deg, avoid=problem.node_points)
        t21 = theta[1, 0](z)
        t22 = theta[1, 1](z)
        if abs(t21) < 1e-9:
            return None
        c = -t22 * B(z) / t21
        if abs(c) > 0.98:
            continue
        if abs(c) < 1e-12 and deg:
            B = Blaschke(zeros=())  # S == 0 must not share zeros with B
        S = RatFun(Poly([c]), Poly([1.0]))
        return interp.ParamPair(S=S, B=B)
    return None
