"""Interpolation core: Pick matrix, coefficient matrix, linear fractional
parametrization of solutions, parameter classification, and the
divisor-remainder decomposition.

The problem: given distinct nodes z_i in the open unit disk, jet lengths n_i
and target Taylor coefficients f_{i,j}, find the generalized Schur functions
of a prescribed pole budget kappa whose jets at the nodes match the targets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import hermlin, schurclass
from .errors import (
    ContourThroughPole,
    DegenerateDenominator,
    IdenticallyZeroDenominator,
    NodesNotEnclosed,
    NotContractive,
    NotInHInfinity,
    PoleAtCenter,
    PoleAtNode,
    PoleOnBoundary,
    SelfCheckFailed,
    SingularPick,
    ValidationMismatch,
)
from .hermlin import Inertia, SystemMatrices, build_system, inertia, stein_series, stein_solve
from .ratfun import (
    Poly,
    RatFun,
    RatMat2,
    boundary_sup,
    const,
    ratfun_jet,
    ratfun_reduce,
    ratmat_eval,
)
from .schurclass import Blaschke, ContourSpec, class_index

J_SIGNATURE = np.diag([1.0, -1.0]).astype(complex)

CROSS_CHECK_TOL = 1e-8     # stein_solve vs stein_series agreement
VERIFY_TOL = 1e-9          # interpolation residual tolerance
JET_ZERO_RTOL = 1e-9       # multiplicity decision threshold on jet coefficients


@dataclass(frozen=True)
class InterpProblem:
    """Nodes with jet targets: each entry is (z_i, n_i, (f_{i,0}, ..., f_{i,n_i-1}))."""

    nodes: tuple
    kappa: int | None = None

    @staticmethod
    def make(nodes, kappa=None):
        norm = tuple(
            (complex(z), int(n), tuple(complex(v) for v in vals))
            for z, n, vals in nodes
        )
        return InterpProblem(nodes=norm, kappa=kappa)

    @staticmethod
    def simple(points, kappa=None):
        """One-jet problem from (node, value) pairs."""
        return InterpProblem.make([(z, 1, (v,)) for z, v in points], kappa=kappa)

    @property
    def size(self):
        return sum(n for _, n, _ in self.nodes)

    @property
    def node_points(self):
        return tuple(z for z, _, _ in self.nodes)

    @property
    def multiplicities(self):
        return tuple(n for _, n, _ in self.nodes)

    def target_vector(self):
        out = []
        for _, _, vals in self.nodes:
            out.extend(vals)
        return np.asarray(out, dtype=complex)


@dataclass(frozen=True)
class PickSystem:
    sys: SystemMatrices
    P: np.ndarray
    inertia: Inertia
    P_inv: np.ndarray | None

    @property
    def min_kappa(self):
        return self.inertia.n_minus


def pick_system(problem, require_invertible=True, series_tol=1e-12):
    """Pick matrix, its inertia and inverse, cross-validated two ways.

    The direct Stein solve is checked against the truncated series; a
    numerically singular Pick matrix refuses the inverse (and, by default,
    raises, since the coefficient matrix cannot be built).
    """
    sys = build_system(problem)
    P = stein_solve(sys)
    P_series = stein_series(sys, tol=series_tol)
    if np.linalg.norm(P - P_series) > CROSS_CHECK_TOL * (1.0 + np.linalg.norm(P)):
        raise SelfCheckFailed("direct and series Stein solutions disagree")
    inert = inertia(P)
    if inert.n_zero > 0:
        if require_invertible:
            raise SingularPick(
                f"Pick matrix numerically singular (inertia {inert.as_tuple()})"
            )
        return PickSystem(sys=sys, P=P, inertia=inert, P_inv=None)
    P_inv = np.linalg.inv(P)
    if np.linalg.norm(P_inv @ P - np.eye(sys.size)) > 1e-8 * sys.size:
        raise SingularPick("Pick matrix inverse failed its consistency check")
    return PickSystem(sys=sys, P=P, inertia=inert, P_inv=P_inv)


def moment_vector(f, problem, contour=None, cross_tol=1e-8):
    """Stacked Taylor jets of f at the nodes, optionally cross-checked by
    contour quadrature of the resolvent integral."""
    out = []
    for z, n, _ in problem.nodes:
        try:
            out.extend(ratfun_jet(f, z, n).coeffs.tolist())
        except PoleAtCenter as exc:
            raise PoleAtNode(str(exc)) from exc
    vec = np.asarray(out, dtype=complex)
    if contour is not None:
        sys = build_system(problem)
        pts, wts = _cycle_points(sys, f, contour)
        vals = f(pts)
        ident = np.eye(sys.size, dtype=complex)
        quad = np.zeros(sys.size, dtype=complex)
        for xi, q, fv in zip(pts, wts, vals):
            quad += q * fv * np.linalg.solve(xi * ident - sys.T, sys.E)
        if np.linalg.norm(quad - vec) > cross_tol * (1.0 + np.linalg.norm(vec)):
            raise SelfCheckFailed("jet and quadrature moment vectors disagree")
    return vec


# ---------------------------------------------------------------------------
# contour machinery
# ---------------------------------------------------------------------------

def _cycle_points(sys, f, contour):
    """Quadrature points and weights for a contour enclosing the nodes with
    closure inside the analyticity domain of f.

    If the requested circle contains poles of f, the contour is deformed to a
    cycle of small circles, one around each node, which represents the same
    integral (any admissible contour gives the same value).  Returns flat
    arrays (points, weights) with weights dxi/(2 pi i) per point.
    """
    c = complex(contour.center)
    r = float(contour.radius)
    n_pts = int(contour.points)
    nodes = sys.nodes
    poles = [p for p, _ in f.poles()]
    for z in nodes:
        if abs(z - c) >= r - 1e-9:
            raise NodesNotEnclosed(f"node {z} not strictly inside the contour")
    for p in poles:
        if abs(abs(p - c) - r) <= 1e-8:
            raise ContourThroughPole(f"pole of f at {p} lies on the contour")
        for z in nodes:
            if abs(p - z) <= 1e-8:
                raise ContourThroughPole(f"f has a pole at the node {z}")
    # trapezoid accuracy dies when a pole of f or of the resolvent sits too
    # close to the circle, so require a healthy margin on both sides
    margin = 1.2
    comfortable = all(abs(p - c) > margin * r for p in poles) and all(
        abs(z - c) < r / margin for z in nodes
    )
    if comfortable:
        circles = [(c, r)]
    else:
        # deform to a cycle of small per-node circles avoiding every pole
        circles = []
        for z in nodes:
            d = 1.0 - abs(z)
            for other in nodes:
                if other != z:
                    d = min(d, abs(other - z))
            for p in poles:
                d = min(d, abs(p - z))
            circles.append((z, 0.45 * d))
    pts, wts = [], []
    for center, radius in circles:
        theta = 2.0 * np.pi * np.arange(n_pts) / n_pts
        ring = radius * np.exp(1j * theta)
        pts.extend((center + ring).tolist())
        wts.extend((ring / n_pts).tolist())
    return np.asarray(pts, dtype=complex), np.asarray(wts, dtype=complex)


def schwarz_pick_matrix(f, problem, contour=None):
    """Kernel-section matrix of f at the problem nodes, by double contour
    quadrature; for every solution of the problem it equals the Pick matrix."""
    sys = build_system(problem)
    f = ratfun_reduce(f.num, f.den)
    if contour is None:
        contour = _default_contour(sys, f)
    pts, wts = _cycle_points(sys, f, contour)
    ident = np.eye(sys.size, dtype=complex)
    w = np.empty((len(pts), sys.size), dtype=complex)
    for j, (xi, q) in enumerate(zip(pts, wts)):
        w[j] = q * np.linalg.solve(xi * ident - sys.T, sys.E)
    fv = f(pts)
    K = (1.0 - np.outer(fv, fv.conj())) / (1.0 - np.outer(pts, pts.conj()))
    P = np.einsum("jl,ja,lb->ab", K, w, w.conj())
    return 0.5 * (P + P.conj().T)


def _default_contour(sys, f):
    max_node = max(abs(z) for z in sys.nodes)
    beyond = [abs(p) for p, _ in f.poles() if abs(p) > max_node]
    outer = min(min(beyond, default=1.0), 1.0)
    return ContourSpec(center=0.0, radius=0.5 * (max_node + outer), points=128)


# ---------------------------------------------------------------------------
# coefficient matrix
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Theta:
    """2x2 rational coefficient matrix of the linear fractional parametrization.

    ``nums`` holds the unreduced numerator polynomials of the entries over the
    shared denominator ``den``; downstream combinations are formed in exact
    polynomial arithmetic so the shared denominator cancels without any
    numerical root matching.
    """

    ps: PickSystem
    rational: RatMat2
    nums: tuple
    den: Poly
    det_closed_form: RatFun

    def eval_structured(self, z):
        """Evaluate from the structured (T, E, C, P^{-1}) data."""
        sys = self.ps.sys
        z = complex(z)
        n = sys.size
        ident = np.eye(n, dtype=complex)
        left = np.vstack([sys.E.conj(), sys.C.conj()])  # 2 x n
        right = np.column_stack([sys.E, -sys.C])        # n x 2
        mid = np.linalg.solve(ident - z * sys.T.conj().T, self.ps.P_inv) @ np.linalg.solve(
            ident - sys.T, right
        )
        return np.eye(2, dtype=complex) + (z - 1.0) * (left @ mid)

    def eval(self, z):
        return ratmat_eval(self.rational, z)

    def __getitem__(self, idx):
        return self.rational[idx]


def build_theta(ps, check_points=32, seed=7):
    """Rational and structured forms of the coefficient matrix.

    The resolvent of the block-Jordan matrix is expanded in closed form, so
    each entry's denominator is the product of (1 - z conj(z_i))^{n_i}
    factors; the determinant is checked against its closed-form product.
    """
    if ps.P_inv is None:
        raise SingularPick("coefficient matrix requires an invertible Pick matrix")
    sys = ps.sys
    n = sys.size
    ident = np.eye(n, dtype=complex)
    # D_i(z) = (1 - z conj(z_i))^{n_i}; D = prod_i D_i
    block_dens = []
    for z_i, n_i in zip(sys.nodes, sys.multiplicities):
        d = Poly([1.0])
        for _ in range(n_i):
            d = d * Poly([1.0, -np.conj(z_i)])
        block_dens.append(d)
    D = Poly([1.0])
    for d in block_dens:
        D = D * d
    # rows of [E*; C*] (I - z T*)^{-1} scaled by D, as polynomial vectors
    weights = [sys.E.conj(), sys.C.conj()]
    rows = [[Poly([0.0]) for _ in range(n)] for _ in range(2)]
    for bi, (z_i, n_i, sl) in enumerate(
        zip(sys.nodes, sys.multiplicities, sys.block_slices())
    ):
        others = Poly([1.0])
        for bj, d in enumerate(block_dens):
            if bj != bi:
                others = others * d
        a = np.conj(z_i)
        # powers of z and of (1 - z a) up to n_i - 1
        zpow = [Poly([1.0])]
        fpow = [Poly([1.0])]
        for _ in range(n_i - 1):
            zpow.append(zpow[-1] * Poly([0.0, 1.0]))
            fpow.append(fpow[-1] * Poly([1.0, -a]))
        # (I - z T*)^{-1} is upper triangular on this block, with entry
        # (p, q) equal to z^{q-p} / (1 - z a)^{q-p+1} for q >= p
        for row, wvec in zip(rows, weights):
            for q in range(n_i):
                acc = Poly([0.0])
                for p in range(q + 1):
                    wp = wvec[sl.start + p]
                    if wp != 0:
                        acc = acc + wp * (zpow[q - p] * fpow[n_i - 1 - (q - p)])
                row[sl.start + q] = row[sl.start + q] + acc * others
    M = ps.P_inv @ np.linalg.solve(ident - sys.T, np.column_stack([sys.E, -sys.C]))
    zm1 = Poly([-1.0, 1.0])
    entries = []
    numers = []
    for a in range(2):
        entry_row = []
        numer_row = []
        for b in range(2):
            acc = Poly([0.0])
            for q in range(n):
                if M[q, b] != 0:
                    acc = acc + rows[a][q] * M[q, b]
            numer = zm1 * acc
            if a == b:
                numer = numer + D
            numer_row.append(numer)
            entry_row.append(ratfun_reduce(numer, D))
        entries.append(tuple(entry_row))
        numers.append(tuple(numer_row))
    det_cf = _det_closed_form(sys)
    theta = Theta(
        ps=ps,
        rational=RatMat2(tuple(entries)),
        nums=tuple(numers),
        den=D,
        det_closed_form=det_cf,
    )
    _check_theta_consistency(theta, check_points, seed)
    return theta


def _det_closed_form(sys):
    num = Poly([1.0])
    den = Poly([1.0])
    for z_i, n_i in zip(sys.nodes, sys.multiplicities):
        for _ in range(n_i):
            num = num * (Poly([-z_i, 1.0]) * (1.0 - np.conj(z_i)))
            den = den * (Poly([1.0, -np.conj(z_i)]) * (1.0 - z_i))
    return ratfun_reduce(num, den)


def _check_theta_consistency(theta, check_points, seed):
    rng = np.random.default_rng(seed)
    pts = 0.95 * np.sqrt(rng.uniform(0, 1, check_points)) * np.exp(
        2j * np.pi * rng.uniform(0, 1, check_points)
    )
    for z in pts:
        a = theta.eval_structured(z)
        b = theta.eval(z)
        if np.max(np.abs(a - b)) > 1e-9 * (1.0 + np.max(np.abs(a))):
            raise SelfCheckFailed(f"structured and rational evaluations differ at {z}")
    for z in pts[: max(1, check_points // 2)]:
        d = np.linalg.det(theta.eval(z))
        dc = theta.det_closed_form(z)
        if abs(d - dc) > 1e-9 * (1.0 + abs(d)):
            raise SelfCheckFailed(f"determinant closed form mismatch at {z}")


@dataclass(frozen=True)
class ThetaReport:
    """Structural self-check summary for a constructed coefficient matrix."""

    j_unitary_max: float
    kernel_identity_max: float
    zeros_theta11: int
    sq_plus: int
    zeros_theta22: int
    sq_minus: int
    lower_row_min: float
    residue_max: float

    def as_dict(self):
        return {
            "j_unitary_max": self.j_unitary_max,
            "kernel_identity_max": self.kernel_identity_max,
            "zeros_theta11": self.zeros_theta11,
            "sq_plus": self.sq_plus,
            "zeros_theta22": self.zeros_theta22,
            "sq_minus": self.sq_minus,
            "lower_row_min": self.lower_row_min,
            "residue_max": self.residue_max,
        }


def theta_selfcheck(theta, samples=64, seed=11):
    """Verify the structural identities every valid coefficient matrix obeys.

    Checks J-unitarity on the circle, the kernel identity at random disk
    pairs, the inertia-to-zero-count laws for the diagonal entries,
    nonvanishing of the lower row, and analyticity of the resolvent product
    at the nodes.  Raises SelfCheckFailed naming the violated clause.
    """
    sys = theta.ps.sys
    ident = np.eye(sys.size, dtype=complex)
    t = np.exp(2j * np.pi * np.arange(samples) / samples)
    ju = 0.0
    for tv in t:
        m = theta.eval(tv)
        ju = max(ju, float(np.max(np.abs(m.conj().T @ J_SIGNATURE @ m - J_SIGNATURE))))
    if ju > 1e-9:
        raise SelfCheckFailed(f"J-unitarity residual {ju:.3g} on the circle")

    rng = np.random.default_rng(seed)
    ki = 0.0
    left = np.vstack([sys.E.conj(), sys.C.conj()])
    right_pc = np.column_stack([sys.E, sys.C])
    for _ in range(16):
        z, zeta = 0.9 * np.sqrt(rng.uniform(0, 1, 2)) * np.exp(
            2j * np.pi * rng.uniform(0, 1, 2)
        )
        lhs = (
            J_SIGNATURE
            - theta.eval(z) @ J_SIGNATURE @ theta.eval(zeta).conj().T
        ) / (1.0 - z * np.conj(zeta))
        rhs = (
            left
            @ np.linalg.solve(ident - z * sys.T.conj().T, theta.ps.P_inv)
            @ np.linalg.solve(ident - np.conj(zeta) * sys.T, right_pc)
        )
        ki = max(ki, float(np.max(np.abs(lhs - rhs))))
    if ki > 1e-8:
        raise SelfCheckFailed(f"kernel identity residual {ki:.3g}")

    n11 = schurclass.zeros_in_disk(theta[0, 0])
    n22 = schurclass.zeros_in_disk(theta[1, 1])
    inert = theta.ps.inertia
    if n11 != inert.n_plus or n22 != inert.n_minus:
        raise SelfCheckFailed(
            f"diagonal zero counts ({n11}, {n22}) != inertia ({inert.n_plus}, {inert.n_minus})"
        )

    grid = 0.97 * np.sqrt(np.linspace(0.01, 1.0, 10))[:, None] * np.exp(
        2j * np.pi * np.linspace(0.0, 0.9, 10)
    )[None, :]
    grid = grid.ravel()
    low = np.abs(theta[1, 0](grid)) + np.abs(theta[1, 1](grid))
    low_min = float(np.min(low))
    if low_min <= 1e-6:
        raise SelfCheckFailed(f"lower row nearly vanishes: min {low_min:.3g}")

    res = _node_residue_max(theta)
    if res > 1e-8:
        raise SelfCheckFailed(f"node residue {res:.3g} of the resolvent product")
    return ThetaReport(
        j_unitary_max=ju,
        kernel_identity_max=ki,
        zeros_theta11=n11,
        sq_plus=inert.n_plus,
        zeros_theta22=n22,
        sq_minus=inert.n_minus,
        lower_row_min=low_min,
        residue_max=res,
    )


def _node_residue_max(theta, U=None, V=None):
    """Max residue over nodes of (zI - T)^{-1} [E, -C] Theta(z) (or, with U
    and V supplied, of its product with the parameter column)."""
    sys = theta.ps.sys
    worst = 0.0
    for z_i, n_i, sl in zip(sys.nodes, sys.multiplicities, sys.block_slices()):
        C_i = sys.C[sl]
        if U is None:
            cols = [
                (RatFun(theta.nums[0][a], theta.den), RatFun(theta.nums[1][a], theta.den))
                for a in range(2)
            ]
        else:
            cols = [(U, V)]
        for top, bottom in cols:
            # g_q(z) = E_loc[q] * top(z) - C_i[q] * bottom(z); with the
            # lower-bidiagonal block resolvent, the residue of row p collects
            # the (p - q)-th jet coefficient of g_q at z_i for q <= p
            jets = []
            for q in range(n_i):
                e_q = 1.0 if q == 0 else 0.0
                # top and bottom share a denominator, so g stays unreduced
                g = RatFun(e_q * top.num - C_i[q] * bottom.num, top.den)
                jets.append(ratfun_jet(g, z_i, n_i).coeffs)
            for p in range(n_i):
                res = sum(jets[q][p - q] for q in range(p + 1))
                worst = max(worst, abs(res))
    return worst


# ---------------------------------------------------------------------------
# parameters and the linear fractional transformation
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ParamPair:
    """Parameter (S, B): S in the Schur class, B a finite Blaschke product,
    with no common zeros in the disk."""

    S: RatFun
    B: Blaschke

    @property
    def index(self):
        return self.B.degree

    def as_ratfun(self):
        return self.S / self.B.as_ratfun()

    @staticmethod
    def from_schur(S, B=None):
        kl = class_index(S)
        if kl.index != 0:
            raise NotContractive("S part of a parameter must have class index 0")
        return ParamPair(S=S, B=B if B is not None else Blaschke(zeros=()))

    @staticmethod
    def from_e(E, tol=1e-9):
        """Split a generalized Schur parameter into its coprime (S, B) pair."""
        kl = class_index(E, tol=tol)
        return ParamPair(S=kl.s, B=kl.b)


@dataclass(frozen=True)
class LFTResult:
    f: RatFun
    U: RatFun  # numerator Theta11 S + Theta12 B, uncancelled against V
    V: RatFun  # denominator Theta21 S + Theta22 B


CANCEL_BACKWARD_TOL = 1e-7


def _root_backward_error(p, root):
    vals = abs(p(root))
    scale = float(np.polynomial.polynomial.polyval(abs(root), np.abs(p.coeffs)))
    return vals / max(scale, 1e-300)


def _cancel_known_roots(num, den, roots):
    """Deflate shared structural roots at exactly known locations.

    The generic reduction matches independently computed roots, which for
    multiple roots agree only to their splitting radius; here the candidate
    locations are exact, so synthetic division stays accurate.  A root is
    cancelled only while both polynomials vanish there to backward-error
    precision.
    """
    for root, max_mult in roots:
        for _ in range(max_mult):
            if num.degree == 0 or den.degree == 0:
                break
            if (
                _root_backward_error(num, root) <= CANCEL_BACKWARD_TOL
                and _root_backward_error(den, root) <= CANCEL_BACKWARD_TOL
            ):
                num = num.deflate(root)
                den = den.deflate(root)
            else:
                break
    return num, den


def _structural_roots(sys, mirrors=False):
    out = [(z, n) for z, n in zip(sys.nodes, sys.multiplicities)]
    if mirrors:
        out.extend(
            (1.0 / np.conj(z), n)
            for z, n in zip(sys.nodes, sys.multiplicities)
            if z != 0
        )
    return out


def lft_apply(theta, param):
    """Map a parameter pair through the linear fractional transformation.

    Returns the reduced image f together with the uncancelled numerator and
    denominator, whose node zeros drive the classification machinery.  The
    combination is formed in exact polynomial arithmetic over the shared
    entry denominator, which cancels without any numerical root matching.
    """
    B = param.B.as_ratfun()
    Sn, Sd = param.S.num, param.S.den
    Bn, Bd = B.num, B.den
    num_u = theta.nums[0][0] * (Sn * Bd) + theta.nums[0][1] * (Bn * Sd)
    num_v = theta.nums[1][0] * (Sn * Bd) + theta.nums[1][1] * (Bn * Sd)
    if num_v.is_zero():
        raise DegenerateDenominator("lower LFT combination vanishes identically")
    common_den = theta.den * (Sd * Bd)
    U = RatFun(num_u, common_den)
    V = RatFun(num_v, common_den)
    # common zeros of the pair lie in the node set; cancel them at their
    # exact locations before the generic reduction
    fn, fv = _cancel_known_roots(num_u, num_v, _structural_roots(theta.ps.sys))
    return LFTResult(f=ratfun_reduce(fn, fv), U=U, V=V)


def lft_invert(theta, f):
    """Recover the parameter from a function: E = (f T22 - T12)/(T11 - f T21)."""
    num = f.num * theta.nums[1][1] - f.den * theta.nums[0][1]
    den = f.den * theta.nums[0][0] - f.num * theta.nums[1][0]
    if den.is_zero():
        raise IdenticallyZeroDenominator(
            "f equals Theta11/Theta21, impossible for a generalized Schur function"
        )
    # the adjugate combination carries the determinant factor, whose zeros
    # sit at the nodes and their reflections across the unit circle
    num, den = _cancel_known_roots(
        num, den, _structural_roots(theta.ps.sys, mirrors=True)
    )
    return ratfun_reduce(num, den)


def admissible(theta, param, problem, tol=1e-9):
    """Check the node conditions V(z_i) != 0; returns (ok, per-node detail)."""
    res = lft_apply(theta, param)
    node_vals = [res.V(z) for z in problem.node_points]
    scale = 1.0 + max(abs(v) for v in node_vals)
    details = []
    ok = True
    for (z, _, _), v in zip(problem.nodes, node_vals):
        nonzero = abs(v) > tol * scale
        ok = ok and nonzero
        pole_clause = False
        if param.B.degree and abs(param.B(z)) <= tol:
            # parameter pole at the node; admissible there exactly when the
            # lower-right entry vanishes while the lower-left does not
            t21, t22 = theta[1, 0](z), theta[1, 1](z)
            pole_clause = abs(t22) <= tol * (1.0 + abs(t21)) and abs(t21) > tol
        details.append(
            {"node": z, "V": v, "nonzero": nonzero, "pole_clause": pole_clause}
        )
    return ok, details


@dataclass(frozen=True)
class Verdict:
    passed: bool
    index: int | None
    residuals: tuple
    notes: tuple = ()

    def as_dict(self):
        return {
            "pass": self.passed,
            "index": self.index,
            "residuals": list(self.residuals),
            "notes": list(self.notes),
        }


def verify_solution(problem, f, tol=VERIFY_TOL):
    """Check class membership and every jet condition; failures are verdicts."""
    notes = []
    index = None
    try:
        index = class_index(f).index
    except (NotContractive, PoleOnBoundary) as exc:
        notes.append(f"class membership failed: {exc}")
    residuals = []
    analytic = True
    for z, n, vals in problem.nodes:
        try:
            jet = ratfun_jet(f, z, n).coeffs
        except PoleAtCenter:
            analytic = False
            notes.append(f"pole at node {z}")
            residuals.extend([float("inf")] * n)
            continue
        residuals.extend(abs(jet[j] - vals[j]) for j in range(n))
    passed = (
        analytic
        and index is not None
        and (problem.kappa is None or index == problem.kappa)
        and all(r <= tol for r in residuals)
    )
    if index is not None and problem.kappa is not None and index != problem.kappa:
        notes.append(f"class index {index} != target {problem.kappa}")
    return Verdict(
        passed=passed, index=index, residuals=tuple(residuals), notes=tuple(notes)
    )


# ---------------------------------------------------------------------------
# classification of degenerate parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ClassifyReport:
    m: tuple                      # zero multiplicity of V at each node
    I_plus: tuple                 # node indices with n_i > m_i
    I_minus: tuple                # node indices with n_i < m_i
    I_zero: tuple                 # node indices with n_i = m_i
    gamma_m: int
    predicted_index: int
    retained_conditions: tuple    # (node index, jet order) pairs that survive
    realized_index: int
    flags: tuple = ()

    def as_dict(self):
        return {
            "m": list(self.m),
            "I_plus": list(self.I_plus),
            "I_minus": list(self.I_minus),
            "I_zero": list(self.I_zero),
            "gamma_m": self.gamma_m,
            "predicted_index": self.predicted_index,
            "retained_conditions": [list(rc) for rc in self.retained_conditions],
            "realized_index": self.realized_index,
            "flags": list(self.flags),
        }


def _zero_multiplicity(g, z0, max_order, rtol=JET_ZERO_RTOL):
    """Exact zero multiplicity of g at z0 from its jet, with a close-call flag."""
    jet = ratfun_jet(g, z0, max_order + 1).coeffs
    scale = rtol * (1.0 + float(np.max(np.abs(jet))))
    close = False
    for j, c in enumerate(jet):
        if abs(c) > scale:
            if abs(c) <= 10.0 * scale:
                close = True
            return j, close
        if 0.1 * scale < abs(c) <= scale:
            close = True
    return max_order + 1, close


def classify_parameter(theta, param, problem, tol=VERIFY_TOL):
    """Predict the class index and surviving jet conditions of the image of a
    (possibly inadmissible) parameter, then validate against the realized f.

    The node multiplicities are read off the uncancelled denominator, since
    reduction would silently cancel the very zeros being measured.
    """
    res = lft_apply(theta, param)
    sq_minus = theta.ps.inertia.n_minus
    kappa_tilde = param.index
    max_order = res.V.num.degree + 1
    m = []
    flags = []
    for i, (z, n, _) in enumerate(problem.nodes):
        mult, close = _zero_multiplicity(res.V, z, max_order)
        m.append(mult)
        if close:
            flags.append(f"multiplicity decision at node {i} within 10x of threshold")
    I_plus = tuple(i for i, (_, n, _) in enumerate(problem.nodes) if n > m[i])
    I_minus = tuple(i for i, (_, n, _) in enumerate(problem.nodes) if n < m[i])
    I_zero = tuple(i for i, (_, n, _) in enumerate(problem.nodes) if n == m[i])
    gamma = sum(min(mi, n) for mi, (_, n, _) in zip(m, problem.nodes))
    predicted = kappa_tilde + sq_minus - gamma
    if predicted < 0:
        raise ValidationMismatch(f"predicted class index {predicted} negative")
    retained = tuple(
        (i, j)
        for i in I_plus
        for j in range(problem.nodes[i][1] - m[i])
    )
    try:
        realized = class_index(res.f).index
    except (NotContractive, PoleOnBoundary) as exc:
        raise ValidationMismatch(f"realized function not generalized Schur: {exc}")
    if realized != predicted:
        raise ValidationMismatch(
            f"realized class index {realized} != predicted {predicted}"
        )
    for i, j in retained:
        z, n, vals = problem.nodes[i]
        jet = ratfun_jet(res.f, z, j + 1).coeffs
        if abs(jet[j] - vals[j]) > tol * (1.0 + abs(vals[j])):
            raise ValidationMismatch(
                f"retained condition (node {i}, order {j}) violated"
            )
    return ClassifyReport(
        m=tuple(m),
        I_plus=I_plus,
        I_minus=I_minus,
        I_zero=I_zero,
        gamma_m=gamma,
        predicted_index=predicted,
        retained_conditions=retained,
        realized_index=realized,
        flags=tuple(flags),
    )


# ---------------------------------------------------------------------------
# divisor-remainder machinery
# ---------------------------------------------------------------------------

def hermite_phi(problem):
    """Minimal-degree polynomial matching all jet targets, by Newton divided
    differences with repeated nodes."""
    xs = []
    jets = []
    for z, n, vals in problem.nodes:
        for _ in range(n):
            xs.append(z)
            jets.append(vals)
    total = len(xs)
    # dd[j][l] = divided difference of order j starting at abscissa l
    dd = [np.zeros(total - j, dtype=complex) for j in range(total)]
    pos = 0
    for z, n, vals in problem.nodes:
        for p in range(n):
            dd[0][pos + p] = vals[0]
        pos += n
    for j in range(1, total):
        for l in range(total - j):
            if xs[l + j] == xs[l]:
                # repeated abscissae: the difference is the jet coefficient
                dd[j][l] = _jet_value(problem, xs[l], j)
            else:
                dd[j][l] = (dd[j - 1][l + 1] - dd[j - 1][l]) / (xs[l + j] - xs[l])
    phi = Poly([0.0])
    basis = Poly([1.0])
    for j in range(total):
        phi = phi + dd[j][0] * basis
        basis = basis * Poly([-xs[j], 1.0])
    return phi


def _jet_value(problem, z, order):
    for zz, n, vals in problem.nodes:
        if zz == z:
            return vals[order]
    raise KeyError(z)


def theta_blaschke(problem):
    """Blaschke product vanishing at each node with its jet multiplicity."""
    zeros = []
    for z, n, _ in problem.nodes:
        zeros.extend([z] * n)
    return Blaschke(zeros=tuple(zeros), unimodular_factor=1.0 + 0.0j)


@dataclass(frozen=True)
class DivisorRemainder:
    phi: Poly
    theta: Blaschke
    h: RatFun
    h_index: int  # number of disk poles of h, with multiplicity


def divisor_remainder(problem, f):
    """Represent f as phi + theta * h and certify the pole budget of h."""
    phi = hermite_phi(problem)
    theta_b = theta_blaschke(problem)
    h = (f - RatFun(phi, Poly([1.0]))) / theta_b.as_ratfun()
    h_index = 0
    for p, mult in h.poles():
        if abs(abs(p) - 1.0) <= schurclass.BOUNDARY_GUARD:
            raise NotInHInfinity(f"remainder has a boundary pole at {p}")
        if abs(p) < 1.0:
            h_index += mult
    return DivisorRemainder(phi=phi, theta=theta_b, h=h, h_index=h_index)


def big_kernel_negsquares(problem, f, grid=None, tol=1e-9):
    """Negative eigenvalue count of the bordered kernel matrix: the Pick
    matrix bordered by resolvent columns and the sampled Schur kernel Gram
    block.  A grid-based lower bound for the full negative-squares count."""
    ps = pick_system(problem, require_invertible=False)
    sys = ps.sys
    f = ratfun_reduce(f.num, f.den)
    if grid is None:
        grid = schurclass.default_grid(avoid=[p for p, _ in f.poles()])
    z = np.asarray([complex(p) for p in grid], dtype=complex)
    scale = np.max(np.abs(f.den.coeffs)) or 1.0
    if np.any(np.abs(f.den(z)) <= 1e-12 * scale):
        raise schurclass.PoleOnGrid("a grid point is a pole of f")
    fv = f(z)
    n = sys.size
    g = len(z)
    ident = np.eye(n, dtype=complex)
    cols = np.empty((n, g), dtype=complex)
    for l, (zeta, fz) in enumerate(zip(z, fv)):
        cols[:, l] = np.linalg.solve(
            ident - np.conj(zeta) * sys.T, sys.E - sys.C * np.conj(fz)
        )
    K = (1.0 - np.outer(fv, fv.conj())) / (1.0 - np.outer(z, z.conj()))
    big = np.empty((n + g, n + g), dtype=complex)
    big[:n, :n] = ps.P
    big[:n, n:] = cols
    big[n:, :n] = cols.conj().T
    big[n:, n:] = K
    big = 0.5 * (big + big.conj().T)
    eigs = np.linalg.eigvalsh(big)
    return int(np.sum(eigs < -tol * max(np.linalg.norm(big), 1.0)))


@dataclass(frozen=True)
class OmegaVerdict:
    """Three-way membership check for the relaxed solution set: divisor form,
    bordered-kernel bound, and inverse-parameter certification."""

    divisor_form: bool
    kernel_bound: bool
    inverse_parameter: bool
    details: dict = field(default_factory=dict)

    @property
    def agree(self):
        return self.divisor_form == self.kernel_bound == self.inverse_parameter

    @property
    def member(self):
        return self.divisor_form

    def as_dict(self):
        return {
            "divisor_form": self.divisor_form,
            "kernel_bound": self.kernel_bound,
            "inverse_parameter": self.inverse_parameter,
            "agree": self.agree,
            "details": self.details,
        }


def omega_check(problem, kappa, f, grid=None, tol=1e-9):
    """Evaluate all three equivalent membership criteria and report each."""
    details = {}
    ps = pick_system(problem)
    if kappa < ps.inertia.n_minus:
        raise ValueError("kappa below the negative inertia of the Pick matrix")
    # (1) divisor-remainder form with bounded pole budget, inside the unit ball
    try:
        dr = divisor_remainder(problem, f)
        sup = boundary_sup(f)
        clause1 = dr.h_index <= kappa and sup <= 1.0 + tol
        details["h_index"] = dr.h_index
        details["boundary_sup"] = sup
    except NotInHInfinity as exc:
        clause1 = False
        details["divisor_error"] = str(exc)
    # (2) bordered-kernel negative squares within budget
    count = big_kernel_negsquares(problem, f, grid=grid, tol=tol)
    clause2 = count <= kappa
    details["kernel_negsquares"] = count
    # (3) inverse parameter lies in the bounded class with reduced pole budget
    theta = build_theta(ps)
    try:
        E = lft_invert(theta, f)
        e_poles = sum(
            mult for p, mult in E.poles() if abs(p) < 1.0 - schurclass.BOUNDARY_GUARD
        )
        e_boundary = any(
            abs(abs(p) - 1.0) <= schurclass.BOUNDARY_GUARD for p, _ in E.poles()
        )
        e_sup = boundary_sup(E) if not e_boundary else float("inf")
        clause3 = (not e_boundary) and e_poles <= kappa - ps.inertia.n_minus and (
            e_sup <= 1.0 + tol
        )
        details["parameter_poles"] = e_poles
        details["parameter_sup"] = e_sup
    except IdenticallyZeroDenominator as exc:
        clause3 = False
        details["invert_error"] = str(exc)
    return OmegaVerdict(
        divisor_form=bool(clause1),
        kernel_bound=bool(clause2),
        inverse_parameter=bool(clause3),
        details=details,
    )
