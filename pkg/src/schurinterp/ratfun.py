"""Complex polynomial and rational-function algebra on the unit disk.

Polynomials are stored as ascending complex coefficient arrays.  Rational
functions are kept coprime (no shared roots within tolerance) with a monic
denominator; all arithmetic reduces its result.  Taylor jets are computed by
exact series division of shifted coefficients, never by numerical
differentiation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.polynomial.polynomial as npoly

from .errors import (
    NoConvergence,
    PoleAtCenter,
    PoleAtPoint,
    ZeroDenominator,
    ZeroPolynomial,
)

# Two roots count as "common" below this distance, scaled by root magnitude.
COPRIME_RTOL = 1e-8
# Roots closer than this are merged into one multiple root.
CLUSTER_RADIUS = 1e-6
# Relative threshold for discarding roundoff-level leading coefficients.
TRIM_RTOL = 1e-12

ROOT_ITER_BUDGET = 200


def _trim(coeffs, rtol=TRIM_RTOL):
    c = np.atleast_1d(np.asarray(coeffs, dtype=complex)).ravel()
    if c.size == 0:
        return np.zeros(1, dtype=complex)
    scale = np.max(np.abs(c))
    if scale == 0.0:
        return np.zeros(1, dtype=complex)
    k = c.size - 1
    while k > 0 and abs(c[k]) <= rtol * scale:
        k -= 1
    return c[: k + 1].copy()


class Poly:
    """Complex polynomial in ascending coefficient order, trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = _trim(coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def __call__(self, z):
        return npoly.polyval(z, self.coeffs)

    def __add__(self, other):
        return Poly(npoly.polyadd(self.coeffs, _as_coeffs(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Poly(npoly.polysub(self.coeffs, _as_coeffs(other)))

    def __rsub__(self, other):
        return Poly(npoly.polysub(_as_coeffs(other), self.coeffs))

    def __mul__(self, other):
        return Poly(npoly.polymul(self.coeffs, _as_coeffs(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Poly(-self.coeffs)

    def deriv(self):
        if self.degree == 0:
            return Poly([0.0])
        return Poly(npoly.polyder(self.coeffs))

    def shifted(self, z0):
        """Coefficients of p(w + z0) in w, via repeated synthetic division."""
        c = self.coeffs.astype(complex).copy()
        n = len(c)
        out = np.empty(n, dtype=complex)
        for j in range(n):
            # one synthetic division by (z - z0); remainder is the next coefficient
            for i in range(n - 2, j - 1, -1):
                c[i] = c[i] + z0 * c[i + 1]
            out[j] = c[j]
        return out

    def deflate(self, root):
        """Divide out a single factor (z - root), discarding the remainder."""
        c = self.coeffs
        n = len(c) - 1
        q = np.empty(n, dtype=complex)
        acc = c[n]
        for i in range(n - 1, -1, -1):
            q[i] = acc
            acc = c[i] + root * acc
        return Poly(q)

    def __repr__(self):
        return f"Poly({np.array2string(self.coeffs, precision=6)})"

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(
            np.all(self.coeffs == other.coeffs)
        )


def _as_coeffs(x):
    if isinstance(x, Poly):
        return x.coeffs
    return np.atleast_1d(np.asarray(x, dtype=complex))


def _aberth(coeffs, budget=ROOT_ITER_BUDGET):
    """Simultaneous (Aberth-Ehrlich) iteration for all roots of a polynomial."""
    # pre-scale by the largest magnitude so a subnormal leading coefficient
    # does not overflow the monic normalization
    c = coeffs / np.max(np.abs(coeffs))
    c = c / c[-1]
    n = len(c) - 1
    dc = npoly.polyder(c)
    # initial guesses on a circle inside the Cauchy bound, with an angular
    # offset so real-coefficient symmetry does not stall the iteration
    bound = 1.0 + np.max(np.abs(c[:-1]))
    radius = min(bound, max(abs(c[0]) ** (1.0 / n), 0.25 * bound)) if c[0] != 0 else 0.5 * bound
    ang = 2.0 * np.pi * np.arange(n) / n + 0.4
    x = radius * np.exp(1j * ang)
    for _ in range(budget):
        p = npoly.polyval(x, c)
        dp = npoly.polyval(x, dc)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = np.where(dp != 0, p / np.where(dp == 0, 1, dp), 0.0)
            diff = x[:, None] - x[None, :]
            np.fill_diagonal(diff, 1.0)
            sums = np.sum(1.0 / diff, axis=1) - 1.0  # remove the diagonal 1/1 term
            denom = 1.0 - ratio * sums
            step = np.where(denom != 0, ratio / np.where(denom == 0, 1, denom), ratio)
        x = x - step
        bad = ~np.isfinite(x) | (np.abs(x) > 1e6 * bound)
        if np.any(bad):
            # restart diverged iterates on a fresh circle
            x = np.where(bad, 0.7 * bound * np.exp(1j * (ang + 1.1)), x)
        if np.max(np.abs(step)) <= 1e-14 * (1.0 + np.max(np.abs(x))):
            return x, True
    return x, False


def _polish(coeffs, roots, steps=3):
    dc = npoly.polyder(coeffs)
    x = roots.astype(complex)
    for _ in range(steps):
        p = npoly.polyval(x, coeffs)
        dp = npoly.polyval(x, dc)
        mask = np.abs(dp) > 1e-300
        x2 = np.where(mask, x - p / np.where(mask, dp, 1), x)
        # keep a step only where it actually shrinks the residual
        better = np.abs(npoly.polyval(x2, coeffs)) < np.abs(p)
        x = np.where(better, x2, x)
    return x


def _polish_multiple(coeffs, root, mult, steps=40):
    """Newton-polish an m-fold root against the (m-1)-th derivative.

    Near an m-fold root the polynomial itself is flat, but its (m-1)-th
    derivative has a simple zero there, so Newton converges quadratically.
    """
    d = np.asarray(coeffs, dtype=complex)
    for _ in range(mult - 1):
        d = npoly.polyder(d)
    dd = npoly.polyder(d)
    x = complex(root)
    for _ in range(steps):
        dv = npoly.polyval(x, dd)
        if abs(dv) < 1e-300:
            break
        step = npoly.polyval(x, d) / dv
        x = x - step
        if abs(step) <= 1e-16 * (1.0 + abs(x)):
            break
    if abs(x - root) > CLUSTER_RADIUS * (1.0 + abs(root)):
        return complex(root)  # polish diverged; keep the centroid
    return x


def _cluster(roots, radius=CLUSTER_RADIUS):
    """Greedy clustering of nearby roots into (centroid, multiplicity) pairs.

    The merge radius scales with the root magnitude, since the splitting of a
    perturbed multiple root grows with it.
    """
    clusters = []  # list of [sum, count]
    for r in sorted(roots, key=lambda v: (v.real, v.imag)):
        for cl in clusters:
            c = cl[0] / cl[1]
            if abs(c - r) <= radius * (1.0 + abs(c)):
                cl[0] += r
                cl[1] += 1
                break
        else:
            clusters.append([r, 1])
    return [(cl[0] / cl[1], cl[1]) for cl in clusters]


def poly_roots(p, cluster_radius=CLUSTER_RADIUS):
    """All roots of p with multiplicities, as a list of (root, multiplicity).

    Aberth-Ehrlich simultaneous iteration with a companion-matrix fallback;
    multiple roots are detected by clustering, the cluster centroid being far
    more accurate than its members.
    """
    if isinstance(p, Poly):
        c = p.coeffs
    else:
        c = _trim(p)
    if len(c) == 1 and c[0] == 0:
        raise ZeroPolynomial("cannot take roots of the zero polynomial")
    if len(c) == 1:
        return []
    # roots are scale-invariant; rescale by an exact power of two so that
    # subnormal coefficients survive (complex division by a subnormal is nan)
    k = -int(np.floor(np.log2(np.max(np.abs(c)))))
    c = np.ldexp(c.real, k) + 1j * np.ldexp(c.imag, k)
    roots, _ = _aberth(c)
    # accept on backward error: near multiple roots the Aberth steps
    # oscillate without shrinking even though the roots are converged
    resid = _backward_error(c, roots)
    if not np.isfinite(resid) or resid > 1e-6:
        # companion-matrix eigenvalues as a fallback
        roots2 = _polish(c, npoly.polyroots(c))
        resid2 = _backward_error(c, roots2)
        if not np.isfinite(resid2) or resid2 > 1e-6:
            raise NoConvergence(f"root finder stalled, residual {resid2:.3g}")
        roots = roots2
    pairs = _cluster(roots, cluster_radius)
    return [(r if m == 1 else _polish_multiple(c, r, m), m) for r, m in pairs]


def _backward_error(coeffs, roots):
    """max_i |p(x_i)| relative to sum_k |c_k| |x_i|^k, the backward error."""
    vals = np.abs(npoly.polyval(roots, coeffs))
    scales = npoly.polyval(np.abs(roots), np.abs(coeffs))
    return float(np.max(vals / np.maximum(scales, 1e-300)))


def _flat_roots(pairs):
    out = []
    for r, m in pairs:
        out.extend([r] * m)
    return out


@dataclass(frozen=True)
class RatFun:
    """Coprime rational function with monic denominator.

    Construct through :func:`ratfun_reduce` (or the arithmetic helpers); the
    raw constructor does not normalize.
    """

    num: Poly
    den: Poly

    def __call__(self, z):
        return self.num(z) / self.den(z)

    def is_zero(self):
        return self.num.is_zero()

    def deriv(self):
        """Derivative, as a reduced rational function."""
        n = self.num.deriv() * self.den - self.num * self.den.deriv()
        return ratfun_reduce(n, self.den * self.den)

    def poles(self):
        """Denominator roots with multiplicities (empty for polynomials)."""
        if self.den.degree == 0:
            return []
        return poly_roots(self.den)

    def zeros(self):
        if self.num.is_zero() or self.num.degree == 0:
            return []
        return poly_roots(self.num)

    def jet(self, z0, m):
        return ratfun_jet(self, z0, m)

    def __add__(self, other):
        return ratfun_arith(self, _as_ratfun(other), "add")

    __radd__ = __add__

    def __sub__(self, other):
        return ratfun_arith(self, _as_ratfun(other), "sub")

    def __rsub__(self, other):
        return ratfun_arith(_as_ratfun(other), self, "sub")

    def __mul__(self, other):
        return ratfun_arith(self, _as_ratfun(other), "mul")

    __rmul__ = __mul__

    def __truediv__(self, other):
        return ratfun_arith(self, _as_ratfun(other), "div")

    def __rtruediv__(self, other):
        return ratfun_arith(_as_ratfun(other), self, "div")

    def __neg__(self):
        return RatFun(-self.num, self.den)

    def __repr__(self):
        return f"RatFun(num={self.num!r}, den={self.den!r})"


def _as_ratfun(x):
    if isinstance(x, RatFun):
        return x
    if isinstance(x, Poly):
        return RatFun(x, Poly([1.0]))
    return RatFun(Poly([complex(x)]), Poly([1.0]))


def const(c):
    """The constant rational function c."""
    return RatFun(Poly([complex(c)]), Poly([1.0]))


def identity():
    """The rational function z."""
    return RatFun(Poly([0.0, 1.0]), Poly([1.0]))


def from_coeffs(num, den=(1.0,)):
    return ratfun_reduce(Poly(num), Poly(den))


def ratfun_reduce(num, den):
    """Cancel common roots of num/den and normalize the denominator to monic.

    Cancellation deflates both polynomials by the matched cluster centroids,
    which keeps the surviving coefficients exact when no cancellation occurs.
    """
    num = num if isinstance(num, Poly) else Poly(num)
    den = den if isinstance(den, Poly) else Poly(den)
    if den.is_zero():
        raise ZeroDenominator("denominator is identically zero")
    if num.is_zero():
        return RatFun(Poly([0.0]), Poly([1.0]))
    if num.degree > 0 and den.degree > 0:
        nroots = poly_roots(num)
        droots = [[dr, dm] for dr, dm in poly_roots(den)]
        for nr, nm in nroots:
            remaining = nm
            for cl in droots:
                if remaining == 0:
                    break
                dr, dm = cl
                if dm == 0:
                    continue
                tol = COPRIME_RTOL * (1.0 + max(abs(nr), abs(dr)))
                if abs(nr - dr) <= tol:
                    k = min(remaining, dm)
                    common = 0.5 * (nr + dr)
                    for _ in range(k):
                        num = num.deflate(common)
                        den = den.deflate(common)
                    cl[1] = dm - k
                    remaining -= k
    lead = den.coeffs[-1]
    return RatFun(Poly(num.coeffs / lead), Poly(den.coeffs / lead))


def ratfun_arith(a, b, op):
    """Reduced sum/difference/product/quotient of two rational functions."""
    a = _as_ratfun(a)
    b = _as_ratfun(b)
    if op == "add":
        return ratfun_reduce(a.num * b.den + b.num * a.den, a.den * b.den)
    if op == "sub":
        return ratfun_reduce(a.num * b.den - b.num * a.den, a.den * b.den)
    if op == "mul":
        return ratfun_reduce(a.num * b.num, a.den * b.den)
    if op == "div":
        if b.is_zero():
            raise ZeroDenominator("division by the zero function")
        return ratfun_reduce(a.num * b.den, a.den * b.num)
    raise ValueError(f"unknown op {op!r}")


@dataclass(frozen=True)
class Jet:
    """Leading Taylor coefficients c_j = f^(j)(center)/j! of a function."""

    center: complex
    coeffs: np.ndarray = field()

    def __len__(self):
        return len(self.coeffs)


def ratfun_jet(f, z0, m):
    """First m Taylor coefficients of f at z0, by series division.

    Both numerator and denominator are shifted to powers of (z - z0) exactly
    in coefficient arithmetic, then divided as formal power series.
    """
    z0 = complex(z0)
    if m < 1:
        raise ValueError("jet length must be >= 1")
    a = Poly(f.num.shifted(z0)).coeffs
    b = Poly(f.den.shifted(z0)).coeffs
    scale = np.max(np.abs(b)) or 1.0
    if abs(b[0]) <= 1e-12 * scale:
        raise PoleAtCenter(f"pole of the rational function at {z0}")
    a = np.concatenate([a, np.zeros(max(0, m - len(a)), dtype=complex)])
    b = np.concatenate([b, np.zeros(max(0, m - len(b)), dtype=complex)])
    c = np.zeros(m, dtype=complex)
    for n in range(m):
        acc = a[n] if n < len(a) else 0.0
        for k in range(1, n + 1):
            if k < len(b):
                acc -= b[k] * c[n - k]
        c[n] = acc / b[0]
    return Jet(center=z0, coeffs=c)


@dataclass(frozen=True)
class RatMat2:
    """2x2 matrix of rational functions."""

    entries: tuple  # ((RatFun, RatFun), (RatFun, RatFun))

    @staticmethod
    def eye():
        one = const(1.0)
        zero = const(0.0)
        return RatMat2(((one, zero), (zero, one)))

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]


def ratmat_eval(M, z):
    """Entrywise evaluation of a 2x2 rational matrix at a point."""
    z = complex(z)
    out = np.empty((2, 2), dtype=complex)
    for i in range(2):
        for j in range(2):
            f = M[i, j]
            dv = f.den(z)
            if abs(dv) <= 1e-12 * (1.0 + np.max(np.abs(f.den.coeffs))):
                raise PoleAtPoint(f"entry ({i},{j}) has a pole at {z}")
            out[i, j] = f.num(z) / dv
    return out


def boundary_sup(f, coarse=512, refine_tol=1e-12):
    """sup of |f| on the unit circle: coarse grid plus golden-section refinement."""
    theta = 2.0 * np.pi * np.arange(coarse) / coarse
    vals = np.abs(f(np.exp(1j * theta)))
    k = int(np.argmax(vals))
    lo = theta[k] - 2.0 * np.pi / coarse
    hi = theta[k] + 2.0 * np.pi / coarse

    def g(t):
        return -abs(f(np.exp(1j * t)))

    gr = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - gr * (b - a)
    d = a + gr * (b - a)
    fc, fd = g(c), g(d)
    while (b - a) > refine_tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - gr * (b - a)
            fc = g(c)
        else:
            a, c, fc = c, d, fd
            d = a + gr * (b - a)
            fd = g(d)
    return max(float(vals[k]), -min(fc, fd))
