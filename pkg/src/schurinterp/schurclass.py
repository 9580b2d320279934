"""Disk function theory: Blaschke products, class-index certification,
zero counting inside the disk, and negative-squares estimation for kernels."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import ratfun as rf
from .errors import (
    DegenerateGrid,
    NonUnimodularFactor,
    NotContractive,
    PoleOnBoundary,
    PoleOnGrid,
    QuadratureInconclusive,
    SingularOnContour,
    ZeroFunction,
    ZeroOnBoundary,
    ZeroOutsideDisk,
)
from .ratfun import Poly, RatFun, boundary_sup, poly_roots, ratfun_reduce

BOUNDARY_GUARD = 1e-8      # roots this close to |z| = 1 are "on the boundary"
CONTRACTIVE_TOL = 1e-9     # slack allowed in the boundary sup check
WINDING_ROUND_GUARD = 0.2  # max distance of the quadrature value to an integer


@dataclass(frozen=True)
class Blaschke:
    """Finite Blaschke product: unimodular factor times disk-automorphism factors."""

    zeros: tuple
    unimodular_factor: complex = 1.0 + 0.0j

    @property
    def degree(self):
        return len(self.zeros)

    def as_ratfun(self):
        num = Poly([self.unimodular_factor])
        den = Poly([1.0])
        for a in self.zeros:
            num = num * Poly([-a, 1.0])
            den = den * Poly([1.0, -np.conj(a)])
        return ratfun_reduce(num, den)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.unimodular_factor, dtype=complex)
        for a in self.zeros:
            out = out * (z - a) / (1.0 - z * np.conj(a))
        return out if out.shape else complex(out)


@dataclass(frozen=True)
class KreinLanger:
    """Factorization f = s / b with s in the Schur class and b Blaschke."""

    s: RatFun
    b: Blaschke
    index: int


@dataclass(frozen=True)
class ContourSpec:
    center: complex = 0.0 + 0.0j
    radius: float = 0.85
    points: int = 128


def blaschke_from_zeros(zeros, unimodular_factor=1.0):
    factor = complex(unimodular_factor)
    if abs(abs(factor) - 1.0) > 1e-12:
        raise NonUnimodularFactor(f"|factor| = {abs(factor)} != 1")
    zeros = tuple(complex(a) for a in zeros)
    for a in zeros:
        if abs(a) >= 1.0:
            raise ZeroOutsideDisk(f"Blaschke zero {a} not in the open disk")
    return Blaschke(zeros=zeros, unimodular_factor=factor)


def class_index(f, tol=CONTRACTIVE_TOL):
    """Krein-Langer factorization and class index of a rational function.

    The Blaschke part collects the denominator roots of the reduced f inside
    the open disk; membership requires sup |f| <= 1 + tol on the unit circle
    (coarse grid plus golden-section refinement of the maximum).
    """
    f = ratfun_reduce(f.num, f.den)
    inside = []
    for r, m in f.poles():
        if abs(abs(r) - 1.0) <= BOUNDARY_GUARD:
            raise PoleOnBoundary(f"pole at {r} on the unit circle")
        if abs(r) < 1.0:
            inside.extend([r] * m)
    sup = boundary_sup(f)
    if sup > 1.0 + tol:
        raise NotContractive(f"boundary sup {sup:.12g} exceeds 1")
    b = Blaschke(zeros=tuple(inside), unimodular_factor=1.0 + 0.0j)
    s = f * b.as_ratfun()
    return KreinLanger(s=s, b=b, index=len(inside))


def zeros_in_disk(g):
    """Number of zeros of the reduced g strictly inside the unit disk."""
    g = ratfun_reduce(g.num, g.den)
    if g.is_zero():
        raise ZeroFunction("zero counting of the zero function")
    count = 0
    for r, m in g.zeros():
        if abs(abs(r) - 1.0) <= BOUNDARY_GUARD:
            raise ZeroOnBoundary(f"zero at {r} on the unit circle")
        if abs(r) < 1.0:
            count += m
    return count


def winding_count(g, contour=None):
    """Zeros-minus-poles of g inside a circular contour, by the argument
    principle with trapezoidal quadrature of g'/g."""
    if contour is None:
        contour = ContourSpec(radius=0.99, points=256)
    g = ratfun_reduce(g.num, g.den)
    if g.is_zero():
        raise ZeroFunction("winding number of the zero function")
    c, r, n = complex(contour.center), float(contour.radius), int(contour.points)
    for root, _ in (g.zeros() + g.poles()):
        if abs(abs(root - c) - r) <= 1e-8:
            raise SingularOnContour(f"zero or pole at {root} lies on the contour")
    theta = 2.0 * np.pi * np.arange(n) / n
    z = c + r * np.exp(1j * theta)
    dn = g.num.deriv()
    dd = g.den.deriv()
    logder = dn(z) / g.num(z) - dd(z) / g.den(z)
    val = np.sum(logder * r * np.exp(1j * theta)) / n
    count = int(np.rint(val.real))
    if abs(val - count) > WINDING_ROUND_GUARD:
        raise QuadratureInconclusive(
            f"quadrature value {val:.4g} too far from an integer"
        )
    return count


def default_grid(rings=(0.3, 0.7), points_per_ring=12, avoid=(), min_dist=1e-3):
    """Two concentric rings of sample points, rotated away from given poles."""
    avoid = np.asarray([complex(a) for a in avoid], dtype=complex)
    pts = []
    for k, radius in enumerate(rings):
        for rot in np.linspace(0.0, 2.0 * np.pi / points_per_ring, 37):
            theta = 2.0 * np.pi * np.arange(points_per_ring) / points_per_ring
            ring = radius * np.exp(1j * (theta + rot + 0.5 * k))
            if avoid.size == 0 or np.min(
                np.abs(ring[:, None] - avoid[None, :])
            ) > min_dist:
                pts.extend(ring.tolist())
                break
        else:
            raise PoleOnGrid("could not rotate ring away from poles")
    return pts


def kernel_negsquares(f, grid, tol=1e-9):
    """Negative eigenvalue count of the sampled Schur kernel Gram matrix.

    ``f`` may be a RatFun or any callable; the count is a lower bound for the
    negative-squares number of the kernel and equals it on sufficiently rich
    grids.
    """
    z = np.asarray([complex(p) for p in grid], dtype=complex)
    if len(z) != len(set(z.tolist())):
        raise DegenerateGrid("grid points must be pairwise distinct")
    if isinstance(f, RatFun):
        scale = np.max(np.abs(f.den.coeffs)) or 1.0
        if np.any(np.abs(f.den(z)) <= 1e-12 * scale):
            raise PoleOnGrid("a grid point is a pole of f")
        vals = f(z)
    else:
        vals = np.asarray([complex(f(p)) for p in z], dtype=complex)
        if not np.all(np.isfinite(vals)):
            raise PoleOnGrid("sampled function not finite on the grid")
    G = (1.0 - np.outer(vals, vals.conj())) / (1.0 - np.outer(z, z.conj()))
    G = 0.5 * (G + G.conj().T)
    eigs = np.linalg.eigvalsh(G)
    return int(np.sum(eigs < -tol * max(np.linalg.norm(G), 1.0)))
