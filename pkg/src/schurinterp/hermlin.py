"""Structured linear algebra for the interpolation problem.

Builds the block-Jordan system matrices from interpolation data, solves the
Stein equation both directly (vectorized LU) and by its convergent series,
and computes the inertia of Hermitian matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DuplicateNode,
    NodeOutsideDisk,
    NoConvergence,
    NotHermitian,
    SingularSystem,
    ValueCountMismatch,
)

HERMITIAN_ATOL = 1e-12
STEIN_RESIDUAL_RTOL = 1e-10
EIG_TOL_RTOL = 1e-9  # default inertia threshold, relative to the Frobenius norm


@dataclass(frozen=True)
class SystemMatrices:
    """Jordan-block system (T, E, C) of a multi-point interpolation problem."""

    T: np.ndarray
    E: np.ndarray
    C: np.ndarray
    nodes: tuple          # interpolation nodes z_i
    multiplicities: tuple  # jet length n_i per node

    @property
    def size(self):
        return self.T.shape[0]

    def block_slices(self):
        out = []
        start = 0
        for n in self.multiplicities:
            out.append(slice(start, start + n))
            start += n
        return out


@dataclass(frozen=True)
class Inertia:
    n_plus: int
    n_minus: int
    n_zero: int

    def as_tuple(self):
        return (self.n_plus, self.n_minus, self.n_zero)


def build_system(problem):
    """Assemble T (block Jordan), E (block unit vectors) and C (target jets).

    ``problem`` provides nodes as (z_i, n_i, values) triples; see
    :class:`schurinterp.interp.InterpProblem`.
    """
    nodes = [complex(z) for z, _, _ in problem.nodes]
    mults = [int(n) for _, n, _ in problem.nodes]
    values = [list(v) for _, _, v in problem.nodes]
    for z in nodes:
        if abs(z) >= 1.0:
            raise NodeOutsideDisk(f"node {z} is not in the open unit disk")
    for i in range(len(nodes)):
        for j in range(i + 1, len(nodes)):
            if nodes[i] == nodes[j]:
                raise DuplicateNode(f"node {nodes[i]} repeated")
    for n, v in zip(mults, values):
        if n < 1:
            raise ValueCountMismatch("multiplicities must be >= 1")
        if len(v) != n:
            raise ValueCountMismatch(f"expected {n} target values, got {len(v)}")
    total = sum(mults)
    T = np.zeros((total, total), dtype=complex)
    E = np.zeros(total, dtype=complex)
    C = np.zeros(total, dtype=complex)
    start = 0
    for z, n, vals in zip(nodes, mults, values):
        # ones below the diagonal, so that (xi I - T)^{-1} E stacks the
        # powers (xi - z)^{-1}, ..., (xi - z)^{-n} and the resolvent moment
        # integral of f reproduces its Taylor jet in natural order
        for p in range(n):
            T[start + p, start + p] = z
            if p + 1 < n:
                T[start + p + 1, start + p] = 1.0
            C[start + p] = complex(vals[p])
        E[start] = 1.0
        start += n
    return SystemMatrices(T=T, E=E, C=C, nodes=tuple(nodes), multiplicities=tuple(mults))


def _stein_rhs(sys):
    return np.outer(sys.E, sys.E.conj()) - np.outer(sys.C, sys.C.conj())


def stein_solve(sys):
    """Unique solution P of P - T P T* = E E* - C C*, by a vectorized LU solve.

    The output is symmetrized; the residual is checked against the assembled
    right-hand side.
    """
    T = sys.T
    n = sys.size
    Q = _stein_rhs(sys)
    A = np.eye(n * n, dtype=complex) - np.kron(T.conj(), T)
    try:
        vec = np.linalg.solve(A, Q.reshape(n * n, order="F"))
    except np.linalg.LinAlgError as exc:  # cannot happen for spectral radius < 1
        raise SingularSystem(str(exc)) from exc
    P = vec.reshape((n, n), order="F")
    P = 0.5 * (P + P.conj().T)
    resid = np.linalg.norm(P - T @ P @ T.conj().T - Q)
    if resid > STEIN_RESIDUAL_RTOL * (1.0 + np.linalg.norm(P)):
        raise SingularSystem(f"Stein residual {resid:.3g} too large")
    return P


def stein_series(sys, tol=1e-12, max_stall=50):
    """Partial sums of the Stein series; independent oracle for stein_solve.

    Truncates once the Frobenius norm of the last term drops below ``tol``;
    raises if term norms fail to decrease for ``max_stall`` consecutive terms.
    """
    T = sys.T
    term = _stein_rhs(sys)
    P = term.copy()
    prev_norm = np.linalg.norm(term)
    stall = 0
    while True:
        term = T @ term @ T.conj().T
        norm = np.linalg.norm(term)
        if norm < tol:
            break
        P += term
        if norm >= prev_norm:
            stall += 1
            if stall >= max_stall:
                raise NoConvergence("Stein series terms stopped decreasing")
        else:
            stall = 0
        prev_norm = norm
    return 0.5 * (P + P.conj().T)


def inertia(H, tol=None):
    """Counts of eigenvalues above tol, below -tol, and within [-tol, tol]."""
    H = np.asarray(H, dtype=complex)
    norm = np.linalg.norm(H)
    if np.linalg.norm(H - H.conj().T) > HERMITIAN_ATOL * (1.0 + norm):
        raise NotHermitian("matrix is not Hermitian to tolerance")
    if tol is None:
        tol = EIG_TOL_RTOL * max(norm, 1.0)
    eigs = np.linalg.eigvalsh(0.5 * (H + H.conj().T))
    n_plus = int(np.sum(eigs > tol))
    n_minus = int(np.sum(eigs < -tol))
    return Inertia(n_plus=n_plus, n_minus=n_minus, n_zero=len(eigs) - n_plus - n_minus)
