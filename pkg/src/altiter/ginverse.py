"""Matrix index and the group inverse.

The group inverse of a square matrix A is the unique X with
AXA = A, XAX = X and AX = XA.  It exists exactly when A has index one,
i.e. rank(A) = rank(A^2).  It is computed here through a change of basis:
with Q = [basis of R(A) | basis of N(A)], the matrix Q^-1 A Q is block
diagonal with an invertible r-by-r leading block C, and the group inverse
is Q diag(C^-1, 0) Q^-1.  Orthonormal bases keep Q well conditioned.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotIndexOneError, NumericFailureError
from .kernel import (
    DEFAULT_TOL,
    Tolerances,
    as_square,
    null_basis,
    range_basis,
    rank,
    rel_residual,
    solve_square,
    subspaces_equal,
)


@dataclass(frozen=True)
class GroupInverseResult:
    """Group inverse together with the decomposition that produced it.

    ginv          the group inverse (the ordinary inverse when index == 0)
    index         0 for nonsingular input, 1 otherwise
    change_basis  the invertible matrix Q of range/null basis columns
    core          the leading r-by-r block of Q^-1 A Q
    """

    ginv: np.ndarray
    index: int
    change_basis: np.ndarray
    core: np.ndarray


@dataclass(frozen=True)
class AxiomResiduals:
    """Relative residuals of the three group-inverse axioms."""

    axa: float
    xax: float
    commutator: float

    def max(self) -> float:
        return max(self.axa, self.xax, self.commutator)


def matrix_index(a, tol: Tolerances = DEFAULT_TOL) -> int:
    """Smallest k >= 0 with rank(a^k) = rank(a^(k+1)); a^0 is the identity.

    Powers are renormalised between multiplications so that only their
    rank matters, never their scale.
    """
    m = as_square(a)
    n = m.shape[0]
    previous = n  # rank of a^0
    power = np.eye(n)
    for k in range(n + 1):
        power = power @ m
        norm = np.linalg.norm(power)
        if norm > 0:
            power = power / norm
        current = rank(power, tol)
        if current == previous:
            return k
        previous = current
    return n


def group_inverse(a, tol: Tolerances = DEFAULT_TOL) -> GroupInverseResult:
    """Group inverse of an index-one matrix.

    Nonsingular input is accepted and yields the ordinary inverse with
    index 0, so downstream code handles both cases through one path.
    Raises NotIndexOneError when rank(a) != rank(a^2).
    """
    m = as_square(a)
    n = m.shape[0]
    r = rank(m, tol)
    if r != rank(m @ m, tol):
        raise NotIndexOneError("the matrix is not of index 1")
    q = np.hstack([range_basis(m, tol), null_basis(m, tol)])
    if q.shape[1] != n:
        raise NumericFailureError(
            "range and null bases do not assemble to a full basis"
        )
    sv = np.linalg.svd(q, compute_uv=False)
    if sv[-1] < 1e-13 * sv[0]:
        raise NumericFailureError(
            "range/null change of basis is numerically singular"
        )
    p = solve_square(q, m @ q)
    core = p[:r, :r]
    d = np.zeros((n, n))
    d[:r, :r] = solve_square(core, np.eye(r))
    ginv = q @ d @ solve_square(q, np.eye(n))
    return GroupInverseResult(
        ginv=ginv, index=0 if r == n else 1, change_basis=q, core=core
    )


def verify_group_axioms(a, x) -> AxiomResiduals:
    """Residuals of AXA = A, XAX = X and AX = XA for a candidate inverse."""
    m = as_square(a)
    xm = as_square(x)
    if m.shape != xm.shape:
        raise ValueError(f"shape mismatch: {m.shape} vs {xm.shape}")
    ax = m @ xm
    xa = xm @ m
    return AxiomResiduals(
        axa=rel_residual(ax @ m - m, m),
        xax=rel_residual(xa @ xm - xm, xm),
        commutator=rel_residual(ax - xa, ax),
    )


def is_ep(a, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Whether the ranges of a and its transpose coincide.

    For such matrices the group inverse and the Moore-Penrose inverse are
    the same matrix, and the fixed point of a convergent scheme is the
    minimum-norm least-squares solution.
    """
    m = as_square(a)
    return subspaces_equal(m, m.T, "range", tol)


def group_projector_residuals(a, ginv) -> tuple[float, float]:
    """Residuals of A A# being the projector onto R(A) along N(A).

    Returns (commutation residual, idempotency residual); both should be
    at roundoff level for a genuine group inverse.
    """
    m = as_square(a)
    p = m @ ginv
    return (
        rel_residual(p - ginv @ m, p),
        rel_residual(p @ p - p, p),
    )
