"""Proper splittings of index-one matrices.

A splitting A = U - V is *proper* when U has the same range and null
space as A.  Two subclasses drive all convergence statements here:

* G-regular:       U# >= 0 and V >= 0
* G-weak regular:  U# >= 0 and U#V >= 0

Construction validates the subspace conditions, caches the group inverse
of U and classifies the splitting once; values are immutable afterwards.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .errors import AttemptsExhaustedError, NotIndexOneError, NotProperSplittingError
from .ginverse import group_inverse
from .kernel import (
    DEFAULT_TOL,
    Tolerances,
    as_square,
    inverse,
    is_nonneg,
    rel_residual,
    solve_square,
    subspaces_equal,
)


class SplittingClass(enum.Enum):
    PROPER = "proper"
    G_REGULAR = "G-regular"
    G_WEAK_REGULAR = "G-weak-regular"


@dataclass(frozen=True)
class Splitting:
    """A validated proper splitting a = u - v with cached U# and classes."""

    a: np.ndarray
    u: np.ndarray
    v: np.ndarray
    u_ginv: np.ndarray
    classes: frozenset[SplittingClass]

    @property
    def iteration_factor(self) -> np.ndarray:
        """The single-splitting iteration matrix U#V."""
        return self.u_ginv @ self.v

    def same_target(self, other: "Splitting") -> bool:
        return self.a.shape == other.a.shape and np.array_equal(self.a, other.a)


@dataclass(frozen=True)
class GenConfig:
    """Controls randomized splitting generation.

    Candidates perturb the core of the target matrix multiplicatively:
    C' = C (I + s E) with E drawn entrywise from core_entry_range and
    s = perturbation_scale, then are rejected until the G-weak regularity
    filter passes or max_attempts runs out.
    """

    seed: int = 0
    max_attempts: int = 10_000
    core_entry_range: tuple[float, float] = (0.0, 1.0)
    perturbation_scale: float = 0.5

    def __post_init__(self):
        if self.max_attempts < 1:
            raise ValueError("max_attempts must be at least 1")
        lo, hi = self.core_entry_range
        if not (hi > lo >= 0.0):
            raise ValueError("core_entry_range must satisfy 0 <= lo < hi")
        if not self.perturbation_scale > 0:
            raise ValueError("perturbation_scale must be positive")


def _classes_of(u_ginv, v, tol: Tolerances) -> frozenset[SplittingClass]:
    classes = {SplittingClass.PROPER}
    if is_nonneg(u_ginv, tol):
        regular = is_nonneg(v, tol)
        if regular:
            classes.add(SplittingClass.G_REGULAR)
        # regularity implies weak regularity: nonneg times nonneg is nonneg,
        # so the implication must survive rounding of the product
        if regular or is_nonneg(u_ginv @ v, tol):
            classes.add(SplittingClass.G_WEAK_REGULAR)
    return frozenset(classes)


def make_splitting(a, u, tol: Tolerances = DEFAULT_TOL) -> Splitting:
    """Validate a = u - (u - a) as a proper splitting and classify it.

    Raises NotProperSplittingError when u does not preserve the range or
    null space of a, and propagates NotIndexOneError from the group
    inverse of u.
    """
    ma = as_square(a)
    mu = as_square(u)
    if ma.shape != mu.shape:
        raise ValueError(f"shape mismatch: {ma.shape} vs {mu.shape}")
    if not subspaces_equal(ma, mu, "range", tol):
        raise NotProperSplittingError("R(U) differs from R(A)")
    if not subspaces_equal(ma, mu, "null", tol):
        raise NotProperSplittingError("N(U) differs from N(A)")
    u_ginv = group_inverse(mu, tol).ginv
    v = mu - ma
    return Splitting(
        a=ma, u=mu, v=v, u_ginv=u_ginv, classes=_classes_of(u_ginv, v, tol)
    )


def classify(s: Splitting, tol: Tolerances = DEFAULT_TOL) -> frozenset[SplittingClass]:
    """Recompute the classification of an existing splitting."""
    return _classes_of(s.u_ginv, s.v, tol)


def generate_gweak(a, cfg: GenConfig, tol: Tolerances = DEFAULT_TOL) -> Splitting:
    """Draw proper splittings at random until one is G-weak regular.

    Candidates come from the family of matrices sharing the range and
    null space of ``a``, realized through the group-inverse change of
    basis: K = Q diag(C', 0) Q^-1 with C' a perturbed copy of the core
    of ``a``.  That guarantees properness by construction, so the
    rejection loop only filters on the nonnegativity conditions.  The
    draw is deterministic for a fixed seed.

    Raises AttemptsExhaustedError (carrying the attempt count) when no
    candidate passes within cfg.max_attempts; group-monotone targets are
    the intended inputs, anything else may exhaust the loop.
    """
    ma = as_square(a)
    n = ma.shape[0]
    result = group_inverse(ma, tol)
    q = result.change_basis
    core = result.core
    r = core.shape[0]
    q_inv = solve_square(q, np.eye(n))
    rng = np.random.default_rng(cfg.seed)
    lo, hi = cfg.core_entry_range
    for attempt in range(1, cfg.max_attempts + 1):
        e = rng.uniform(lo, hi, (r, r))
        perturbed = core @ (np.eye(r) + cfg.perturbation_scale * e)
        block = np.zeros((n, n))
        block[:r, :r] = perturbed
        candidate = q @ block @ q_inv
        try:
            splitting = make_splitting(ma, candidate, tol)
        except (NotProperSplittingError, NotIndexOneError):
            continue  # perturbation degenerate for this draw
        if SplittingClass.G_WEAK_REGULAR in splitting.classes:
            return splitting
    raise AttemptsExhaustedError(cfg.max_attempts)


@dataclass(frozen=True)
class SplittingIdentities:
    """Residuals of the identities every proper splitting satisfies.

    projector_left / projector_right:   AA# = UU#  and  A#A = U#U
    factor_left / factor_right:         A = U(I - U#V) = (I - VU#)U
    sigma_min_left / sigma_min_right:   smallest singular values of
                                        I - U#V and I - VU# (nonsingularity)
    ginv_left / ginv_right:             A# = (I - U#V)^-1 U# = U#(I - VU#)^-1
    """

    projector_left: float
    projector_right: float
    factor_left: float
    factor_right: float
    sigma_min_left: float
    sigma_min_right: float
    ginv_left: float
    ginv_right: float

    def max_residual(self) -> float:
        return max(
            self.projector_left,
            self.projector_right,
            self.factor_left,
            self.factor_right,
            self.ginv_left,
            self.ginv_right,
        )


def splitting_identity_residuals(
    s: Splitting, tol: Tolerances = DEFAULT_TOL
) -> SplittingIdentities:
    """Evaluate the exact proper-splitting identities on a splitting."""
    a, u, v, ug = s.a, s.u, s.v, s.u_ginv
    n = a.shape[0]
    ag = group_inverse(a, tol).ginv
    eye = np.eye(n)
    left = eye - ug @ v
    right = eye - v @ ug
    return SplittingIdentities(
        projector_left=rel_residual(a @ ag - u @ ug, a @ ag),
        projector_right=rel_residual(ag @ a - ug @ u, ag @ a),
        factor_left=rel_residual(a - u @ left, a),
        factor_right=rel_residual(a - right @ u, a),
        sigma_min_left=float(np.linalg.svd(left, compute_uv=False)[-1]),
        sigma_min_right=float(np.linalg.svd(right, compute_uv=False)[-1]),
        ginv_left=rel_residual(ag - solve_square(left, ug), ag),
        ginv_right=rel_residual(ag - ug @ inverse(right), ag),
    )
