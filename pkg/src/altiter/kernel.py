"""Dense real-matrix kernel used by every other module.

Rank and subspace decisions are made from a singular value decomposition;
orthonormal bases make the subspace-equality test a well-conditioned
projector comparison.  Every threshold comes from an explicit
:class:`Tolerances` value so callers working with rounded data can relax
the decisions per call.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

import numpy as np

from .errors import NumericFailureError, SingularMatrixError

ENV_PREFIX = "ALTITER_"


@dataclass(frozen=True)
class Tolerances:
    """Numeric thresholds for rank, subspace, sign and equality decisions.

    rank_rel      relative singular-value cutoff per unit of dimension; the
                  effective cutoff is rank_rel * max(rows, cols) * sigma_max
    subspace_tol  spectral-norm bound on orthogonal-projector differences
    nonneg_tol    magnitude below which a negative entry counts as zero
    mat_eq_tol    relative bound on matrix-equality residuals
    refval_tol    slack when comparing against four-decimal reference values
    """

    rank_rel: float = 1e-12
    subspace_tol: float = 1e-8
    nonneg_tol: float = 1e-10
    mat_eq_tol: float = 1e-8
    refval_tol: float = 1e-3

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not value > 0:
                raise ValueError(f"{f.name} must be strictly positive, got {value!r}")

    @classmethod
    def from_env(cls, **overrides) -> "Tolerances":
        """Defaults, overridden per field by ALTITER_<FIELD> variables."""
        values = {}
        for f in fields(cls):
            raw = os.environ.get(ENV_PREFIX + f.name.upper())
            if raw is not None:
                values[f.name] = float(raw)
        values.update(overrides)
        return cls(**values)


DEFAULT_TOL = Tolerances()


def as_matrix(a) -> np.ndarray:
    """Validate and convert to a 2-d float array with finite entries."""
    m = np.asarray(a, dtype=float)
    if m.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got shape {m.shape}")
    if m.size and not np.isfinite(m).all():
        raise ValueError("matrix entries must be finite")
    return m


def as_square(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    return m


def as_vector(b, n: int | None = None) -> np.ndarray:
    """Accept shape (n,) or (n, 1) and return a finite 1-d float array."""
    v = np.asarray(b, dtype=float)
    if v.ndim == 2 and v.shape[1] == 1:
        v = v[:, 0]
    if v.ndim != 1:
        raise ValueError(f"expected a vector, got shape {np.shape(b)}")
    if v.size and not np.isfinite(v).all():
        raise ValueError("vector entries must be finite")
    if n is not None and v.shape[0] != n:
        raise ValueError(f"expected a vector of length {n}, got {v.shape[0]}")
    return v


def _rank_from_sv(s: np.ndarray, shape, tol: Tolerances) -> int:
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s > tol.rank_rel * max(shape) * s[0]))


def rank(a, tol: Tolerances = DEFAULT_TOL) -> int:
    """Number of singular values above the relative cutoff."""
    m = as_matrix(a)
    s = np.linalg.svd(m, compute_uv=False) if m.size else np.empty(0)
    return _rank_from_sv(s, m.shape, tol)


def range_basis(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the column space, one column per rank unit."""
    m = as_matrix(a)
    u, s, _ = np.linalg.svd(m)
    return u[:, : _rank_from_sv(s, m.shape, tol)]


def null_basis(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Orthonormal basis of the (right) null space."""
    m = as_matrix(a)
    _, s, vh = np.linalg.svd(m)
    return vh[_rank_from_sv(s, m.shape, tol):].T


def range_projector(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    b = range_basis(a, tol)
    return b @ b.T


def null_projector(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    b = null_basis(a, tol)
    return b @ b.T


def subspaces_equal(a, b, which: str = "range", tol: Tolerances = DEFAULT_TOL) -> bool:
    """Whether two matrices span the same range (or null) space.

    Compares the orthogonal projectors in spectral norm; bases themselves
    are not unique, projectors are.
    """
    ma, mb = as_matrix(a), as_matrix(b)
    if ma.shape != mb.shape:
        raise ValueError(f"shape mismatch: {ma.shape} vs {mb.shape}")
    if which == "range":
        pa, pb = range_projector(ma, tol), range_projector(mb, tol)
    elif which == "null":
        pa, pb = null_projector(ma, tol), null_projector(mb, tol)
    else:
        raise ValueError(f"which must be 'range' or 'null', got {which!r}")
    return float(np.linalg.norm(pa - pb, 2)) < tol.subspace_tol


def spectral_radius(a) -> float:
    """Largest eigenvalue modulus, from a dense eigenvalue decomposition."""
    m = as_square(a)
    if m.size == 0:
        return 0.0
    try:
        eigvals = np.linalg.eigvals(m)
    except np.linalg.LinAlgError as exc:
        raise NumericFailureError(f"eigenvalue computation failed: {exc}") from exc
    return float(np.max(np.abs(eigvals)))


def moore_penrose(a, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Pseudoinverse with the same rank cutoff the rest of the kernel uses."""
    m = as_matrix(a)
    return np.linalg.pinv(m, rcond=tol.rank_rel * max(m.shape))


def is_nonneg(a, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Entrywise nonnegativity, treating entries above -nonneg_tol as zero."""
    m = np.asarray(a, dtype=float)
    return bool(m.size == 0 or m.min() >= -tol.nonneg_tol)


def neg_violation(a) -> float:
    """How far below zero the most negative entry lies (0.0 if none)."""
    m = np.asarray(a, dtype=float)
    return float(max(0.0, -m.min())) if m.size else 0.0


def solve_square(a, b) -> np.ndarray:
    """Solve a x = b for square a, failing loudly on singular systems."""
    m = as_square(a)
    rhs = np.asarray(b, dtype=float)
    try:
        x = np.linalg.solve(m, rhs)
    except np.linalg.LinAlgError as exc:
        raise SingularMatrixError(f"coefficient matrix is singular: {exc}") from exc
    if not np.isfinite(x).all():
        raise SingularMatrixError("solution overflowed; matrix is numerically singular")
    return x


def inverse(a) -> np.ndarray:
    m = as_square(a)
    return solve_square(m, np.eye(m.shape[0]))


def rel_residual(delta, reference) -> float:
    """Frobenius norm of delta, relative to the reference when it is nonzero."""
    num = float(np.linalg.norm(delta))
    den = float(np.linalg.norm(reference))
    return num / den if den > 0 else num
