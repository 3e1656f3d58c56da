"""Dense complex linear algebra primitives shared by the rest of the package.

Everything operates on small square complex matrices held as numpy arrays.
Factorizations are delegated to LAPACK through numpy; the wrappers add the
validation and residual bookkeeping the higher layers rely on (Hermiticity
tolerances, PSD clamping, reconstruction checks).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

__all__ = [
    "DomainError",
    "HermitianEigen",
    "Svd",
    "as_matrix",
    "cartesian",
    "herm_apply",
    "herm_eigen",
    "input_scale",
    "max_abs",
    "modulus",
    "svd",
    "trace",
]


class DomainError(ValueError):
    """Raised when an input leaves the domain an operation is defined on."""


def max_abs(a) -> float:
    """Largest entry magnitude of an array (0.0 for empty input)."""
    a = np.asarray(a)
    if a.size == 0:
        return 0.0
    return float(np.max(np.abs(a)))


def input_scale(a) -> float:
    """max(1, largest entry magnitude); the reference scale for tolerances.

    Mixing an absolute floor with a relative term keeps tolerances meaningful
    for both tiny and large operands.
    """
    return max(1.0, max_abs(a))


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce input to a square complex128 ndarray, rejecting NaN/Inf."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] < 1:
        raise DomainError(f"{name} must be square and non-empty, got shape {m.shape}")
    if not np.isfinite(m).all():
        raise DomainError(f"{name} contains non-finite entries")
    return m


def trace(t) -> complex:
    """Sum of the diagonal entries."""
    return complex(np.trace(as_matrix(t)))


@dataclass(frozen=True)
class HermitianEigen:
    """Ascending eigenvalues and orthonormal eigenvectors of a Hermitian matrix.

    residual is the reconstruction error max|Q diag(values) Q* - H| actually
    observed, kept so callers can audit the factorization.
    """

    values: np.ndarray
    vectors: np.ndarray
    residual: float


@dataclass(frozen=True)
class Svd:
    """Full SVD T = left @ diag(sigma) @ right, sigma descending.

    right is stored in row form (the factor applied first), matching the
    LAPACK convention, and is unitary.
    """

    left: np.ndarray
    sigma: np.ndarray
    right: np.ndarray
    residual: float


def herm_eigen(h, check: bool = True) -> HermitianEigen:
    """Eigendecomposition of a Hermitian matrix.

    The input is symmetrized before the solve so roundoff-level asymmetry
    cannot leak into the factors; asymmetry beyond 1e-12 relative to the
    entry scale is rejected when check is set.
    """
    h = as_matrix(h, "hermitian matrix")
    scale = input_scale(h)
    if check and max_abs(h - h.conj().T) > 1e-12 * scale:
        raise DomainError("matrix is not Hermitian within 1e-12 relative tolerance")
    hs = (h + h.conj().T) / 2.0
    vals, vecs = np.linalg.eigh(hs)
    residual = max_abs((vecs * vals) @ vecs.conj().T - hs)
    if residual > 1e-10 * (1.0 + max_abs(hs)):
        raise DomainError("eigendecomposition residual out of tolerance")
    return HermitianEigen(values=vals, vectors=vecs, residual=residual)


def svd(t) -> Svd:
    """Full singular value decomposition with a reconstruction check."""
    t = as_matrix(t)
    w, sig, vh = np.linalg.svd(t)
    residual = max_abs((w * sig) @ vh - t)
    if residual > 1e-10 * (1.0 + max_abs(t)):
        raise DomainError("svd residual out of tolerance")
    return Svd(left=w, sigma=sig, right=vh, residual=residual)


def modulus(t) -> np.ndarray:
    """The PSD factor (T*T)^(1/2), assembled from the SVD.

    Its eigenvalues are exactly the singular values of T.
    """
    f = svd(t)
    v = f.right.conj().T
    return (v * f.sigma) @ f.right


def cartesian(t):
    """Split T into Hermitian parts, T = Re + i*Im.

    Both outputs are exactly Hermitian in floating point: entries (i, j) and
    (j, i) are computed from the same two input entries, and halving and
    division by 2i are exact.
    """
    t = as_matrix(t)
    th = t.conj().T
    return (t + th) / 2.0, (t - th) / 2j


def herm_apply(h, fn, clamp: bool = True) -> np.ndarray:
    """Apply a scalar function to a Hermitian matrix through its spectrum.

    Eigenvalues in [-1e-10 * scale, 0) are treated as roundoff from products
    like T*T and clamped to zero before fn is applied, so fractional powers
    of nominally-PSD inputs stay real. Anything below the clamp window is a
    DomainError. Note numpy's power convention 0.0 ** 0.0 == 1.0 applies.
    """
    eig = herm_eigen(h)
    vals = eig.values
    if clamp:
        floor = -1e-10 * input_scale(h)
        if float(vals[0]) < floor:
            raise DomainError(
                f"eigenvalue {float(vals[0]):.3e} below the PSD clamp window {floor:.3e}"
            )
        vals = np.maximum(vals, 0.0)
    fv = np.asarray(fn(vals), dtype=np.float64)
    return (eig.vectors * fv) @ eig.vectors.conj().T
