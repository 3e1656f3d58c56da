"""Polar decomposition and the deformed-polar transform family.

The central object multiplies the unitary polar factor U of T on the left
by f(|T|) and on the right by g(|T|), where f and g are nonnegative with
f(x) * g(x) = x. The pair family is closed (powers and scaled powers), so
the product constraint holds by construction instead of being trusted on
opaque callables.

Convention: U is always the unitary factor W V* obtained from a full SVD.
For singular T that factor is not unique on the kernel, which only matters
at the endpoint exponents 0 and 1; tests of endpoint identities therefore
stick to invertible inputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import DomainError, Svd, as_matrix, input_scale, max_abs, svd

__all__ = [
    "FunctionPair",
    "PolarFactors",
    "aluthge_fg",
    "aluthge_t",
    "modulus_powers",
    "off_diag_block",
    "polar",
    "power_pair",
    "scaled_power_pair",
]


@dataclass(frozen=True)
class FunctionPair:
    """The pair f(x) = c * x^a, g(x) = x^(1-a) / c with a in [0, 1], c > 0.

    Under the 0^0 = 1 convention, a = 0 makes f constant, so the transform
    degenerates to T itself, and a = 1 gives |T| U from the same formula.
    """

    a: float
    c: float = 1.0

    def __post_init__(self):
        if not (0.0 <= self.a <= 1.0):
            raise DomainError(f"exponent a={self.a} outside [0, 1]")
        if not (self.c > 0.0) or math.isinf(self.c):
            raise DomainError(f"scale c={self.c} must be finite and positive")

    def f(self, x):
        return self.c * np.power(x, self.a)

    def g(self, x):
        return np.power(x, 1.0 - self.a) / self.c

    def label(self) -> str:
        if self.c == 1.0:
            return f"power({self.a:g})"
        return f"scaled_power({self.a:g},{self.c:g})"


def power_pair(t: float) -> FunctionPair:
    """f = x^t, g = x^(1-t)."""
    return FunctionPair(a=float(t))


def scaled_power_pair(a: float, c: float) -> FunctionPair:
    """f = c * x^a, g = x^(1-a) / c; the scale cancels through the product."""
    return FunctionPair(a=float(a), c=float(c))


@dataclass(frozen=True)
class PolarFactors:
    """T = unitary @ modulus with modulus PSD and unitary square."""

    unitary: np.ndarray
    modulus: np.ndarray


def polar(t) -> PolarFactors:
    """Polar decomposition with the unitary factor W V* from a full SVD."""
    t = as_matrix(t)
    f = svd(t)
    u = f.left @ f.right
    v = f.right.conj().T
    mod = (v * f.sigma) @ f.right
    n = t.shape[0]
    if max_abs(u.conj().T @ u - np.eye(n)) > 1e-9:
        raise DomainError("polar unitary factor failed the unitarity check")
    if max_abs(u @ mod - t) > 1e-9 * input_scale(t):
        raise DomainError("polar reconstruction failed")
    return PolarFactors(unitary=u, modulus=mod)


def _aluthge_from_svd(f: Svd, pair: FunctionPair) -> np.ndarray:
    """f(|T|) U g(|T|) assembled from an existing SVD of T.

    With T = W diag(s) V*, the factor U = W V* conjugated into the right
    singular basis is C = V* U V, and the transform is
    V (f(s) row-scaled C column-scaled g(s)) V*.
    """
    v = f.right.conj().T
    core = f.right @ (f.left @ f.right) @ v
    scaled = pair.f(f.sigma)[:, None] * core * pair.g(f.sigma)[None, :]
    return v @ scaled @ f.right


def aluthge_fg(t, pair: FunctionPair) -> np.ndarray:
    """The deformed transform f(|T|) U g(|T|) for the unitary polar factor U."""
    return _aluthge_from_svd(svd(as_matrix(t)), pair)


def aluthge_t(m, t: float) -> np.ndarray:
    """|T|^t U |T|^(1-t); t = 1/2 is the classical transform, t = 1 is |T| U."""
    t = float(t)
    if not (0.0 <= t <= 1.0):
        raise DomainError(f"transform parameter t={t} outside [0, 1]")
    return aluthge_fg(m, FunctionPair(a=t))


def modulus_powers(t, exponent: float):
    """((T*T)^(e/2), (TT*)^(e/2)) from a single SVD.

    The first output is |T|^e, the second |T*|^e; both are Hermitian PSD.
    """
    f = svd(as_matrix(t))
    vals = np.power(f.sigma, float(exponent))
    v = f.right.conj().T
    right_side = (v * vals) @ f.right
    left_side = (f.left * vals) @ f.left.conj().T
    return right_side, left_side


def off_diag_block(t, s) -> np.ndarray:
    """The 2n x 2n matrix with T upper-right, S lower-left, zeros elsewhere."""
    t = as_matrix(t)
    s = as_matrix(s, "second block")
    if t.shape != s.shape:
        raise DomainError(f"block dimensions differ: {t.shape} vs {s.shape}")
    n = t.shape[0]
    out = np.zeros((2 * n, 2 * n), dtype=np.complex128)
    out[:n, n:] = t
    out[n:, :n] = s
    return out
