"""Seeded generators for the structured operand classes used by the checks.

Draws are keyed through a counter-based generator (Philox), so a given spec
always produces bit-identical output regardless of call order or thread
count. Child seeds are derived by SHA-256 over a canonical text encoding,
never by Python's process-salted hash().
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass, field

import numpy as np

from .linalg import DomainError

__all__ = ["KINDS", "EnsembleSpec", "derive_seed", "sample"]

KINDS = (
    "ginibre",
    "hermitian",
    "positive",
    "haar_unitary",
    "square_zero",
    "normal",
    "rank_deficient",
)


def derive_seed(*parts) -> int:
    """First 8 bytes (little-endian) of SHA-256 over '|'-joined parts.

    Every part is rendered with str(), so floats must already be in their
    canonical text form when reproducibility across callers matters.
    """
    text = "|".join(str(part) for part in parts)
    digest = hashlib.sha256(text.encode("ascii")).digest()
    return int.from_bytes(digest[:8], "little")


@dataclass(frozen=True)
class EnsembleSpec:
    """One deterministic draw: which structured class, what size, which key."""

    kind: str
    n: int
    seed: int
    params: tuple = field(default=())

    def param(self, name, default=None):
        for key, value in self.params:
            if key == name:
                return value
        return default


def _generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(key=np.uint64(seed)))


def _complex_gaussian(gen, rows: int, cols: int) -> np.ndarray:
    """i.i.d. entries (g1 + i g2) / sqrt(2) with standard normal g1, g2."""
    re = gen.standard_normal((rows, cols))
    im = gen.standard_normal((rows, cols))
    return (re + 1j * im) / math.sqrt(2.0)


def _haar_unitary(gen, n: int) -> np.ndarray:
    a = _complex_gaussian(gen, n, n)
    q, r = np.linalg.qr(a)
    d = np.diagonal(r)
    phase = np.where(np.abs(d) > 0.0, d / np.abs(np.where(np.abs(d) > 0.0, d, 1.0)), 1.0)
    return q * phase[None, :]


def sample(spec: EnsembleSpec) -> np.ndarray:
    """Draw the matrix a spec describes. Same spec, same bits."""
    if spec.kind not in KINDS:
        raise DomainError(f"unknown ensemble kind {spec.kind!r}")
    n = int(spec.n)
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {spec.n}")
    gen = _generator(int(spec.seed))

    if spec.kind == "ginibre":
        return _complex_gaussian(gen, n, n)

    if spec.kind == "hermitian":
        a = _complex_gaussian(gen, n, n)
        return (a + a.conj().T) / 2.0

    if spec.kind == "positive":
        # The identity shift keeps draws strictly positive definite, away
        # from the kernel ambiguity of the polar factor.
        a = _complex_gaussian(gen, n, n)
        return a.conj().T @ a + 1e-6 * np.eye(n)

    if spec.kind == "haar_unitary":
        return _haar_unitary(gen, n)

    if spec.kind == "square_zero":
        if n % 2 != 0:
            raise DomainError(f"square_zero needs even dimension, got {n}")
        half = n // 2
        b = _complex_gaussian(gen, half, half)
        out = np.zeros((n, n), dtype=np.complex128)
        out[:half, half:] = b
        return out

    if spec.kind == "normal":
        q = _haar_unitary(gen, n)
        z = gen.standard_normal(n) + 1j * gen.standard_normal(n)
        z = z / math.sqrt(2.0)
        return (q * z) @ q.conj().T

    # rank_deficient: a product of thin Gaussian factors
    r = int(spec.param("r", max(1, n // 2)))
    if not (1 <= r <= n):
        raise DomainError(f"rank parameter r={r} outside [1, {n}]")
    x = _complex_gaussian(gen, n, r)
    y = _complex_gaussian(gen, r, n)
    return x @ y
