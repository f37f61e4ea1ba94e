"""Coefficient sequences of complex Jacobi matrices and finite blocks.

A complex Jacobi matrix is tridiagonal and complex symmetric (no
conjugation): diagonal b_1, b_2, ... and off-diagonal a_1, a_2, ... with
every a_n != 0.  An extra boundary parameter a0 != 0 couples the dynamic
systems to the n = 0 boundary.  Semi-infinite operators are represented by
a finite stored list plus an explicit tail rule: ``"free"`` continues with
a_n = 1, b_n = 0, ``"none"`` raises on overrun.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InsufficientCoefficients,
    LengthMismatch,
    NonFiniteEntry,
    ZeroOffDiagonal,
)

__all__ = [
    "JacobiCoefficients",
    "FiniteJacobiMatrix",
    "validate_coefficients",
    "assemble_finite",
    "load_coefficients",
    "free_coefficients",
]


@dataclass(frozen=True)
class JacobiCoefficients:
    """Validated coefficient data (a_1..a_L, b_1..b_L, boundary a0).

    ``bound_B`` is the exact max modulus over the stored a_n, b_n.
    """

    a: np.ndarray
    b: np.ndarray
    a0: complex
    bound_B: float
    tail: str = "none"  # "free" | "none"

    @property
    def length(self) -> int:
        return len(self.b)

    def a_at(self, n: int) -> complex:
        """Off-diagonal a_n; a_at(0) is the boundary parameter a0."""
        if n == 0:
            return self.a0
        if 1 <= n <= len(self.a):
            return complex(self.a[n - 1])
        if self.tail == "free":
            return 1.0 + 0.0j
        raise InsufficientCoefficients(f"a_{n} not stored (L={len(self.a)})")

    def b_at(self, n: int) -> complex:
        """Diagonal b_n, n >= 1."""
        if 1 <= n <= len(self.b):
            return complex(self.b[n - 1])
        if self.tail == "free":
            return 0.0 + 0.0j
        raise InsufficientCoefficients(f"b_{n} not stored (L={len(self.b)})")

    def a_extended(self, n_max: int) -> np.ndarray:
        """Array [a0, a_1, ..., a_{n_max}] with the tail rule applied."""
        return np.array([self.a_at(n) for n in range(n_max + 1)], dtype=complex)

    def b_extended(self, n_max: int) -> np.ndarray:
        """Array [b_1, ..., b_{n_max}] with the tail rule applied."""
        return np.array([self.b_at(n) for n in range(1, n_max + 1)], dtype=complex)


@dataclass(frozen=True)
class FiniteJacobiMatrix:
    """Dense N x N complex symmetric tridiagonal block."""

    n: int
    entries: np.ndarray = field(repr=False)


def validate_coefficients(a, b, a0=1.0, tail="none") -> JacobiCoefficients:
    """Validate raw sequences and freeze them into JacobiCoefficients.

    Rejects zero off-diagonals (including a0), mismatched lengths and
    non-finite entries.  bound_B is recomputed as the max modulus of the
    stored a_n, b_n.
    """
    a_arr = np.asarray(a, dtype=complex)
    b_arr = np.asarray(b, dtype=complex)
    if a_arr.ndim != 1 or b_arr.ndim != 1 or len(a_arr) == 0 or len(b_arr) == 0:
        raise LengthMismatch("a and b must be non-empty 1-D sequences")
    if len(a_arr) != len(b_arr):
        raise LengthMismatch(f"len(a)={len(a_arr)} != len(b)={len(b_arr)}")
    a0_c = complex(a0)
    if not (np.all(np.isfinite(a_arr.view(float))) and np.all(np.isfinite(b_arr.view(float)))
            and np.isfinite(a0_c.real) and np.isfinite(a0_c.imag)):
        raise NonFiniteEntry("coefficients must be finite")
    if np.any(np.abs(a_arr) == 0.0):
        raise ZeroOffDiagonal("every a_n must be nonzero")
    if abs(a0_c) == 0.0:
        raise ZeroOffDiagonal("a0 must be nonzero")
    if tail not in ("free", "none"):
        raise ValueError(f"unknown tail rule {tail!r}")
    bound = float(max(np.abs(a_arr).max(), np.abs(b_arr).max()))
    return JacobiCoefficients(a=a_arr, b=b_arr, a0=a0_c, bound_B=bound, tail=tail)


def free_coefficients(length: int, a0=1.0, tail="free") -> JacobiCoefficients:
    """The free operator: a_n = 1, b_n = 0."""
    return validate_coefficients(np.ones(length), np.zeros(length), a0=a0, tail=tail)


def assemble_finite(coeffs: JacobiCoefficients, n: int) -> FiniteJacobiMatrix:
    """Assemble the N x N block: diag (b_1..b_N), off-diag (a_1..a_{N-1})."""
    if n < 1:
        raise InsufficientCoefficients("block size must be >= 1")
    diag = coeffs.b_extended(n)
    m = np.zeros((n, n), dtype=complex)
    m[np.arange(n), np.arange(n)] = diag
    if n > 1:
        off = np.array([coeffs.a_at(k) for k in range(1, n)], dtype=complex)
        idx = np.arange(n - 1)
        m[idx, idx + 1] = off
        m[idx + 1, idx] = off
    return FiniteJacobiMatrix(n=n, entries=m)


def load_coefficients(path) -> JacobiCoefficients:
    """Load a JSON coefficient config.

    Schema: {"a": [[re, im], ...], "b": [[re, im], ...],
             "a0": [re, im], "tail": "free"|"none"}.
    a0 defaults to 1, tail to "none".
    """
    with open(path) as fh:
        cfg = json.load(fh)
    a = [complex(re, im) for re, im in cfg["a"]]
    b = [complex(re, im) for re, im in cfg["b"]]
    a0 = complex(*cfg.get("a0", [1.0, 0.0]))
    tail = cfg.get("tail", "none")
    return validate_coefficients(a, b, a0=a0, tail=tail)


def save_coefficients(coeffs: JacobiCoefficients, path) -> None:
    """Write the JSON coefficient config (inverse of load_coefficients)."""
    cfg = {
        "a": [[z.real, z.imag] for z in coeffs.a],
        "b": [[z.real, z.imag] for z in coeffs.b],
        "a0": [coeffs.a0.real, coeffs.a0.imag],
        "tail": coeffs.tail,
    }
    with open(path, "w") as fh:
        json.dump(cfg, fh, indent=1)
