"""Spectral-side route to the Weyl function.

Solutions p, q, phi+ of the three-term difference equation

    a_{n-1} psi_{n-1} + b_n psi_n + a_n psi_{n+1} = lambda psi_n,

Wronskian, Green function, and m(lambda) = -phi+_1 / phi+_0.

Index 0 of every stored solution is the formal boundary value; the
equation at n = 1 closes with the boundary parameter a0 (the m-function
formula itself always uses the a0 = 1 convention, so m does not depend on
the stored a0).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import JacobiCoefficients
from .errors import (
    IndexOutOfRange,
    MismatchedLambda,
    NoDecayDetected,
    PoleAtLambda,
    SingularWronskian,
)

__all__ = [
    "RecursionSolution",
    "solve_pq",
    "phi_plus_finite",
    "phi_plus_semiinfinite",
    "wronskian",
    "green_function",
    "weyl_resolvent",
]


@dataclass(frozen=True)
class RecursionSolution:
    """Values psi_0..psi_{n_max} of a solution at spectral parameter lam."""

    values: np.ndarray
    lam: complex

    def __getitem__(self, n: int) -> complex:
        return complex(self.values[n])

    @property
    def n_max(self) -> int:
        return len(self.values) - 1


def solve_pq(coeffs: JacobiCoefficients, lam, n_max: int):
    """Forward recursion for the fundamental pair (p, q).

    Initial data p_0 = 0, p_1 = 1 and q_0 = 1, q_1 = 0; the equation at
    n = 1 uses the stored boundary a0.
    """
    lam = complex(lam)
    p = np.zeros(n_max + 1, dtype=complex)
    q = np.zeros(n_max + 1, dtype=complex)
    p[1] = 1.0
    q[0] = 1.0
    for n in range(1, n_max):
        an = coeffs.a_at(n)
        an_prev = coeffs.a_at(n - 1)
        bn = coeffs.b_at(n)
        p[n + 1] = ((lam - bn) * p[n] - an_prev * p[n - 1]) / an
        q[n + 1] = ((lam - bn) * q[n] - an_prev * q[n - 1]) / an
    return (RecursionSolution(p, lam), RecursionSolution(q, lam))


def phi_plus_finite(coeffs: JacobiCoefficients, lam, n: int,
                    a0_closure=None) -> RecursionSolution:
    """Backward recursion from the right-end Cauchy data.

    phi_{N+1} = 0, phi_N = 1; phi_0 is closed through the n = 1 equation
    a0 phi_0 + b_1 phi_1 + a_1 phi_2 = lambda phi_1.  ``a0_closure``
    overrides the a0 used in that closure (the m-function formula fixes
    a0 = 1 there); default is the stored a0.
    """
    if n < 1:
        raise IndexOutOfRange("finite block size must be >= 1")
    lam = complex(lam)
    a0 = complex(coeffs.a0 if a0_closure is None else a0_closure)
    phi = np.zeros(n + 2, dtype=complex)
    phi[n] = 1.0
    for k in range(n, 1, -1):
        up = coeffs.a_at(k) * phi[k + 1] if k < n else 0.0
        phi[k - 1] = ((lam - coeffs.b_at(k)) * phi[k] - up) / coeffs.a_at(k - 1)
    up1 = coeffs.a_at(1) * phi[2] if n >= 2 else 0.0
    phi[0] = ((lam - coeffs.b_at(1)) * phi[1] - up1) / a0
    return RecursionSolution(phi, lam)


def phi_plus_semiinfinite(coeffs: JacobiCoefficients, lam, n_trunc: int,
                          tol: float = 1e-8, a0_closure=None) -> RecursionSolution:
    """Numerical stand-in for the decaying l2 solution.

    Computes phi+ for the truncated problems of size n_trunc and
    2*n_trunc, normalizes both to phi_1 = 1 and accepts the n_trunc
    solution if the first min(10, n_trunc) entries agree within tol.
    Disagreement means no decaying solution was detected (lambda likely
    near the essential spectrum).
    """
    sol_a = phi_plus_finite(coeffs, lam, n_trunc, a0_closure=a0_closure)
    sol_b = phi_plus_finite(coeffs, lam, 2 * n_trunc, a0_closure=a0_closure)
    k = min(10, n_trunc)

    def normalized(sol):
        v = sol.values
        if abs(v[1]) < 1e-300 * max(1.0, np.abs(v).max()):
            raise NoDecayDetected("phi_1 vanished in truncation")
        return v / v[1]

    va, vb = normalized(sol_a), normalized(sol_b)
    diff = np.abs(va[: k + 1] - vb[: k + 1]).max()
    scale = 1.0 + np.abs(va[: k + 1]).max()
    if diff > tol * scale:
        raise NoDecayDetected(
            f"truncation disagreement {diff:.3e} > tol at lambda={lam}")
    return RecursionSolution(va, complex(lam))


def wronskian(coeffs: JacobiCoefficients, u: RecursionSolution,
              v: RecursionSolution, n: int) -> complex:
    """W(u, v)[n] = a_n (u_n v_{n+1} - u_{n+1} v_n); n = 0 uses a0."""
    if u.lam != v.lam:
        raise MismatchedLambda(f"{u.lam} != {v.lam}")
    if n < 0 or n + 1 > u.n_max or n + 1 > v.n_max:
        raise IndexOutOfRange(f"index {n} outside stored range")
    an = coeffs.a_at(n)
    return an * (u[n] * v[n + 1] - u[n + 1] * v[n])


def green_function(coeffs: JacobiCoefficients, m: int, n: int, lam,
                   n_total: int) -> complex:
    """Resolvent kernel G_{m,n} = p_min(lambda) phi+_max(lambda) / W(p, phi+)."""
    if not (1 <= m <= n_total and 1 <= n <= n_total):
        raise IndexOutOfRange("indices must lie in 1..n_total")
    p, _ = solve_pq(coeffs, lam, n_total)
    phi = phi_plus_finite(coeffs, lam, n_total)
    w = wronskian(coeffs, p, phi, 0)
    scale = max(1.0, float(np.abs(phi.values).max()), float(np.abs(p.values).max()))
    if abs(w) < 1e-13 * scale:
        raise SingularWronskian(f"lambda={lam} is (numerically) an eigenvalue")
    lo, hi = min(m, n), max(m, n)
    return p[lo] * phi[hi] / w


def weyl_resolvent(coeffs: JacobiCoefficients, lam, n: int | None = None,
                   n_trunc: int | None = None, tol: float = 1e-8) -> complex:
    """m(lambda) = -phi+_1 / phi+_0, with a0 = 1 in the phi_0 closure.

    Finite mode (``n``): equals the (1,1) entry of the dense resolvent of
    the N x N block.  Semi-infinite mode (``n_trunc``, ``tol``): uses the
    truncation-agreement surrogate for the l2 solution.
    """
    if (n is None) == (n_trunc is None):
        raise ValueError("pass exactly one of n (finite) or n_trunc (semi-infinite)")
    if n is not None:
        phi = phi_plus_finite(coeffs, lam, n, a0_closure=1.0)
    else:
        phi = phi_plus_semiinfinite(coeffs, lam, n_trunc, tol=tol, a0_closure=1.0)
    phi0, phi1 = phi[0], phi[1]
    if abs(phi0) < 1e-12 * max(1.0, abs(phi1)):
        raise PoleAtLambda(f"phi+_0 vanished at lambda={lam}")
    return -phi1 / phi0
