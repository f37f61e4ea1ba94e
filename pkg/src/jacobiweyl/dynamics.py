"""Discrete-time boundary-control dynamics and response operators.

The wave field u^f solves

    u_{n,t+1} + u_{n,t-1} = a_n u_{n+1,t} + a_{n-1} u_{n-1,t} + b_n u_{n,t}

with zero initial layers u_{n,-1} = u_{n,0} = 0 and boundary row
u_{0,t} = f_t, on the half-line (n >= 1) or on an interval with the extra
Dirichlet condition u_{N+1,t} = 0.  Finite speed of propagation
(u_{n,t} = 0 for n > t) makes the half-line array exactly truncatable at
n = T + 1.

The response operator is the boundary trace (R^T f)_t = u^f_{1,t}; it is
a convolution with the response vector r, r_t = u^delta_{1,t+1}, r_0 = a0.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import JacobiCoefficients

__all__ = [
    "ControlSequence",
    "WaveField",
    "ResponseVector",
    "delta_control",
    "simulate",
    "response_vector",
    "convolve",
    "apply_response",
]


@dataclass(frozen=True)
class ControlSequence:
    """Boundary control (f_0, ..., f_{T-1})."""

    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "values", np.asarray(self.values, dtype=complex))

    @property
    def horizon(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class WaveField:
    """Solution array over n = 0..n_max, t = -1..T.

    ``at(n, t)`` indexes by the physical time t.  The boundary row holds
    f_t for 0 <= t <= T-1 (the t = T boundary sample lies outside the
    control horizon and is stored as 0).
    """

    geometry: str  # "halfline" | "interval"
    horizon: int
    u: np.ndarray  # shape (n_max + 1, horizon + 2), column j is t = j - 1
    n_interval: int | None = None

    @property
    def n_max(self) -> int:
        return self.u.shape[0] - 1

    def at(self, n: int, t: int) -> complex:
        return complex(self.u[n, t + 1])

    def boundary_trace(self) -> np.ndarray:
        """Row n = 1 indexed by t = 0..T."""
        return self.u[1, 1:]


@dataclass(frozen=True)
class ResponseVector:
    """Convolution kernel (r_0, ..., r_{T-1}) of the response operator."""

    r: np.ndarray
    a0: complex

    @property
    def horizon(self) -> int:
        return len(self.r)


def delta_control(horizon: int) -> ControlSequence:
    f = np.zeros(horizon, dtype=complex)
    if horizon > 0:
        f[0] = 1.0
    return ControlSequence(f)


def simulate(coeffs: JacobiCoefficients, f: ControlSequence,
             geometry: str = "halfline", n: int | None = None) -> WaveField:
    """Time-step the boundary-control system with control f.

    ``geometry="halfline"`` allocates n up to T + 1 (lossless by finite
    speed); ``geometry="interval"`` needs the block size ``n`` and
    enforces u_{N+1,t} = 0.
    """
    t_total = f.horizon
    if geometry == "halfline":
        n_max = t_total + 1
    elif geometry == "interval":
        if n is None or n < 1:
            raise ValueError("interval geometry needs a block size n >= 1")
        n_max = n + 1
    else:
        raise ValueError(f"unknown geometry {geometry!r}")

    n_top = n_max - 1  # largest interior index updated each step
    if geometry == "interval":
        # a_{N} multiplies the Dirichlet zero at n = N + 1; never read.
        a_ext = np.concatenate([coeffs.a_extended(n_top - 1), [0.0]]) \
            if n_top >= 1 else np.array([coeffs.a0])
    else:
        a_ext = coeffs.a_extended(n_top)    # a_0..a_{n_top}
    b_ext = coeffs.b_extended(n_top) if n_top >= 1 else np.zeros(0, dtype=complex)

    u = np.zeros((n_max + 1, t_total + 2), dtype=complex)
    u[0, 1:t_total + 1] = f.values
    for t in range(0, t_total):
        j = t + 1  # column of time t
        cur = u[:, j]
        u[1:n_top + 1, j + 1] = (
            a_ext[1:n_top + 1] * cur[2:n_max + 1]
            + a_ext[0:n_top] * cur[0:n_top]
            + b_ext[0:n_top] * cur[1:n_top + 1]
            - u[1:n_top + 1, j - 1]
        )
        if geometry == "interval":
            u[n_max, j + 1] = 0.0
    return WaveField(geometry=geometry, horizon=t_total, u=u,
                     n_interval=n if geometry == "interval" else None)


def response_vector(coeffs: JacobiCoefficients, t_horizon: int,
                    geometry: str = "halfline", n: int | None = None) -> ResponseVector:
    """Response vector r_t = u^delta_{1,t+1}, t = 0..T-1."""
    if t_horizon < 1:
        raise ValueError("horizon must be >= 1")
    wf = simulate(coeffs, delta_control(t_horizon), geometry=geometry, n=n)
    r = wf.u[1, 2:t_horizon + 2].copy()
    return ResponseVector(r=r, a0=coeffs.a0)


def convolve(f, g) -> np.ndarray:
    """(f * g)_t = sum_{s<=t} f_s g_{t-s}, truncated to the shorter horizon."""
    f = np.asarray(f, dtype=complex)
    g = np.asarray(g, dtype=complex)
    horizon = min(len(f), len(g))
    if horizon == 0:
        return np.zeros(0, dtype=complex)
    return np.convolve(f, g)[:horizon]


def apply_response(r: ResponseVector, f: ControlSequence) -> np.ndarray:
    """Boundary trace from the kernel: out[t] = u^f_{1,t}, t = 0..T.

    out[0] = 0 and out[t] = sum_s r_s f_{t-1-s} (the kernel convolved
    with the one-step-shifted control).
    """
    t_total = f.horizon
    out = np.zeros(t_total + 1, dtype=complex)
    if t_total == 0:
        return out
    full = np.convolve(r.r, f.values)
    k = min(t_total, len(full))
    out[1:k + 1] = full[:k]
    return out
