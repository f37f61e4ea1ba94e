"""Autonne-Takagi factorization and the discrete spectral measure.

For a complex symmetric block A there is a unitary U with U A U^T
diagonal, d_i >= 0; the rows u^i of U solve the coneigenvalue problem
A u^i = d_i conj(u^i).  Normalizing each row to first component 1
rotates the coneigenvalue by the phase conj(u^i_1)/u^i_1; these effective
(generally complex) coneigenvalues are the ones that enter the coupled
time recursion and the nodes omega.

The discrete measure has atoms at omega_k with weights 1/rho_k; its
Chebyshev "moments" reproduce the response vector of the interval system
(exactly in the real-coefficient case, reported otherwise).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import FiniteJacobiMatrix
from .dynamics import ControlSequence
from .errors import DegenerateSpectrum, ZeroFirstComponent

__all__ = [
    "TakagiFactorization",
    "SpectralMeasureData",
    "takagi_factorize",
    "spectral_data",
    "chebyshev_t",
    "chebyshev_table",
    "response_from_measure",
    "solve_coupled_c",
    "reconstruct_field",
    "moments",
]


@dataclass(frozen=True)
class TakagiFactorization:
    """Unitary factor U, coneigenvalues d_i >= 0 and self-check residuals."""

    u_matrix: np.ndarray = field(repr=False)
    d: np.ndarray
    residual_unitary: float
    residual_diag: float
    residual_coneigen: float


@dataclass(frozen=True)
class SpectralMeasureData:
    """Normalized coneigenvectors and the discrete measure data.

    u_vectors[i] has length N + 2 with u^i_0 = u^i_{N+1} = 0 and
    u^i_1 = 1; rho_i = sum_n |u^i_n|^2; H_{ki} = sum_n conj(u^k_n)
    conj(u^i_n); omega_i = d_i sum_k H_{ki} / rho_k with the effective
    coneigenvalues d_eff.
    """

    n: int
    u_vectors: np.ndarray = field(repr=False)  # shape (N, N+2)
    rho: np.ndarray
    h_matrix: np.ndarray = field(repr=False)
    omega: np.ndarray
    d_eff: np.ndarray
    a0: complex

    @property
    def weights(self) -> np.ndarray:
        """Atom weights 1/rho_k of the discrete measure."""
        return 1.0 / self.rho


def takagi_factorize(m) -> TakagiFactorization:
    """Takagi factorization U A U^T = diag(d) of a complex symmetric A.

    SVD-based: with A = V S W^H and distinct nonzero singular values,
    W^H conj(V) is a diagonal unitary whose square roots rephase V into
    the (transposed) Takagi factor.  Repeated or zero singular values
    abort with DegenerateSpectrum: the measure construction downstream
    assumes distinct nonzero coneigenvalues.
    """
    a = m.entries if isinstance(m, FiniteJacobiMatrix) else np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if np.abs(a - a.T).max() > 1e-12 * max(1.0, np.abs(a).max()):
        raise ValueError("matrix must be complex symmetric (A == A^T)")
    n = a.shape[0]
    v, s, wh = np.linalg.svd(a)
    gap_tol = 1e-10 * max(1.0, s[0] if n else 1.0)
    if s[-1] <= gap_tol or (n > 1 and np.min(s[:-1] - s[1:]) <= gap_tol):
        raise DegenerateSpectrum("repeated or zero singular values")
    phases_sq = np.diag(wh @ v.conj())
    u_tilde = v * np.sqrt(phases_sq)[np.newaxis, :]
    u = u_tilde.conj().T

    eye = np.eye(n)
    residual_unitary = float(np.abs(u @ u.conj().T - eye).max())
    residual_diag = float(np.abs(u @ a @ u.T - np.diag(s)).max())
    rows = u  # row i solves A u^i = d_i conj(u^i)
    residual_coneigen = float(
        np.abs(a @ rows.T - rows.conj().T * s[np.newaxis, :]).max())
    return TakagiFactorization(
        u_matrix=u, d=s.astype(float),
        residual_unitary=residual_unitary,
        residual_diag=residual_diag,
        residual_coneigen=residual_coneigen,
    )


def spectral_data(fact: TakagiFactorization, a0=1.0) -> SpectralMeasureData:
    """Build the discrete measure data from a Takagi factorization.

    Rows are rescaled to u^i_1 = 1 and padded with zeros at indices 0 and
    N + 1.  The rescaling carries the phase conj(u^i_1)/u^i_1 onto the
    coneigenvalue (d_eff), which is what the coupled recursion and the
    nodes omega use; in the real-coefficient case d_eff are exactly the
    eigenvalues of the block.
    """
    u_hat = fact.u_matrix
    n = u_hat.shape[0]
    first = u_hat[:, 0]
    if np.abs(first).min() < 1e-12:
        raise ZeroFirstComponent("a coneigenvector has vanishing first component")
    core = u_hat / first[:, np.newaxis]
    u_vec = np.zeros((n, n + 2), dtype=complex)
    u_vec[:, 1:n + 1] = core
    rho = np.sum(np.abs(core) ** 2, axis=1)  # equals 1/|u_hat_1|^2 by unitarity
    d_eff = fact.d * (first.conj() / first)
    h = core.conj() @ core.conj().T  # H_{ki} = sum_n conj(u^k_n) conj(u^i_n)
    omega = d_eff * np.sum(h / rho[:, np.newaxis], axis=0)
    return SpectralMeasureData(n=n, u_vectors=u_vec, rho=rho, h_matrix=h,
                               omega=omega, d_eff=d_eff, a0=complex(a0))


def chebyshev_t(t: int, omega):
    """Shifted-index Chebyshev recursion T_{t+1} = omega T_t - T_{t-1}.

    Initial data T_0 = 0, T_{-1} = -1, hence T_1 = 1, T_2 = omega and
    T_t(2 cos theta) = sin(t theta) / sin(theta).  ``omega`` may be a
    scalar or an array.
    """
    if t < -1:
        raise ValueError("t must be >= -1")
    omega = np.asarray(omega, dtype=complex)
    t_prev = -np.ones_like(omega)
    t_cur = np.zeros_like(omega)
    for _ in range(t):
        t_prev, t_cur = t_cur, omega * t_cur - t_prev
    out = t_prev if t == -1 else t_cur
    return complex(out) if out.ndim == 0 else out


def chebyshev_table(t_max: int, omega) -> np.ndarray:
    """Rows T_0(omega)..T_{t_max}(omega) for an array of points."""
    omega = np.asarray(omega, dtype=complex)
    table = np.zeros((t_max + 1,) + omega.shape, dtype=complex)
    t_prev = -np.ones_like(omega)
    for t in range(t_max):
        table[t + 1] = omega * table[t] - t_prev
        t_prev = table[t]
    return table


def response_from_measure(data: SpectralMeasureData, t: int) -> complex:
    """Moment representation a0 * sum_k T_t(omega_k) / rho_k of r^N_{t-1}."""
    if t < 1:
        raise ValueError("t must be >= 1")
    return complex(data.a0 * np.sum(chebyshev_t(t, data.omega) / data.rho))


def solve_coupled_c(data: SpectralMeasureData, d, f: ControlSequence) -> np.ndarray:
    """Time-step the coupled coefficient system.

    c^i_{t+1} + c^i_{t-1} - (d_i/rho_i) sum_k c^k_t H_{ki} = (a0/rho_i) f_t
    with zero initial layers; returns c of shape (N, T+1), column t.
    Pass data.d_eff for d (kept as an argument so alternative
    coneigenvalue conventions can be probed).
    """
    d = np.asarray(d, dtype=complex)
    t_total = f.horizon
    n = data.n
    c = np.zeros((n, t_total + 1), dtype=complex)
    c_prev = np.zeros(n, dtype=complex)
    drho = d / data.rho
    a0rho = data.a0 / data.rho
    h = data.h_matrix
    for t in range(t_total):
        # H symmetric: sum_k H_{ki} c^k = (H c)_i
        c[:, t + 1] = drho * (h @ c[:, t]) + a0rho * f.values[t] - c_prev
        c_prev = c[:, t]
    return c


def reconstruct_field(data: SpectralMeasureData, c: np.ndarray) -> np.ndarray:
    """v_{n,t} = sum_k c^k_t conj(u^k_n); shape (N, T+1), row n-1."""
    core = data.u_vectors[:, 1:data.n + 1]
    return core.conj().T @ c


def moments(data: SpectralMeasureData, k: int) -> complex:
    """k-th power moment s_k = sum_j omega_j^k / rho_j of the measure."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return complex(np.sum(data.omega ** k / data.rho))
