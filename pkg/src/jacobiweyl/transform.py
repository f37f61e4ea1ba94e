"""The z-lambda correspondence, free solutions and the discrete transform.

lambda = z + 1/z maps the unit disk onto the spectral plane; the branch
z(lambda) with |z| <= 1 is selected (ties on |z| = 1, i.e. lambda in
[-2, 2], resolve to Im z <= 0, matching z = (lambda - i sqrt(4-lambda^2))/2).
The free operator (a_n = 1, b_n = 0) has Weyl function m_0 = -z, l2
solution S_n = -z^n and spectral density sqrt(4 - lambda^2)/(2 pi) on
(-2, 2).

Region D = { |z(lambda)| < 1/R }, R = 3B + 1, is where the response
series for m is certified to converge; its boundary is the Joukowski
image of the circle |z| = 1/R (an ellipse with semi-axes R + 1/R and
R - 1/R).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OutsideRegionD, QuadratureNotConverged, ZeroArgument

__all__ = [
    "RegionD",
    "lambda_to_z",
    "z_to_lambda",
    "free_solutions",
    "free_measure_density",
    "fourier_forward",
    "fourier_inverse",
    "in_region_d",
    "region_boundary",
]


@dataclass(frozen=True)
class RegionD:
    """Convergence region data: R = 3B + 1."""

    bound_B: float

    @property
    def r_big(self) -> float:
        return 3.0 * self.bound_B + 1.0


def lambda_to_z(lam) -> complex:
    """Branch of z^2 - lambda z + 1 = 0 with |z| <= 1.

    Picks the smaller-modulus root; on [-2, 2] both roots lie on the unit
    circle and the one with Im z <= 0 is taken.
    """
    lam = complex(lam)
    s = np.sqrt(complex(lam * lam - 4.0))
    z1 = (lam - s) / 2.0
    z2 = (lam + s) / 2.0
    if abs(abs(z1) - abs(z2)) <= 1e-14 * (abs(z1) + abs(z2)):
        return z1 if z1.imag <= z2.imag else z2
    return z1 if abs(z1) < abs(z2) else z2


def z_to_lambda(z) -> complex:
    """Joukowski map lambda = z + 1/z."""
    z = complex(z)
    if z == 0:
        raise ZeroArgument("z must be nonzero")
    return z + 1.0 / z


def free_solutions(lam, n_max: int):
    """Free-operator solutions (P, Q, S) up to index n_max.

    P_0 = 0, P_1 = 1 and Q_0 = -1, Q_1 = 0 solve psi_{n-1} + psi_{n+1} =
    lambda psi_n; S_n = -z^n is the l2 one, S_n = Q_n + m_0 P_n with
    m_0 = -z.
    """
    lam = complex(lam)
    p = np.zeros(n_max + 1, dtype=complex)
    q = np.zeros(n_max + 1, dtype=complex)
    if n_max >= 1:
        p[1] = 1.0
    q[0] = -1.0
    for n in range(1, n_max):
        p[n + 1] = lam * p[n] - p[n - 1]
        q[n + 1] = lam * q[n] - q[n - 1]
    z = lambda_to_z(lam)
    s = -(z ** np.arange(n_max + 1))
    return p, q, s


def free_measure_density(lam: float) -> float:
    """Free spectral density sqrt(4 - lambda^2)/(2 pi) on (-2, 2), else 0."""
    lam = float(lam)
    if abs(lam) >= 2.0:
        return 0.0
    return float(np.sqrt(4.0 - lam * lam) / (2.0 * np.pi))


def fourier_forward(v, lam) -> complex:
    """Forward transform V(lambda) = sum_n S_n(lambda) v_n."""
    v = np.asarray(v, dtype=complex)
    if len(v) == 0:
        return 0.0 + 0.0j
    z = lambda_to_z(lam)
    return complex(np.sum(-(z ** np.arange(len(v))) * v))


def _chebyshev_u_quadrature(func, quad_points: int) -> complex:
    """Gauss quadrature for int_{-2}^{2} func(lambda) w(lambda) dlambda
    with w = sqrt(4 - lambda^2)/(2 pi), via lambda = 2 cos(theta)."""
    j = np.arange(1, quad_points + 1)
    theta = j * np.pi / (quad_points + 1)
    lam = 2.0 * np.cos(theta)
    w = (2.0 / (quad_points + 1)) * np.sin(theta) ** 2
    vals = np.array([func(x) for x in lam], dtype=complex)
    return complex(np.sum(w * vals))


def fourier_inverse(v_hat, n: int, quad_points: int = 64,
                    tol: float = 1e-8) -> complex:
    """Inverse transform v_n = int_{-2}^{2} V(lambda) S_n(lambda) drho.

    Implemented verbatim with Chebyshev-U quadrature and node doubling as
    a convergence check.  Experimental: the stated formula carries no
    biorthogonality guarantee here, so round-trip exactness is reported
    by callers, not asserted.
    """

    def integrand(lam):
        z = lambda_to_z(lam)
        return complex(v_hat(lam)) * (-(z ** n))

    coarse = _chebyshev_u_quadrature(integrand, quad_points)
    fine = _chebyshev_u_quadrature(integrand, 2 * quad_points + 1)
    if abs(fine - coarse) > tol * (1.0 + abs(fine)):
        raise QuadratureNotConverged(
            f"node doubling moved the result by {abs(fine - coarse):.3e}")
    return fine


def in_region_d(lam, region: RegionD) -> bool:
    """True iff |z(lambda)| < 1/R (equivalently lambda lies outside the
    closed ellipse with semi-axes R + 1/R, R - 1/R)."""
    return abs(lambda_to_z(lam)) < 1.0 / region.r_big


def region_boundary(region: RegionD, phis) -> np.ndarray:
    """Boundary sampler lambda(phi) = (R + 1/R) cos(phi) + i (1/R - R) sin(phi).

    For phi in (pi, 2 pi) these points lie on the level set |z| = 1/R in
    the upper half-plane.
    """
    phis = np.asarray(phis, dtype=float)
    r = region.r_big
    return (r + 1.0 / r) * np.cos(phis) + 1j * (1.0 / r - r) * np.sin(phis)
