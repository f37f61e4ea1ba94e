"""Weyl function as a power series in z built from the response vector.

Main representation: m(lambda) = -(1/a0) sum_{t>=1} z^t r_{t-1}, valid
for |z(lambda)| < 1/R with R = 3B + 1.  The exponent convention follows
from (R^T delta)_t = u^delta_{1,t} = r_{t-1} together with m =
sum_t S_t u^delta_{1,t}, S_t = -z^t; dividing by a0 removes the linear
scaling of the response (r_0 = a0), so m never depends on a0.  The
truncation is controlled by the rigorous envelopes |r_{t-1}| <=
R^{t-1} max(1, |a0|) and M_t <= R^t from the finite-speed energy
estimate.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import JacobiCoefficients
from .dynamics import ResponseVector, delta_control, response_vector, simulate
from .errors import (
    InsufficientCoefficients,
    NoDecayDetected,
    OutsideRegionD,
    PoleAtLambda,
    SingularWronskian,
)
from .recursion import weyl_resolvent
from .takagi import response_from_measure, spectral_data, takagi_factorize
from .transform import RegionD, in_region_d, lambda_to_z
from . import core as _core

__all__ = [
    "WeylEvaluation",
    "weyl_series",
    "tail_bound",
    "l2_certificate",
    "growth_envelope",
    "compare_methods",
]


@dataclass(frozen=True)
class WeylEvaluation:
    """One evaluation of m(lambda) with its truncation certificate."""

    lam: complex
    value: complex
    method: str  # "resolvent" | "series" | "measure"
    truncation_t: int
    tail_bound: float
    in_region_d: bool


def tail_bound(region: RegionD, lam, from_t: int) -> float:
    """Geometric majorant sum_{t > from_t} (|z| R)^t = q^{from_t+1}/(1-q).

    Rigorous for the dropped series tail once the response envelope
    |r_{t-1}| <= R^{t-1} max(1, |a0|) is folded in by the caller.
    """
    q = abs(lambda_to_z(lam)) * region.r_big
    if q >= 1.0:
        raise OutsideRegionD(f"|z| R = {q:.6g} >= 1 at lambda={lam}")
    return float(q ** (from_t + 1) / (1.0 - q))


def weyl_series(r: ResponseVector, lam, region: RegionD,
                tol: float = 1e-10) -> WeylEvaluation:
    """Evaluate m(lambda) = -(1/a0) sum_{t>=1} z^t r_{t-1}.

    Truncates at the smallest horizon whose certified tail is below tol.
    If the stored response is too short to reach tol, the partial sum is
    returned and ``tail_bound`` reports the remaining (larger) tail.
    """
    lam = complex(lam)
    z = lambda_to_z(lam)
    q = abs(z) * region.r_big
    if q >= 1.0:
        raise OutsideRegionD(f"|z| R = {q:.6g} >= 1 at lambda={lam}")
    amp = max(1.0, abs(r.a0)) / abs(r.a0)  # response envelope / a0 division
    t_use = r.horizon
    for t in range(1, r.horizon + 1):
        if amp * tail_bound(region, lam, t) < tol:
            t_use = t
            break
    powers = z ** np.arange(1, t_use + 1)
    value = -np.sum(powers * r.r[:t_use]) / r.a0
    bound = amp * tail_bound(region, lam, t_use)
    return WeylEvaluation(lam=lam, value=complex(value), method="series",
                          truncation_t=t_use, tail_bound=bound,
                          in_region_d=True)


def growth_envelope(coeffs: JacobiCoefficients, t_max: int) -> np.ndarray:
    """Measured amplitudes M_t = max_{1<=n<=t} {|u^delta_{n,t}|,
    |u^delta_{n,t-1}|} for t = 0..t_max (M_0 = 1).

    The finite-speed estimate guarantees M_t <= (3B + 1)^t.
    """
    wf = simulate(coeffs, delta_control(t_max), geometry="halfline")
    m = np.ones(t_max + 1)
    for t in range(1, t_max + 1):
        block = np.abs(wf.u[1:t + 1, t:t + 2])  # columns t-1 and t
        m[t] = block.max() if block.size else 0.0
    return m


def l2_certificate(coeffs: JacobiCoefficients, lam, n_max: int) -> float:
    """Computable majorant of sum_{n<=n_max} |u_hat_n(lambda)|^2.

    Uses the rigorous envelope M_t <= R^t only: K = sum_t (|z| R)^t =
    1/(1-q) and the certificate is K^2 sum_{n<=n_max} q^{2n}.
    """
    region = RegionD(coeffs.bound_B)
    q = abs(lambda_to_z(lam)) * region.r_big
    if q >= 1.0:
        raise OutsideRegionD(f"|z| R = {q:.6g} >= 1 at lambda={lam}")
    k = 1.0 / (1.0 - q)
    q2 = q * q
    partial = (n_max + 1.0) if q2 == 1.0 else (1.0 - q2 ** (n_max + 1)) / (1.0 - q2)
    return float(k * k * partial)


def compare_methods(coeffs: JacobiCoefficients, lambdas, n: int,
                    horizon: int, series_tol: float = 1e-10) -> list[dict]:
    """Evaluate m(lambda) by every route and report deviations per lambda.

    Routes: dense-backed resolvent for the N x N block, truncated
    semi-infinite resolvent, series from the interval and half-line
    response vectors, and the series fed by the Takagi-measure moment
    representation.  Per-lambda failures are recorded as strings, never
    raised.
    """
    region = RegionD(coeffs.bound_B)
    r_interval = response_vector(coeffs, horizon, geometry="interval", n=n)
    r_halfline = None
    try:
        r_halfline = response_vector(coeffs, horizon, geometry="halfline")
    except Exception as exc:  # short stored lists without a tail rule
        halfline_err = f"{type(exc).__name__}: {exc}"

    measure_err = None
    r_measure = None
    try:
        data = spectral_data(takagi_factorize(_core.assemble_finite(coeffs, n)),
                             a0=coeffs.a0)
        vals = np.array([response_from_measure(data, t)
                         for t in range(1, horizon + 1)])
        r_measure = ResponseVector(r=vals, a0=coeffs.a0)
    except Exception as exc:
        measure_err = f"{type(exc).__name__}: {exc}"

    rows = []
    for lam in lambdas:
        lam = complex(lam)
        z = lambda_to_z(lam)
        row = {
            "lambda": lam,
            "z": z,
            "qR": abs(z) * region.r_big,
            "in_region_d": in_region_d(lam, region),
        }

        def record(key, func):
            try:
                row[key] = func()
            except (OutsideRegionD, PoleAtLambda, SingularWronskian,
                    NoDecayDetected, InsufficientCoefficients) as exc:
                row[key] = None
                row[key + "_error"] = f"{type(exc).__name__}: {exc}"

        record("m_resolvent", lambda: weyl_resolvent(coeffs, lam, n=n))
        record("m_resolvent_semiinf",
               lambda: weyl_resolvent(coeffs, lam, n_trunc=max(2 * n, 16)))
        record("m_series_interval",
               lambda: weyl_series(r_interval, lam, region, tol=series_tol).value)
        if r_halfline is not None:
            record("m_series_halfline",
                   lambda: weyl_series(r_halfline, lam, region, tol=series_tol).value)
        else:
            row["m_series_halfline"] = None
            row["m_series_halfline_error"] = halfline_err
        if r_measure is not None:
            record("m_measure",
                   lambda: weyl_series(r_measure, lam, region, tol=series_tol).value)
        else:
            row["m_measure"] = None
            row["m_measure_error"] = measure_err

        base = row.get("m_resolvent")
        for key in ("m_resolvent_semiinf", "m_series_interval",
                    "m_series_halfline", "m_measure"):
            val = row.get(key)
            if base is not None and val is not None:
                dev = abs(val - base)
                row["dev_" + key] = dev
                row["reldev_" + key] = dev / (1.0 + abs(base))
        rows.append(row)
    return rows
