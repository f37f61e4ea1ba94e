"""Acceptance suite: every cross-method identity at its pinned tolerance.

Each criterion function returns a CriterionResult.  ``hard=True``
criteria are mathematically forced and must pass; ``hard=False``
criteria (the complex-case measure representation and the complex moment
stabilization, whose decoupling is delegated to a companion derivation)
always complete and report the first failing index or full agreement.

All randomness is drawn from seeded generators so runs are reproducible
byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import assemble_finite, free_coefficients, validate_coefficients
from .dynamics import ControlSequence, response_vector, simulate
from .errors import DegenerateSpectrum
from .recursion import (
    green_function,
    phi_plus_finite,
    solve_pq,
    weyl_resolvent,
    wronskian,
)
from .series import growth_envelope, tail_bound, weyl_series
from .takagi import (
    moments,
    reconstruct_field,
    response_from_measure,
    solve_coupled_c,
    spectral_data,
    takagi_factorize,
)
from .transform import RegionD, in_region_d, lambda_to_z, region_boundary

__all__ = ["CriterionResult", "run_all", "CRITERIA"]

DEFAULT_SEED = 20250901


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    hard: bool
    detail: str

    @property
    def status(self) -> str:
        if self.hard:
            return "PASS" if self.passed else "FAIL"
        return "PASS (soft)" if self.passed else "REPORTED (soft)"


def _random_coeffs(rng, length, bound, real=False, a0=1.0, tail="free"):
    """Random coefficients with moduli <= bound, |a_n| bounded away from 0."""
    mag = bound * (0.25 + 0.75 * rng.random(length))
    if real:
        a = mag * np.where(rng.random(length) < 0.5, -1.0, 1.0)
        b = bound * (2.0 * rng.random(length) - 1.0)
    else:
        a = mag * np.exp(2j * np.pi * rng.random(length))
        b = bound * rng.random(length) * np.exp(2j * np.pi * rng.random(length))
    return validate_coefficients(a, b, a0=a0, tail=tail)


def _sample_lambda(rng, r_big, lo=0.15, hi=0.9):
    """lambda with |z(lambda)| in [lo, hi]/R (guaranteed inside D)."""
    radius = (lo + (hi - lo) * rng.random()) / r_big
    z = radius * np.exp(2j * np.pi * rng.random())
    return z + 1.0 / z


def criterion_1(seed=DEFAULT_SEED) -> CriterionResult:
    """Resolvent-series equivalence on random complex blocks."""
    rng = np.random.default_rng(seed + 1)
    tol = 1e-8
    worst = 0.0
    for i in range(50):
        n = int(rng.integers(2, 11))
        bound = 1.0 if i % 2 == 0 else 2.0
        coeffs = _random_coeffs(rng, n, bound)
        region = RegionD(coeffs.bound_B)
        horizon = 260
        r = response_vector(coeffs, horizon, geometry="interval", n=n)
        for _ in range(20):
            lam = _sample_lambda(rng, region.r_big, hi=0.9)
            m_res = weyl_resolvent(coeffs, lam, n=n)
            m_ser = weyl_series(r, lam, region, tol=1e-12).value
            worst = max(worst, abs(m_ser - m_res) / (1.0 + abs(m_res)))
    return CriterionResult(1, "resolvent-series equivalence (finite)",
                           worst <= tol, True,
                           f"max |m_series - m_resolvent|/(1+|m|) = {worst:.3e} (tol {tol:g})")


def criterion_2(seed=DEFAULT_SEED) -> CriterionResult:
    """Free-operator closed form m_0 = -z from the half-line response."""
    rng = np.random.default_rng(seed + 2)
    coeffs = free_coefficients(2, tail="free")
    region = RegionD(1.0)
    r = response_vector(coeffs, 64, geometry="halfline")
    worst = 0.0
    for _ in range(100):
        lam = _sample_lambda(rng, region.r_big, lo=0.05, hi=0.6)
        z = lambda_to_z(lam)
        val = weyl_series(r, lam, region, tol=1e-12).value
        worst = max(worst, abs(val + z))
    return CriterionResult(2, "free operator m_0 = -z", worst <= 1e-10, True,
                           f"max |m + z| = {worst:.3e} on 100-point grid (tol 1e-10)")


def criterion_3(seed=DEFAULT_SEED) -> CriterionResult:
    """Finite speed: half-line/interval agreement and dependence footprint."""
    rng = np.random.default_rng(seed + 3)
    worst_agree = 0.0
    worst_foot = 0.0
    for _ in range(50):
        n = int(rng.integers(2, 9))
        coeffs = _random_coeffs(rng, 3 * n, 1.0)
        horizon = 2 * n + 4
        rh = response_vector(coeffs, horizon, geometry="halfline")
        ri = response_vector(coeffs, horizon, geometry="interval", n=n)
        worst_agree = max(worst_agree,
                          float(np.abs(rh.r[:2 * n - 1] - ri.r[:2 * n - 1]).max()))
        m_pert = int(rng.integers(2, n + 1))
        a2 = coeffs.a.copy()
        b2 = coeffs.b.copy()
        a2[m_pert - 1] += 0.37          # a_M
        b2[m_pert] += 0.41              # b_{M+1}
        pert = validate_coefficients(a2, b2, a0=coeffs.a0, tail="free")
        rp = response_vector(pert, 2 * m_pert + 2, geometry="halfline")
        worst_foot = max(worst_foot,
                         float(np.abs(rh.r[:2 * m_pert - 1] - rp.r[:2 * m_pert - 1]).max()))
    ok = worst_agree <= 1e-13 and worst_foot <= 1e-13
    return CriterionResult(3, "finite speed and dependence footprint", ok, True,
                           f"agreement dev {worst_agree:.3e}, footprint dev "
                           f"{worst_foot:.3e} (tol 1e-13)")


def _takagi_instances(rng, count):
    """Seeded nondegenerate complex symmetric tridiagonal instances.

    Skips near-degenerate draws: coneigenvectors with first component
    below 1e-2 blow the weights rho up to where the absolute 1e-10
    quasi-orthogonality contract is unreachable in double precision (the
    construction assumes first components bounded away from zero).
    """
    out = []
    while len(out) < count:
        n = int(rng.integers(2, 11))
        coeffs = _random_coeffs(rng, n, 1.0)
        try:
            fact = takagi_factorize(assemble_finite(coeffs, n))
        except DegenerateSpectrum:
            continue
        if np.abs(fact.u_matrix[:, 0]).min() < 1e-2:
            continue
        out.append((coeffs, n, fact))
    return out


def criterion_4(seed=DEFAULT_SEED) -> CriterionResult:
    """Takagi residual contracts plus real-subcase eigensolver cross-check."""
    rng = np.random.default_rng(seed + 4)
    worst_u = worst_d = worst_c = 0.0
    for _, _, fact in _takagi_instances(rng, 50):
        worst_u = max(worst_u, fact.residual_unitary)
        worst_d = max(worst_d, fact.residual_diag)
        worst_c = max(worst_c, fact.residual_coneigen)
    worst_eig = 0.0
    for _ in range(10):
        n = int(rng.integers(2, 11))
        coeffs = _random_coeffs(rng, n, 1.0, real=True)
        block = assemble_finite(coeffs, n)
        try:
            fact = takagi_factorize(block)
        except DegenerateSpectrum:
            continue
        sing = np.sort(np.abs(np.linalg.eigvalsh(block.entries.real)))
        worst_eig = max(worst_eig, float(np.abs(np.sort(fact.d) - sing).max()))
    ok = worst_u <= 1e-10 and worst_d <= 1e-8 and worst_c <= 1e-8 and worst_eig <= 1e-8
    return CriterionResult(4, "Takagi factorization contracts", ok, True,
                           f"unitary {worst_u:.2e} (1e-10), diag {worst_d:.2e} (1e-8), "
                           f"coneigen {worst_c:.2e} (1e-8), real-vs-eigensolver "
                           f"{worst_eig:.2e} (1e-8)")


def criterion_5(seed=DEFAULT_SEED) -> CriterionResult:
    """Coupled c-system reconstruction equals the interval simulation."""
    rng = np.random.default_rng(seed + 5)
    worst = 0.0
    count = 0
    while count < 20:
        n = int(rng.integers(2, 9))
        horizon = int(rng.integers(8, 25))
        coeffs = _random_coeffs(rng, n, 1.0, a0=complex(rng.normal(), rng.normal()) or 1.0)
        try:
            data = spectral_data(takagi_factorize(assemble_finite(coeffs, n)),
                                 a0=coeffs.a0)
        except DegenerateSpectrum:
            continue
        f = ControlSequence(rng.normal(size=horizon) + 1j * rng.normal(size=horizon))
        c = solve_coupled_c(data, data.d_eff, f)
        v = reconstruct_field(data, c)
        wf = simulate(coeffs, f, geometry="interval", n=n)
        worst = max(worst, float(np.abs(v - wf.u[1:n + 1, 1:horizon + 2]).max()))
        count += 1
    return CriterionResult(5, "basis-expansion soundness (coupled c-system)",
                           worst <= 1e-8, True,
                           f"max reconstruction deviation {worst:.3e} (tol 1e-8)")


def criterion_6(seed=DEFAULT_SEED) -> CriterionResult:
    """Measure representation of the response vector.

    Real subcase: hard at 1e-8 for t <= 2N.  Complex case: soft; the
    detail states the first failing t (or full agreement) per instance.
    """
    rng = np.random.default_rng(seed + 6)
    worst_real = 0.0
    for _ in range(10):
        n = int(rng.integers(2, 9))
        coeffs = _random_coeffs(rng, n, 1.0, real=True)
        try:
            data = spectral_data(takagi_factorize(assemble_finite(coeffs, n)),
                                 a0=coeffs.a0)
        except DegenerateSpectrum:
            continue
        r = response_vector(coeffs, 2 * n, geometry="interval", n=n)
        meas = np.array([response_from_measure(data, t) for t in range(1, 2 * n + 1)])
        worst_real = max(worst_real, float(np.abs(meas - r.r).max()))

    complex_notes = []
    for _ in range(5):
        n = int(rng.integers(2, 7))
        coeffs = _random_coeffs(rng, n, 1.0)
        try:
            data = spectral_data(takagi_factorize(assemble_finite(coeffs, n)),
                                 a0=coeffs.a0)
        except DegenerateSpectrum:
            continue
        r = response_vector(coeffs, 2 * n, geometry="interval", n=n)
        meas = np.array([response_from_measure(data, t) for t in range(1, 2 * n + 1)])
        dev = np.abs(meas - r.r)
        bad = np.nonzero(dev > 1e-8)[0]
        if len(bad):
            complex_notes.append(f"N={n}: first failing t={bad[0] + 1} "
                                 f"(dev {dev[bad[0]]:.2e})")
        else:
            complex_notes.append(f"N={n}: full agreement through t={2 * n}")
    ok = worst_real <= 1e-8
    return CriterionResult(6, "measure representation of the response", ok, True,
                           f"real subcase max dev {worst_real:.3e} (tol 1e-8, hard); "
                           f"complex report: " + "; ".join(complex_notes))


def criterion_7(seed=DEFAULT_SEED) -> CriterionResult:
    """Weight identities: sum 1/rho = 1 and quasi-orthogonality."""
    rng = np.random.default_rng(seed + 7)
    worst_sum = worst_qo = 0.0
    for coeffs, n, fact in _takagi_instances(rng, 50):
        data = spectral_data(fact, a0=coeffs.a0)
        worst_sum = max(worst_sum, abs(float(np.sum(data.weights)) - 1.0))
        core = data.u_vectors[:, 1:n + 1]
        gram = core.conj() @ core.T
        worst_qo = max(worst_qo, float(np.abs(gram - np.diag(data.rho)).max()))
    ok = worst_sum <= 1e-10 and worst_qo <= 1e-10
    return CriterionResult(7, "weight identities (unitarity)", ok, True,
                           f"|sum 1/rho - 1| = {worst_sum:.3e}, quasi-orthogonality "
                           f"residual {worst_qo:.3e} (tol 1e-10)")


def criterion_8(seed=DEFAULT_SEED) -> CriterionResult:
    """Growth bound M_t <= (3B+1)^t and tail-bound soundness."""
    rng = np.random.default_rng(seed + 8)
    growth_ok = True
    worst_margin = 0.0
    for _ in range(10):
        n = int(rng.integers(2, 9))
        coeffs = _random_coeffs(rng, n, 1.0, tail="free")
        env = growth_envelope(coeffs, 40)
        bound = (3.0 * coeffs.bound_B + 1.0) ** np.arange(41)
        growth_ok &= bool(np.all(env <= bound * (1.0 + 1e-12)))
        worst_margin = max(worst_margin, float((env / bound).max()))
    tails_ok = True
    worst_tail = 0.0
    for _ in range(20):
        n = int(rng.integers(2, 7))
        coeffs = _random_coeffs(rng, n, 1.0, tail="free")
        region = RegionD(coeffs.bound_B)
        r = response_vector(coeffs, 400, geometry="halfline")
        lam = _sample_lambda(rng, region.r_big, lo=0.3, hi=0.85)
        ev = weyl_series(r, lam, region, tol=1e-8)
        full = weyl_series(r, lam, region, tol=0.0)  # uses the whole horizon
        measured = abs(ev.value - full.value)
        tails_ok &= measured <= ev.tail_bound
        worst_tail = max(worst_tail, measured / max(ev.tail_bound, 1e-300))
    ok = growth_ok and tails_ok
    return CriterionResult(8, "growth bound and tail soundness", ok, True,
                           f"max M_t/(3B+1)^t = {worst_margin:.3e} (<=1), max "
                           f"measured-tail/bound = {worst_tail:.3e} (<=1)")


def criterion_9(seed=DEFAULT_SEED) -> CriterionResult:
    """Region-D consistency: boundary level set and ellipse-exterior test."""
    worst_bd = 0.0
    for r_big in (2.0, 4.0, 10.0):
        region = RegionD((r_big - 1.0) / 3.0)
        phis = np.linspace(np.pi, 2.0 * np.pi, 102)[1:-1]
        for lam in region_boundary(region, phis):
            worst_bd = max(worst_bd, abs(abs(lambda_to_z(lam)) - 1.0 / r_big))
    region = RegionD(1.0)
    r_big = region.r_big
    ax, ay = r_big + 1.0 / r_big, r_big - 1.0 / r_big
    mismatches = 0
    total = 0
    rng = np.random.default_rng(seed + 9)
    while total < 1000:
        lam = complex(rng.uniform(-6, 6), rng.uniform(-6, 6))
        ell = (lam.real / ax) ** 2 + (lam.imag / ay) ** 2
        if abs(ell - 1.0) < 1e-6:
            continue
        total += 1
        mismatches += (in_region_d(lam, region) != (ell > 1.0))
    ok = worst_bd <= 1e-10 and mismatches == 0
    return CriterionResult(9, "region-D consistency", ok, True,
                           f"boundary |z|-1/R dev {worst_bd:.3e} (tol 1e-10), "
                           f"membership mismatches {mismatches}/1000")


def criterion_10(seed=DEFAULT_SEED) -> CriterionResult:
    """Wronskian constancy and Green-function-vs-dense-resolvent check."""
    rng = np.random.default_rng(seed + 10)
    worst_w = worst_g = 0.0
    for _ in range(20):
        n = int(rng.integers(2, 13))
        coeffs = _random_coeffs(rng, n, 1.0,
                                a0=np.exp(2j * np.pi * rng.random()))
        lam = _sample_lambda(rng, 3.0 * coeffs.bound_B + 1.0, lo=0.3, hi=0.9)
        p, _ = solve_pq(coeffs, lam, n + 1)
        phi = phi_plus_finite(coeffs, lam, n)
        w0 = wronskian(coeffs, p, phi, 0)
        for k in range(1, n + 1):
            worst_w = max(worst_w,
                          abs(wronskian(coeffs, p, phi, k) - w0) / (1.0 + abs(w0)))
        block = assemble_finite(coeffs, n).entries
        dense = np.linalg.inv(block - lam * np.eye(n))
        lo = min(n, 4)
        for i in range(1, lo + 1):
            for j in range(1, n + 1):
                g = green_function(coeffs, i, j, lam, n)
                worst_g = max(worst_g,
                              abs(g - dense[i - 1, j - 1]) / (1.0 + abs(dense[i - 1, j - 1])))
    ok = worst_w <= 1e-10 and worst_g <= 1e-8
    return CriterionResult(10, "Wronskian constancy and Green function", ok, True,
                           f"Wronskian rel spread {worst_w:.3e} (1e-10), Green vs dense "
                           f"{worst_g:.3e} (1e-8)")


def criterion_11(seed=DEFAULT_SEED) -> CriterionResult:
    """Moment stabilization across block sizes N and N+2.

    Hard in the real subcase; the complex case is reported (it inherits
    the complex-case status of the measure representation).
    """
    rng = np.random.default_rng(seed + 11)
    worst_real = 0.0
    for _ in range(10):
        n = int(rng.integers(3, 8))
        coeffs = _random_coeffs(rng, 3 * n, 1.0, real=True)
        try:
            d1 = spectral_data(takagi_factorize(assemble_finite(coeffs, n)), coeffs.a0)
            d2 = spectral_data(takagi_factorize(assemble_finite(coeffs, n + 2)), coeffs.a0)
        except DegenerateSpectrum:
            continue
        for k in range(2 * n - 1):
            worst_real = max(worst_real, abs(moments(d1, k) - moments(d2, k)))
    notes = []
    for _ in range(3):
        n = int(rng.integers(3, 7))
        coeffs = _random_coeffs(rng, 3 * n, 1.0)
        try:
            d1 = spectral_data(takagi_factorize(assemble_finite(coeffs, n)), coeffs.a0)
            d2 = spectral_data(takagi_factorize(assemble_finite(coeffs, n + 2)), coeffs.a0)
        except DegenerateSpectrum:
            continue
        devs = [abs(moments(d1, k) - moments(d2, k)) for k in range(2 * n - 1)]
        bad = [k for k, d in enumerate(devs) if d > 1e-8]
        if bad:
            notes.append(f"N={n}: first unstable k={bad[0]} (dev {devs[bad[0]]:.2e})")
        else:
            notes.append(f"N={n}: stable through k={2 * n - 2}")
    ok = worst_real <= 1e-8
    return CriterionResult(11, "moment stabilization across N", ok, True,
                           f"real subcase max |s_k(N) - s_k(N+2)| = {worst_real:.3e} "
                           f"(tol 1e-8, hard); complex report: " + "; ".join(notes))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
            criterion_11]


def run_all(seed=DEFAULT_SEED) -> list[CriterionResult]:
    return [fn(seed) for fn in CRITERIA]
