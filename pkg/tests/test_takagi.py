import numpy as np
import pytest

from jacobiweyl import (
    ControlSequence,
    assemble_finite,
    chebyshev_t,
    chebyshev_table,
    delta_control,
    moments,
    reconstruct_field,
    response_from_measure,
    response_vector,
    simulate,
    solve_coupled_c,
    spectral_data,
    takagi_factorize,
    validate_coefficients,
)
from jacobiweyl.errors import DegenerateSpectrum

RNG = np.random.default_rng(20250901)


def random_coeffs(length=8, a0=1.0, real=False):
    if real:
        a = RNG.normal(size=length) + 0j
        b = RNG.normal(size=length) + 0j
    else:
        a = RNG.normal(size=length) + 1j * RNG.normal(size=length)
        b = RNG.normal(size=length) + 1j * RNG.normal(size=length)
    a[np.abs(a) < 0.2] += 0.5
    return validate_coefficients(a, b, a0=a0)


def usable_instance(n, real=False, a0=1.0):
    """Seeded instance with well-separated coneigenvalues and
    well-conditioned first components."""
    while True:
        c = random_coeffs(length=n + 1, real=real, a0=a0)
        try:
            fact = takagi_factorize(assemble_finite(c, n))
        except DegenerateSpectrum:
            continue
        if np.abs(fact.u_matrix[:, 0]).min() >= 1e-2:
            return c, fact


def test_factorization_contracts():
    for n in (2, 4, 7):
        c, fact = usable_instance(n)
        a = assemble_finite(c, n).entries
        u = fact.u_matrix
        assert fact.residual_unitary < 1e-12
        assert np.abs(u @ u.conj().T - np.eye(n)).max() < 1e-12
        assert np.abs(u @ a @ u.T - np.diag(fact.d)).max() < 1e-12
        # rows solve the coneigenvalue problem A u = d conj(u)
        for i in range(n):
            assert np.abs(a @ u[i] - fact.d[i] * u[i].conj()).max() < 1e-12
        assert np.all(fact.d >= 0) and np.all(np.diff(fact.d) < 0)


def test_degenerate_spectrum_rejected():
    with pytest.raises(DegenerateSpectrum):
        takagi_factorize(np.eye(3, dtype=complex))  # repeated singular values
    with pytest.raises(DegenerateSpectrum):
        takagi_factorize(np.zeros((2, 2), dtype=complex))
    with pytest.raises(ValueError):
        takagi_factorize(np.array([[0.0, 1.0], [-1.0, 0.0]]))  # not symmetric


def test_spectral_data_normalization_and_weights():
    c, fact = usable_instance(5)
    data = spectral_data(fact, a0=c.a0)
    core = data.u_vectors[:, 1:6]
    assert np.allclose(core[:, 0], 1.0)
    assert np.abs(data.u_vectors[:, 0]).max() == 0.0
    assert np.abs(data.u_vectors[:, 6]).max() == 0.0
    # rho = 1/|u_hat_1|^2 and the weights sum to 1 (first column of a unitary)
    assert np.abs(data.rho - 1.0 / np.abs(fact.u_matrix[:, 0]) ** 2).max() < 1e-9
    assert abs(np.sum(data.weights) - 1.0) < 1e-12


def test_real_case_reduces_to_eigendecomposition():
    c, fact = usable_instance(6, real=True)
    data = spectral_data(fact, a0=c.a0)
    evals = np.sort(np.linalg.eigvalsh(assemble_finite(c, 6).entries.real))
    # effective coneigenvalues are the eigenvalues; |d| are their moduli
    assert np.abs(np.sort(data.d_eff.real) - evals).max() < 1e-10
    assert np.abs(data.d_eff.imag).max() < 1e-10
    # H collapses to diag(rho) and omega to the eigenvalues
    assert np.abs(data.h_matrix - np.diag(data.rho)).max() < 1e-9
    assert np.abs(np.sort(data.omega.real) - evals).max() < 1e-9


def test_chebyshev_closed_form():
    # T_t(2 cos theta) = sin(t theta)/sin(theta)
    theta = 0.77
    omega = 2.0 * np.cos(theta)
    for t in range(12):
        want = np.sin(t * theta) / np.sin(theta)
        assert abs(chebyshev_t(t, omega) - want) < 1e-12
    assert chebyshev_t(-1, 1.23) == -1.0
    assert chebyshev_t(0, 1.23) == 0.0
    table = chebyshev_table(10, np.array([omega, 0.5]))
    for t in range(11):
        assert abs(table[t, 0] - chebyshev_t(t, omega)) < 1e-12


def test_measure_reproduces_real_response():
    for n in (2, 4, 6):
        c, fact = usable_instance(n, real=True, a0=1.0)
        data = spectral_data(fact, a0=c.a0)
        r = response_vector(c, 2 * n, geometry="interval", n=n).r
        got = np.array([response_from_measure(data, t) for t in range(1, 2 * n + 1)])
        assert np.abs(got - r).max() < 1e-8 * max(1.0, np.abs(r).max())


def test_coupled_system_reconstructs_the_field():
    for n, horizon in ((3, 10), (6, 20)):
        c, fact = usable_instance(n, a0=0.6 + 0.8j)
        data = spectral_data(fact, a0=c.a0)
        f = ControlSequence(RNG.normal(size=horizon) + 1j * RNG.normal(size=horizon))
        cvals = solve_coupled_c(data, data.d_eff, f)
        v = reconstruct_field(data, cvals)
        wf = simulate(c, f, geometry="interval", n=n)
        ref = wf.u[1:n + 1, 1:horizon + 2]
        assert np.abs(v - ref).max() < 1e-8 * max(1.0, np.abs(ref).max())


def test_delta_control_coupled_system_gives_response():
    n = 4
    c, fact = usable_instance(n, a0=1.3 - 0.4j)
    data = spectral_data(fact, a0=c.a0)
    cvals = solve_coupled_c(data, data.d_eff, delta_control(2 * n))
    v = reconstruct_field(data, cvals)
    # v[0, t] = u_{1,t}, so the response r_t = u_{1,t+1} is v[0, 1:]
    r = response_vector(c, 2 * n, geometry="interval", n=n).r
    assert np.abs(v[0, 1:] - r).max() < 1e-9 * max(1.0, np.abs(r).max())


def test_moments_match_matrix_powers_real():
    # s_k = sum omega^k / rho equals (A^k)_{11} in the real case
    n = 5
    c, fact = usable_instance(n, real=True)
    data = spectral_data(fact, a0=c.a0)
    a = assemble_finite(c, n).entries.real
    power = np.eye(n)
    for k in range(2 * n - 1):
        assert abs(moments(data, k) - power[0, 0]) < 1e-8 * max(1.0, abs(power[0, 0]))
        power = power @ a
