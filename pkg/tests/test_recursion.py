import numpy as np
import pytest

from jacobiweyl import (
    free_coefficients,
    assemble_finite,
    green_function,
    phi_plus_finite,
    phi_plus_semiinfinite,
    solve_pq,
    validate_coefficients,
    weyl_resolvent,
    wronskian,
)
from jacobiweyl.errors import (
    IndexOutOfRange,
    MismatchedLambda,
    NoDecayDetected,
    PoleAtLambda,
    SingularWronskian,
)

RNG = np.random.default_rng(20250901)


def random_coeffs(length=8, a0=1.0, tail="none"):
    a = RNG.normal(size=length) + 1j * RNG.normal(size=length)
    b = RNG.normal(size=length) + 1j * RNG.normal(size=length)
    return validate_coefficients(a, b, a0=a0, tail=tail)


def test_pq_initial_data():
    c = random_coeffs()
    p, q = solve_pq(c, 0.7 + 0.3j, 6)
    assert p[0] == 0.0 and p[1] == 1.0
    assert q[0] == 1.0 and q[1] == 0.0


def test_pq_satisfy_the_recursion():
    c = random_coeffs()
    lam = 1.1 - 0.4j
    p, q = solve_pq(c, lam, 7)
    for sol in (p, q):
        for n in range(1, 7):
            lhs = (c.a_at(n - 1) * sol[n - 1] + c.b_at(n) * sol[n]
                   + c.a_at(n) * sol[n + 1])
            assert abs(lhs - lam * sol[n]) < 1e-12 * (1 + abs(lam * sol[n]))


def test_free_q_is_negated_shifted_p():
    # with q_0 = 1, q_1 = 0 and free coefficients, q_{n+1} = -p_n
    c = free_coefficients(2)
    for lam in (0.3 + 2.1j, -1.7 + 0.2j, 5.0):
        p, q = solve_pq(c, lam, 31)
        dev = max(abs(q[n + 1] + p[n]) for n in range(31))
        assert dev <= 1e-12 * max(1.0, np.abs(p.values).max())


def test_wronskian_of_p_q_is_minus_a0():
    c = random_coeffs(a0=0.7 + 0.2j)
    p, q = solve_pq(c, 0.9 + 0.5j, 6)
    # W(p, q)[0] = a0 (p_0 q_1 - p_1 q_0) = -a0
    assert abs(wronskian(c, p, q, 0) + c.a0) < 1e-14


def test_wronskian_constant_in_n():
    c = random_coeffs(12)
    lam = 0.8 - 1.3j
    p, q = solve_pq(c, lam, 10)
    phi = phi_plus_finite(c, lam, 10)
    w = np.array([wronskian(c, p, phi, n) for n in range(10)])
    assert np.abs(w - w[0]).max() < 1e-10 * (1 + np.abs(w[0]))


def test_wronskian_input_checks():
    c = random_coeffs()
    p, q = solve_pq(c, 1.0, 4)
    p2, _ = solve_pq(c, 2.0, 4)
    with pytest.raises(MismatchedLambda):
        wronskian(c, p, p2, 1)
    with pytest.raises(IndexOutOfRange):
        wronskian(c, p, q, 4)


def test_phi_plus_right_end_data():
    c = random_coeffs(6)
    phi = phi_plus_finite(c, 0.4 + 0.1j, 5)
    assert phi[6] == 0.0 and phi[5] == 1.0
    # interior rows satisfy the difference equation
    lam = phi.lam
    for n in range(2, 5):
        lhs = (c.a_at(n - 1) * phi[n - 1] + c.b_at(n) * phi[n]
               + c.a_at(n) * phi[n + 1])
        assert abs(lhs - lam * phi[n]) < 1e-12 * (1 + abs(lam * phi[n]))


def test_resolvent_matches_dense_inverse():
    for _ in range(10):
        c = random_coeffs(9)
        n = int(RNG.integers(2, 9))
        lam = complex(RNG.normal(), RNG.normal() + 3.0)  # far from spectrum
        m_dense = np.linalg.inv(assemble_finite(c, n).entries
                                - lam * np.eye(n))[0, 0]
        m = weyl_resolvent(c, lam, n=n)
        assert abs(m - m_dense) < 1e-10 * (1 + abs(m_dense))


def test_resolvent_independent_of_stored_a0():
    a = RNG.normal(size=5) + 1j * RNG.normal(size=5)
    b = RNG.normal(size=5) + 1j * RNG.normal(size=5)
    lam = 2.0 + 2.0j
    m1 = weyl_resolvent(validate_coefficients(a, b, a0=1.0), lam, n=5)
    m2 = weyl_resolvent(validate_coefficients(a, b, a0=3.0 - 1.0j), lam, n=5)
    assert abs(m1 - m2) < 1e-13 * (1 + abs(m1))


def test_n1_block_closed_form():
    c = validate_coefficients([1.0], [3.0])
    lam = 6.0
    assert abs(weyl_resolvent(c, lam, n=1) - 1.0 / (3.0 - 6.0)) < 1e-14


def test_pole_at_eigenvalue():
    c = validate_coefficients([1.0], [3.0])
    with pytest.raises(PoleAtLambda):
        weyl_resolvent(c, 3.0, n=1)


def test_green_function_matches_dense_inverse():
    c = random_coeffs(7)
    n = 6
    lam = 1.5 + 2.5j
    resolvent = np.linalg.inv(assemble_finite(c, n).entries - lam * np.eye(n))
    for m_idx in range(1, n + 1):
        for n_idx in range(1, n + 1):
            g = green_function(c, m_idx, n_idx, lam, n)
            ref = resolvent[m_idx - 1, n_idx - 1]
            assert abs(g - ref) < 1e-9 * (1 + abs(ref))


def test_green_function_rejects_eigenvalue():
    c = validate_coefficients([1.0, 1.0], [0.0, 0.0])
    evals = np.linalg.eigvalsh(assemble_finite(c, 2).entries.real)
    with pytest.raises(SingularWronskian):
        green_function(c, 1, 1, complex(evals[0]), 2)


def test_semiinfinite_free_operator():
    c = free_coefficients(2)
    lam = 0.3 + 2.0j
    phi = phi_plus_semiinfinite(c, lam, 40)
    # normalized to phi_1 = 1; decaying solution is z^n, so phi_2 = z
    z = (lam - np.sqrt(lam * lam - 4.0)) / 2.0
    if abs(z) > 1:
        z = 1.0 / z
    assert abs(phi[2] - z) < 1e-10
    m = weyl_resolvent(c, lam, n_trunc=40)
    assert abs(m + z) < 1e-10


def test_semiinfinite_rejects_essential_spectrum():
    c = free_coefficients(2)
    with pytest.raises(NoDecayDetected):
        phi_plus_semiinfinite(c, 0.5, 30)  # inside (-2, 2)


def test_weyl_resolvent_mode_exclusivity():
    c = free_coefficients(2)
    with pytest.raises(ValueError):
        weyl_resolvent(c, 3.0j)
    with pytest.raises(ValueError):
        weyl_resolvent(c, 3.0j, n=2, n_trunc=10)
