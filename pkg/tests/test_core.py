import json

import numpy as np
import pytest

from jacobiweyl import (
    assemble_finite,
    free_coefficients,
    load_coefficients,
    save_coefficients,
    validate_coefficients,
)
from jacobiweyl.errors import (
    InsufficientCoefficients,
    LengthMismatch,
    NonFiniteEntry,
    ZeroOffDiagonal,
)

RNG = np.random.default_rng(20250901)


def random_coeffs(length=6, a0=1.0, tail="none"):
    a = RNG.normal(size=length) + 1j * RNG.normal(size=length)
    b = RNG.normal(size=length) + 1j * RNG.normal(size=length)
    return validate_coefficients(a, b, a0=a0, tail=tail)


def test_validation_rejects_zero_off_diagonal():
    with pytest.raises(ZeroOffDiagonal):
        validate_coefficients([1.0, 0.0, 1.0], [0.0, 0.0, 0.0])
    with pytest.raises(ZeroOffDiagonal):
        validate_coefficients([1.0, 1.0], [0.0, 0.0], a0=0.0)


def test_validation_rejects_length_mismatch_and_nonfinite():
    with pytest.raises(LengthMismatch):
        validate_coefficients([1.0, 1.0], [0.0])
    with pytest.raises(LengthMismatch):
        validate_coefficients([], [])
    with pytest.raises(NonFiniteEntry):
        validate_coefficients([1.0, np.inf], [0.0, 0.0])
    with pytest.raises(NonFiniteEntry):
        validate_coefficients([1.0, 1.0], [0.0, np.nan])


def test_bound_is_max_modulus():
    c = validate_coefficients([1.0, 3.0j], [0.5, -2.0])
    assert c.bound_B == 3.0


def test_free_coefficients_tail_rule():
    c = free_coefficients(4)
    # tail "free" continues with a_n = 1, b_n = 0 past the stored range
    assert c.a_at(100) == 1.0 and c.b_at(100) == 0.0
    assert c.a_at(0) == c.a0
    ext = c.a_extended(6)
    assert np.allclose(ext, np.ones(7))
    assert np.allclose(c.b_extended(6), np.zeros(6))


def test_tail_none_raises_past_stored_range():
    c = random_coeffs(3)
    with pytest.raises(InsufficientCoefficients):
        c.a_at(4)
    with pytest.raises(InsufficientCoefficients):
        c.b_at(4)
    assert c.a_at(3) == complex(c.a[2])


def test_assemble_finite_structure():
    c = random_coeffs(5)
    m = assemble_finite(c, 4).entries
    assert m.shape == (4, 4)
    assert np.allclose(np.diag(m), c.b[:4])
    assert np.allclose(np.diag(m, 1), c.a[:3])
    # complex symmetric, not Hermitian
    assert np.abs(m - m.T).max() == 0.0
    # entries two steps off the diagonals vanish
    assert np.abs(np.triu(m, 2)).max() == 0.0


def test_config_round_trip(tmp_path):
    c = random_coeffs(4, a0=0.5 - 0.25j, tail="free")
    path = tmp_path / "cfg.json"
    save_coefficients(c, path)
    c2 = load_coefficients(path)
    assert np.allclose(c2.a, c.a) and np.allclose(c2.b, c.b)
    assert c2.a0 == c.a0 and c2.tail == c.tail and c2.bound_B == c.bound_B


def test_config_defaults(tmp_path):
    path = tmp_path / "cfg.json"
    path.write_text(json.dumps({"a": [[1, 0]], "b": [[2, 0]]}))
    c = load_coefficients(path)
    assert c.a0 == 1.0 and c.tail == "none"
