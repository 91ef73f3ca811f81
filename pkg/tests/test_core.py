"""Core containers, evaluation, determinants, serialization, and the oracle."""

import numpy as np
import pytest

from mpshift import (
    LaurentPoly,
    MatrixPoly,
    ShiftSpec,
    det_at,
    det_ratio_oracle,
    evaluate,
    read_poly,
    reverse,
    right_shift_poly,
    unit_vector,
    write_poly,
)
from mpshift.errors import (
    DegeneratePolynomial,
    DimensionMismatch,
    ParseError,
    ZeroAtNegativePower,
)

from conftest import crandn, plant_right, rand_poly


# --- evaluation ---

def test_evaluate_p1_at_one_is_singular(p1):
    m = evaluate(p1, 1.0)
    assert np.array_equal(m, np.array([[0.0, 2.0], [0.0, 1.0]], dtype=complex))
    assert np.linalg.norm(m @ np.array([1.0, 0.0])) == 0.0


def test_evaluate_constant_poly():
    a0 = np.array([[1.0, 2.0], [3.0, 4.0]])
    p = MatrixPoly([a0])
    for z in (0.0, 1.0, 2j, -3.5 + 1j):
        assert np.array_equal(evaluate(p, z), a0.astype(complex))


def test_evaluate_p2_at_zero(p2):
    expected = np.array([[1.0, 0.0, -1.0], [1.0, 2.0, 0.0], [1.0, 1.0, 1.0]])
    assert np.array_equal(evaluate(p2, 0.0), expected.astype(complex))


def test_evaluate_laurent_at_zero_rejected():
    p = LaurentPoly(-1, [np.eye(2)] * 3)
    with pytest.raises(ZeroAtNegativePower):
        evaluate(p, 0.0)


def test_horner_matches_naive_power_sum():
    rng = np.random.default_rng(5)
    for _ in range(12):
        n = int(rng.integers(1, 9))
        d = int(rng.integers(0, 7))
        p = rand_poly(rng, n, d)
        z = complex(crandn(rng))
        naive = sum(z**i * c for i, c in enumerate(p.coeffs))
        got = evaluate(p, z)
        assert np.linalg.norm(got - naive) <= 1e-13 * max(np.linalg.norm(naive), 1.0)


def test_laurent_evaluation_matches_power_sum():
    rng = np.random.default_rng(6)
    p = LaurentPoly(-2, [crandn(rng, 3, 3) for _ in range(5)])
    z = 0.7 + 0.4j
    naive = sum(z ** (p.lo + k) * c for k, c in enumerate(p.coeffs))
    assert np.linalg.norm(evaluate(p, z) - naive) <= 1e-13 * np.linalg.norm(naive)


# --- determinants ---

def test_det_at_p1_eigenvalue(p1):
    m = evaluate(p1, 1.0)
    assert abs(det_at(p1, 1.0)) <= 1e-12 * np.linalg.norm(m) ** 2


def test_det_identity_pencil():
    p = MatrixPoly([np.zeros((2, 2)), np.eye(2)])  # z I
    assert abs(det_at(p, 2.0) - 4.0) <= 1e-12


def test_det_at_p2_at_i(p2):
    m = evaluate(p2, 1j)
    assert abs(det_at(p2, 1j)) <= 1e-12 * np.linalg.norm(m) ** 3


def test_det_multiplicative():
    rng = np.random.default_rng(7)
    for _ in range(6):
        p = rand_poly(rng, 3, 2)
        q = rand_poly(rng, 3, 2)
        z = complex(crandn(rng))
        prod_det = complex(np.linalg.det(evaluate(p, z) @ evaluate(q, z)))
        sep = det_at(p, z) * det_at(q, z)
        assert abs(prod_det - sep) <= 1e-10 * max(abs(sep), 1e-30)


# --- reverse ---

def test_reverse_involution():
    rng = np.random.default_rng(8)
    p = rand_poly(rng, 3, 4)
    back = reverse(reverse(p))
    for a, b in zip(p.coeffs, back.coeffs):
        assert np.array_equal(a, b)


def test_reverse_p2_constant_is_singular_lead(p2):
    r = reverse(p2)
    assert np.array_equal(r.coeffs[0], p2.coeffs[2])
    assert abs(np.linalg.det(r.coeffs[0])) == 0.0
    assert np.linalg.norm(r.coeffs[0] @ np.array([1, 0, 0])) == 0.0


def test_reverse_p1_has_reciprocal_eigenvalues(p1):
    r = reverse(p1)
    for z in (3.0, 2.0, 1.0):
        m = evaluate(r, z)
        assert abs(det_at(r, z)) <= 1e-10 * np.linalg.norm(m) ** 2


# --- normalization ---

def test_unit_vector_normalization():
    v = unit_vector(np.array([0.0, -2.0j, 1.0]))
    assert abs(np.linalg.norm(v) - 1.0) <= 1e-15
    k = np.argmax(np.abs(v) > 1e-12)
    assert v[k].imag == 0.0 and v[k].real > 0


def test_unit_vector_rejects_zero():
    with pytest.raises(ValueError):
        unit_vector(np.zeros(3))


# --- serialization ---

def test_round_trip_is_bit_exact(tmp_path, p3):
    path = tmp_path / "p3.mp.json"
    write_poly(p3, path)
    back = read_poly(path)
    assert isinstance(back, MatrixPoly)
    assert back.d == 4 and back.n == 5
    for a, b in zip(p3.coeffs, back.coeffs):
        assert np.array_equal(a, b)
    path2 = tmp_path / "again.mp.json"
    write_poly(back, path2)
    assert path.read_bytes() == path2.read_bytes()


def test_laurent_round_trip(tmp_path):
    rng = np.random.default_rng(9)
    p = LaurentPoly(-1, [crandn(rng, 2, 2) for _ in range(3)])
    path = tmp_path / "q.mp.json"
    write_poly(p, path)
    back = read_poly(path)
    assert isinstance(back, LaurentPoly) and back.lo == -1
    for a, b in zip(p.coeffs, back.coeffs):
        assert np.array_equal(a, b)


def test_read_p1_file(tmp_path, p1):
    path = tmp_path / "p1.mp.json"
    write_poly(p1, path)
    back = read_poly(path)
    assert back.d == 2 and back.n == 2


def test_ragged_rows_raise_parse_error(tmp_path):
    path = tmp_path / "bad.mp.json"
    path.write_text(
        '{"n": 2, "lo": 0, "coeffs": [[[[1,0],[0,0]],[[0,0]]]]}', encoding="utf-8"
    )
    with pytest.raises(ParseError):
        read_poly(path)


def test_wrong_dimension_raises(tmp_path):
    path = tmp_path / "dim.mp.json"
    path.write_text(
        '{"n": 3, "lo": 0, "coeffs": [[[[1,0],[0,0]],[[0,0],[1,0]]]]}', encoding="utf-8"
    )
    with pytest.raises(DimensionMismatch):
        read_poly(path)


def test_empty_file_raises_parse_error(tmp_path):
    path = tmp_path / "empty.mp.json"
    path.write_text("", encoding="utf-8")
    with pytest.raises(ParseError):
        read_poly(path)


# --- determinant-ratio oracle ---

def test_oracle_identity_shift_has_zero_error(p1):
    rep = det_ratio_oracle(p1, p1, removed=[], added=[])
    assert rep.passed and rep.max_rel_err == 0.0


def test_oracle_p1_shift(p1):
    spec = ShiftSpec(1.0, 0.0, [1, 0], [1, 0])
    shifted = right_shift_poly(p1, spec)
    rep = det_ratio_oracle(p1, shifted, removed=[1.0], added=[0.0], samples=32)
    assert rep.passed


def test_oracle_random_cubic_right_shift():
    rng = np.random.default_rng(11)
    p = rand_poly(rng, 3, 3)
    lam = 0.4 + 0.25j
    u = unit_vector(crandn(rng, 3))
    p = plant_right(p, lam, u)
    shifted = right_shift_poly(p, ShiftSpec(lam, -0.2 + 0.6j, u))
    rep = det_ratio_oracle(p, shifted, removed=[lam], added=[-0.2 + 0.6j], samples=32)
    assert rep.passed


def test_oracle_detects_wrong_factors(p1):
    spec = ShiftSpec(1.0, 0.0, [1, 0], [1, 0])
    shifted = right_shift_poly(p1, spec)
    rep = det_ratio_oracle(p1, shifted, removed=[], added=[], samples=16)
    assert not rep.passed


def test_oracle_degenerate_polynomial():
    p = MatrixPoly(
        [np.array([[1.0, 0.0], [0.0, 0.0]]), np.array([[0.0, 1.0], [0.0, 0.0]])]
    )
    with pytest.raises(DegeneratePolynomial):
        det_ratio_oracle(p, p, removed=[], added=[])


def test_oracle_rejects_samples_near_shift_values(p1):
    # all removed/added values sit on the sampling circles; sampling must avoid them
    spec = ShiftSpec(1.0, 0.7, [1, 0], [1, 0])
    shifted = right_shift_poly(p1, spec)
    rep = det_ratio_oracle(p1, shifted, removed=[1.0], added=[0.7], samples=24)
    assert rep.passed
