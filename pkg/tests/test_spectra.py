"""Polynomial eigensolver, refinement, and invariant pairs."""

import numpy as np
import pytest

from mpshift import (
    MatrixPoly,
    MultiShiftSpec,
    companion_pencil,
    det_at,
    evaluate,
    invariant_pair,
    multishift_poly,
    polyeig,
    refine_pair,
)
from mpshift.errors import (
    DegeneratePolynomial,
    DependentEigenvectors,
    DistinctnessViolated,
)

from conftest import crandn, match_moduli, rand_poly


def test_polyeig_p1(p1):
    vals = polyeig(p1).values()
    assert match_moduli(vals, [1 / 3, 1 / 2, 1.0, 1.0]) <= 1e-7


def test_polyeig_p1_double_root_is_ill_conditioned(p1):
    vals = sorted(polyeig(p1).values(), key=lambda z: abs(z - 1.0))
    worst = max(abs(vals[0] - 1.0), abs(vals[1] - 1.0))
    assert 1e-12 < worst < 1e-5  # genuinely limited by the defective root


def test_polyeig_p2_two_infinite(p2):
    spec = polyeig(p2)
    expected = [complex(np.inf), complex(np.inf), 1j, -1j, 1j * np.sqrt(3), -1j * np.sqrt(3)]
    assert match_moduli(spec.values(), expected) <= 1e-7


def test_polyeig_diagonal_pencil_exact():
    p = MatrixPoly([-np.diag([1.0, 2.0, 3.0]), np.eye(3)])
    vals = polyeig(p).values()
    assert match_moduli(vals, [1.0, 2.0, 3.0]) <= 1e-12


def test_polyeig_residual_invariant(p1, p2, p3):
    rng = np.random.default_rng(3)
    cases = [p1, p2, p3, rand_poly(rng, 4, 2), rand_poly(rng, 2, 5)]
    for p in cases:
        for q in polyeig(p).pairs:
            assert q.residual <= 1e-8


def test_polyeig_sorted_by_modulus_infinity_last(p2):
    pairs = polyeig(p2).pairs
    mods = [abs(q.value) for q in pairs]
    assert mods == sorted(mods)
    assert [q.is_infinite for q in pairs] == sorted(q.is_infinite for q in pairs)


def test_polyeig_count_is_n_times_d(p3):
    assert len(polyeig(p3).pairs) == 5 * 4


def test_polyeig_degenerate_rejected():
    p = MatrixPoly(
        [np.array([[1.0, 0.0], [0.0, 0.0]]), np.array([[0.0, 1.0], [0.0, 0.0]])]
    )
    with pytest.raises(DegeneratePolynomial):
        polyeig(p)


def test_polyeig_matches_scalarized_determinant_roots():
    # brute-force oracle: interpolate det A(z) on nd+1 points, take its roots
    rng = np.random.default_rng(17)
    for _ in range(6):
        n = int(rng.integers(1, 4))
        d = int(rng.integers(1, 4))
        p = rand_poly(rng, n, d)
        deg = n * d
        pts = 1.1 * np.exp(2j * np.pi * np.arange(deg + 1) / (deg + 1))
        vand = np.vander(pts, deg + 1, increasing=True)
        coeffs = np.linalg.solve(vand, np.array([det_at(p, z) for z in pts]))
        roots = np.roots(coeffs[::-1])
        vals = polyeig(p).values()
        assert match_moduli(vals, roots) <= 1e-6


def test_polyeig_invariant_under_cayley_seed(p1):
    rng = np.random.default_rng(23)
    base = np.sort_complex(polyeig(p1, seed=0).values())
    for seed in range(1, 6):
        other = np.sort_complex(polyeig(p1, seed=seed).values())
        assert np.max(np.abs(base - other)) <= 1e-7
    q = rand_poly(rng, 3, 2)
    base = np.sort_complex(polyeig(q, seed=0).values())
    for seed in range(1, 6):
        other = np.sort_complex(polyeig(q, seed=seed).values())
        assert np.max(np.abs(base - other)) <= 1e-7


def test_polyeig_left_vectors(p1):
    spec = polyeig(p1, want_left=True)
    for q in spec.finite():
        res = np.linalg.norm(q.left.conj() @ evaluate(p1, q.value))
        assert res <= 1e-7


def test_companion_pencil_determinant(p1, p3):
    rng = np.random.default_rng(29)
    for p in (p1, p3):
        pencil = companion_pencil(p)
        for _ in range(3):
            z = complex(crandn(rng))
            dp = complex(np.linalg.det(pencil.c1 - z * pencil.c2))
            da = det_at(p, z)
            ratio = dp / da
            assert min(abs(ratio - 1), abs(ratio + 1)) <= 1e-8


# --- refinement ---

def test_refine_pair_p1_double_root(p1):
    u = np.array([1.0, 1e-9])
    pair = refine_pair(p1, 1.0 + 1e-8, u)
    assert pair.residual <= 1e-12


def test_refine_pair_fixed_point(p1):
    pair = refine_pair(p1, 1.0, np.array([1.0, 0.0]))
    assert pair.value == 1.0
    assert np.array_equal(pair.right, np.array([1.0, 0.0], dtype=complex))
    assert pair.residual == 0.0


def test_refine_pair_p3_ones(p3):
    e = np.ones(5) / np.sqrt(5)
    pair = refine_pair(p3, 1.0, e)
    assert pair.residual <= 1e-12


def test_refine_pair_improves_random():
    rng = np.random.default_rng(31)
    p = rand_poly(rng, 3, 2)
    target = polyeig(p).finite()[0]
    rough = refine_pair(p, target.value * (1 + 1e-6), target.right + 0.01 * crandn(rng, 3))
    assert rough.residual <= 1e-10


# --- invariant pairs ---

def test_invariant_pair_single_p1(p1):
    pair = refine_pair(p1, 1.0, np.array([1.0, 0.0]))
    inv = invariant_pair(p1, [pair])
    assert np.array_equal(inv.u[:, 0], np.array([1.0, 0.0], dtype=complex))
    assert inv.lam[0, 0] == 1.0
    assert np.allclose(inv.v[:, 0], np.array([1.0, 0.0]))
    assert inv.residual <= 1e-12


def test_invariant_pair_diag_pencil():
    p = MatrixPoly([-np.diag([1.0, 2.0, 3.0]), np.eye(3)])
    pairs = [q for q in polyeig(p).pairs if abs(q.value) < 2.5]
    inv = invariant_pair(p, pairs)
    assert np.allclose(np.abs(inv.u), np.eye(3)[:, :2], atol=1e-10)
    assert np.allclose(sorted(np.diag(inv.lam).real), [1.0, 2.0])


def test_invariant_pair_random_quadratic_residual():
    rng = np.random.default_rng(37)
    p = rand_poly(rng, 4, 2)
    pairs = sorted(polyeig(p).finite(), key=lambda q: abs(q.value))[:2]
    inv = invariant_pair(p, pairs)
    assert inv.residual <= 1e-8
    assert np.linalg.norm(inv.v.conj().T @ inv.u - np.eye(2)) <= 1e-10


def test_invariant_pair_rejects_dependent_vectors():
    from mpshift import EigenPair

    u = np.array([1.0, 0.0, 0.0], dtype=complex)
    pairs = [EigenPair(0.5, u), EigenPair(0.6, u)]
    with pytest.raises(DependentEigenvectors):
        invariant_pair(MatrixPoly([np.eye(3), np.eye(3), np.eye(3)]), pairs)


def test_invariant_pair_rejects_coincident_eigenvalues():
    from mpshift import EigenPair

    pairs = [
        EigenPair(0.5, np.array([1.0, 0.0, 0.0])),
        EigenPair(0.5, np.array([0.0, 1.0, 0.0])),
    ]
    with pytest.raises(DistinctnessViolated):
        invariant_pair(MatrixPoly([np.eye(3), np.eye(3)]), pairs)


def test_invariant_pair_then_identity_multishift_is_exact():
    rng = np.random.default_rng(41)
    p = rand_poly(rng, 4, 2)
    pairs = sorted(polyeig(p).finite(), key=lambda q: abs(q.value))[:2]
    inv = invariant_pair(p, pairs)
    ms = MultiShiftSpec(inv.u, inv.lam, inv.lam, inv.v)
    back = multishift_poly(p, ms)
    for a, b in zip(p.coeffs, back.coeffs):
        assert np.array_equal(a, b)
