"""Minimal-solvent solution of unilateral matrix equations sum_i A_i X^i = 0.

The minimal solvent G carries the n smallest-modulus eigenvalues of A(z).
Degree-d equations are reduced to block quadratics (degree-2 embedding that
adds only eigenvalues at the origin), solved by cyclic reduction, whose
error decays like sigma^(2^k) with sigma the ratio between the largest
eigenvalue modulus inside the unit disk and the smallest outside.  When an
eigenvalue sits on or near the circle, sigma -> 1 and convergence crawls;
shifting that eigenvalue away (e.g. 1 -> 0) shrinks sigma, and the solvent
of the original equation is recovered in closed form from the shifted one:
G = G~ + (lambda - mu) Q.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .core import FLOOR, MatrixPoly, is_infinite, right_residual
from .errors import (
    DegenerateShift,
    DimensionMismatch,
    IllConditionedEigenbasis,
    MpshiftError,
    NoConvergence,
    NoSplitting,
    NotAnEigenpair,
    SplittingFailure,
)
from .factorizations import cr_quadratic
from .shifts import ShiftSpec, right_shift_poly
from .spectra import polyeig

BOUNDARY_TOL = 1e-9  # |lambda| <= 1 + BOUNDARY_TOL counts as inside


@dataclass(frozen=True, eq=False)
class SolveReport:
    """Result of a unilateral solve.

    ``residual`` is ||sum_i A_i G^i||_F / sum_i ||A_i||_F.  ``sigma`` is the
    convergence-ratio estimate (NaN when the spectrum gives no ratio).  For
    shift-accelerated runs ``shifted`` is True and ``recovery`` holds the
    (lambda, mu, Q) triple used to map the shifted solvent back.
    """

    g: np.ndarray
    iterations: int
    residual: float
    sigma: float
    shifted: bool = False
    recovery: tuple = None


@dataclass(frozen=True, eq=False)
class ReblockedQuadratic:
    """Degree-2 block embedding of a degree-d unilateral equation.

    With k = d-1 and N = n k: B_{-1} holds A_0 in block (1,1); B_0 has first
    block row [A_1 ... A_{d-1}] and -I on the remaining diagonal; B_1 has
    A_d in block (1,k) and I on the subdiagonal.  If G solves the original
    equation, the block column (G, G^2, ..., G^k) padded with zeros solves
    the quadratic, and det(B_{-1} + z B_0 + z^2 B_1) has the roots of
    det A(z) plus (d-2) n zeros at the origin.
    """

    bm1: np.ndarray
    b0: np.ndarray
    b1: np.ndarray


def reblock(p):
    """Embed a degree >= 2 matrix polynomial into an equivalent block quadratic."""
    if not isinstance(p, MatrixPoly):
        raise DimensionMismatch("reblock expects a matrix polynomial")
    n, d = p.n, p.d
    if d < 2:
        raise DimensionMismatch("reblock needs degree >= 2")
    if d == 2:
        return ReblockedQuadratic(
            np.array(p.coeffs[0]), np.array(p.coeffs[1]), np.array(p.coeffs[2])
        )
    k = d - 1
    big = n * k
    bm1 = np.zeros((big, big), dtype=complex)
    b0 = np.zeros((big, big), dtype=complex)
    b1 = np.zeros((big, big), dtype=complex)
    eye = np.eye(n, dtype=complex)
    bm1[:n, :n] = p.coeffs[0]
    for j in range(k):
        b0[:n, j * n : (j + 1) * n] = p.coeffs[j + 1]
    for i in range(1, k):
        b0[i * n : (i + 1) * n, i * n : (i + 1) * n] = -eye
        b1[i * n : (i + 1) * n, (i - 1) * n : i * n] = eye
    b1[:n, (k - 1) * n :] = p.coeffs[d]
    return ReblockedQuadratic(bm1, b0, b1)


def equation_residual(p, g):
    """||sum_i A_i g^i||_F normalized by sum_i ||A_i||_F."""
    g = np.asarray(g, dtype=complex)
    acc = np.zeros((p.n, p.n), dtype=complex)
    power = np.eye(p.n, dtype=complex)
    for c in p.coeffs:
        acc = acc + c @ power
        power = power @ g
    return float(np.linalg.norm(acc) / max(sum(np.linalg.norm(c) for c in p.coeffs), FLOOR))


def convergence_ratio(p, seed=0):
    """sigma = max modulus inside the unit disk / min modulus outside.

    Eigenvalues within 1e-9 of the unit circle count as inside.  Raises
    :class:`NoSplitting` when either side is empty.
    """
    spec = polyeig(p, seed=seed)
    inside = []
    outside = []
    for q in spec.pairs:
        mod = abs(q.value)
        if mod <= 1.0 + BOUNDARY_TOL:
            inside.append(mod)
        else:
            outside.append(mod)
    if not inside or not outside:
        raise NoSplitting(
            f"{len(inside)} eigenvalues inside, {len(outside)} outside the unit circle"
        )
    return float(max(inside) / min(outside))


def _sigma_or_nan(p, seed):
    try:
        return convergence_ratio(p, seed=seed)
    except MpshiftError:
        return math.nan


def _solve_cr(p, tol, maxit):
    n = p.n
    if p.d == 1:
        try:
            g = -np.linalg.solve(p.coeffs[1], p.coeffs[0])
        except np.linalg.LinAlgError as exc:
            raise SplittingFailure("leading coefficient of the pencil is singular") from exc
        return g, 1
    rq = reblock(p)
    try:
        f = cr_quadratic(rq.bm1, rq.b0, rq.b1, tol=tol, maxit=maxit, strict_radius=False)
    except NoConvergence as exc:
        raise SplittingFailure(str(exc)) from exc
    return np.array(f.gplus[:n, :n]), f.iterations


def _solve_eigen(p, seed):
    n = p.n
    spec = polyeig(p, seed=seed)
    finite = spec.finite()
    if len(finite) < n:
        raise SplittingFailure(
            f"only {len(finite)} finite eigenvalues; cannot select {n} inside a circle"
        )
    pairs = sorted(spec.pairs, key=lambda q: abs(q.value))
    chosen = pairs[:n]
    if any(q.is_infinite for q in chosen):
        raise SplittingFailure("infinite eigenvalue among the smallest n")
    gap_lo = abs(chosen[-1].value)
    gap_hi = abs(pairs[n].value) if len(pairs) > n else math.inf
    if gap_hi - gap_lo <= BOUNDARY_TOL * max(gap_hi, 1.0):
        raise SplittingFailure(
            f"no circle separates moduli {gap_lo:.6f} and {gap_hi:.6f}"
        )
    vals = [complex(q.value) for q in chosen]
    for i in range(n):
        for j in range(i + 1, n):
            if abs(vals[i] - vals[j]) <= 1e-12 * max(1.0, abs(vals[i])):
                raise IllConditionedEigenbasis(
                    f"selected eigenvalues {vals[i]} and {vals[j]} coincide"
                )
    vmat = np.column_stack([q.right for q in chosen])
    cond = np.linalg.cond(vmat)
    if not np.isfinite(cond) or cond > 1e8:
        raise IllConditionedEigenbasis(f"eigenvector basis condition {cond:.2e} exceeds 1e8")
    g = np.linalg.solve(vmat.T, (vmat @ np.diag(vals)).T).T
    return g, 1


def solve_unilateral(p, method="cr", tol=1e-14, maxit=64, seed=0):
    """Minimal solvent of sum_i A_i X^i = 0.

    Parameters
    ----------
    p : MatrixPoly
    method : "cr" or "eigen"
        "cr": reblock to a quadratic and run cyclic reduction (handles
        eigenvalues on the circle, if slowly).  "eigen": diagonalization from
        the n smallest eigenpairs (requires distinct eigenvalues and a
        well-conditioned eigenvector basis).
    """
    if not isinstance(p, MatrixPoly):
        raise DimensionMismatch("solve_unilateral expects a matrix polynomial")
    if p.d < 1:
        raise DimensionMismatch("the equation needs degree >= 1")
    if method == "cr":
        g, iterations = _solve_cr(p, tol, maxit)
    elif method == "eigen":
        g, iterations = _solve_eigen(p, seed)
    else:
        raise ValueError(f"unknown method {method!r}")
    res = equation_residual(p, g)
    if res > 1e-10:
        raise NoConvergence(f"solvent residual {res:.2e} exceeds 1e-10")
    return SolveReport(g, iterations, res, _sigma_or_nan(p, seed))


def shift_accelerated_solve(p, lam, u, v=None, mu=0.0, tol=1e-14, maxit=64, seed=0):
    """Solve sum_i A_i X^i = 0 by shifting a unit-circle eigenvalue away first.

    Shifts the eigenpair (lam, u) to mu (default 0), solves the shifted
    equation by cyclic reduction, and recovers the original minimal solvent
    as G = G~ + (lam - mu) Q.  The recovered G is verified on the original
    equation to 1e-8 (looser than the shifted residual: the rank-one
    recovery carries the conditioning of the shift).
    """
    lam = complex(lam)
    mu = complex(mu)
    if is_infinite(lam) or is_infinite(mu):
        raise DegenerateShift("finite lambda and mu are required here")
    if mu == lam:
        raise DegenerateShift("mu equals lambda: the shift would be a no-op")
    if abs(mu) >= abs(lam):
        warnings.warn(
            "acceleration expects |mu| < |lambda|; convergence may not improve",
            stacklevel=2,
        )
    res = right_residual(p, lam, u)
    if res > 1e-8:
        raise NotAnEigenpair(f"eigenpair residual {res:.2e} exceeds 1e-8")
    spec = ShiftSpec(lam, mu, u, v)
    shifted = right_shift_poly(p, spec)
    g_shift, iterations = _solve_cr(shifted, tol, maxit)
    res_shift = equation_residual(shifted, g_shift)
    if res_shift > 1e-10:
        raise NoConvergence(f"shifted solvent residual {res_shift:.2e} exceeds 1e-10")
    q = spec.q
    g = g_shift + (lam - mu) * q
    res_orig = equation_residual(p, g)
    if res_orig > 1e-8:
        raise NoConvergence(
            f"recovered solvent fails the original equation: residual {res_orig:.2e}"
        )
    return SolveReport(
        g,
        iterations,
        res_orig,
        _sigma_or_nan(shifted, seed),
        shifted=True,
        recovery=(lam, mu, q),
    )
