"""Canonical (Wiener-Hopf) factorizations of quadratic matrix Laurent polynomials
and matrix polynomials, and their closed-form updates under eigenvalue shifts.

For A(z) = z^{-1} A_{-1} + A_0 + z A_1 with no eigenvalues on the unit
circle, the canonical factorization A(z) = (I - z R+) K+ (I - z^{-1} G+)
exists with spectral radii of G+ and R+ below one; G+ and R+ are the
minimal solvents of the two one-sided quadratic matrix equations.  They are
computed here by cyclic reduction, whose error decays like sigma^(2^k).
The inverse A(z)^{-1} has Laurent coefficients expressible through G+, K+,
R+; when its central coefficient H_0 is nonsingular, A(z^{-1}) factors as
well and the factors follow by similarity with H_0.

Shifting an eigenvalue lambda (|lambda| < 1) of A(z) to mu (|mu| < 1) keeps
R+ and K+ and replaces G+ by G+ + (mu - lambda) u v*; the double-sided
update additionally transforms H_0 in closed form.  These updates are what
make shift-accelerated equation solving cheap: no factorization has to be
recomputed from scratch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import (
    FLOOR,
    LaurentPoly,
    MatrixPoly,
    evaluate,
    left_residual,
    right_residual,
)
from .errors import (
    DegenerateShift,
    DimensionMismatch,
    ModulusConstraintViolated,
    NoConvergence,
    NotAnEigenpair,
    NotASolvent,
    ShiftOutsideDisk,
    SingularH0,
    SingularPivot,
    SingularWtilde,
    ZeroLambda,
)
from .shifts import _left_shift_coeffs
from .spectra import spectral_radius

UNIT_CIRCLE = tuple(cmath.exp(2j * math.pi * k / 8) for k in range(8))
RADIUS_MARGIN = 1e-8


@dataclass(frozen=True, eq=False)
class QuadFactorization:
    """Factors of A(z) = (I - z rplus) kplus (I - z^{-1} gplus)."""

    gplus: np.ndarray
    rplus: np.ndarray
    kplus: np.ndarray
    iterations: int
    residual: float
    rho_g: float
    rho_r: float


@dataclass(frozen=True, eq=False)
class ReversedFactorization:
    """Factors of A(z^{-1}) = (I - z rminus) kminus (I - z^{-1} gminus); w is H_0."""

    gminus: np.ndarray
    rminus: np.ndarray
    kminus: np.ndarray
    w: np.ndarray
    residual: float
    rho_g: float
    rho_r: float


@dataclass(frozen=True, eq=False)
class PolyFactorization:
    """Factors of A(z) = U(z) (z I - g) with rho(g) < 1 (minimal solvent g)."""

    g: np.ndarray
    ucoeffs: tuple


def _quad_value(am1, a0, a1, z):
    return am1 / z + a0 + z * a1


def _quad_fact_residual(am1, a0, a1, g, r, k):
    """Max relative factorization residual over 8 unit-circle points."""
    eye = np.eye(a0.shape[0], dtype=complex)
    scale = max(
        np.linalg.norm(am1) + np.linalg.norm(a0) + np.linalg.norm(a1), FLOOR
    )
    worst = 0.0
    for z in UNIT_CIRCLE:
        lhs = _quad_value(am1, a0, a1, z)
        rhs = (eye - z * r) @ k @ (eye - g / z)
        worst = max(worst, np.linalg.norm(lhs - rhs) / scale)
    return worst


def cr_quadratic(am1, a0, a1, tol=1e-14, maxit=64, strict_radius=True):
    """Canonical factorization of z^{-1}A_{-1} + A_0 + z A_1 by cyclic reduction.

    Iterates the standard quadratically convergent recurrences
        B_{-1} <- -B_{-1} S B_{-1},  B_1 <- -B_1 S B_1,
        B_0 <- B_0 - B_{-1} S B_1 - B_1 S B_{-1},
        Hhat <- Hhat - B_1 S B_{-1},
    with S = B_0^{-1}, stopping when min(||B_{-1}||_inf, ||B_1||_inf) drops
    below tol times the input scale.  The limit of the Hhat sequence is the
    middle factor K+ itself, and both solvents come from it:
    G+ = -Hhat^{-1} A_{-1} and R+ = -A_1 Hhat^{-1}.  Residuals of both
    one-sided quadratic equations and of the factorization itself are
    verified to 1e-10 relative.

    With ``strict_radius`` the spectral radii of G+ and R+ must be below one
    with margin 1e-8 (a genuine canonical factorization); pass False when
    eigenvalues may sit on the unit circle and only the minimal solvent is
    wanted (convergence is then linear instead of quadratic).
    """
    am1 = np.asarray(am1, dtype=complex)
    a0 = np.asarray(a0, dtype=complex)
    a1 = np.asarray(a1, dtype=complex)
    if not (am1.shape == a0.shape == a1.shape) or a0.shape[0] != a0.shape[1]:
        raise DimensionMismatch("coefficients must be square and equally sized")

    def inorm(x):
        return np.linalg.norm(x, np.inf)

    denom = max(inorm(am1) + inorm(a0) + inorm(a1), FLOOR)
    scale = max(np.linalg.norm(am1) + np.linalg.norm(a0) + np.linalg.norm(a1), FLOOR)

    bm1, b0, b1 = am1.copy(), a0.copy(), a1.copy()
    hhat = a0.copy()
    k = 0
    while min(inorm(bm1), inorm(b1)) > tol * denom:
        if k >= maxit:
            raise NoConvergence(
                f"cyclic reduction did not converge in {maxit} iterations "
                "(eigenvalues on the unit circle without a gap?)"
            )
        try:
            x = np.linalg.solve(b0, bm1)
            y = np.linalg.solve(b0, b1)
        except np.linalg.LinAlgError as exc:
            raise SingularPivot(k) from exc
        bm1_next = -bm1 @ x
        b1_next = -b1 @ y
        b0 = b0 - bm1 @ y - b1 @ x
        hhat = hhat - b1 @ x
        bm1, b1 = bm1_next, b1_next
        k += 1

    try:
        gplus = -np.linalg.solve(hhat, am1)
        rplus = -np.linalg.solve(hhat.T, a1.T).T
    except np.linalg.LinAlgError as exc:
        raise SingularPivot(k) from exc
    kplus = a0 + a1 @ gplus

    res_g = np.linalg.norm(am1 + a0 @ gplus + a1 @ gplus @ gplus) / scale
    res_r = np.linalg.norm(rplus @ rplus @ am1 + rplus @ a0 + a1) / scale
    res_k = np.linalg.norm(a0 - (kplus + rplus @ kplus @ gplus)) / scale
    if max(res_g, res_r, res_k) > 1e-10:
        raise NoConvergence(
            f"cyclic reduction limit fails its residual checks "
            f"(G: {res_g:.2e}, R: {res_r:.2e}, K: {res_k:.2e})"
        )
    rho_g = spectral_radius(gplus)
    rho_r = spectral_radius(rplus)
    if strict_radius and max(rho_g, rho_r) >= 1.0 - RADIUS_MARGIN:
        raise NoConvergence(
            f"computed factors are not contractive (rho(G+)={rho_g:.6f}, "
            f"rho(R+)={rho_r:.6f}); no canonical factorization"
        )
    fact_res = _quad_fact_residual(am1, a0, a1, gplus, rplus, kplus)
    if fact_res > 1e-10:
        raise NoConvergence(f"factorization residual {fact_res:.2e} exceeds 1e-10")
    return QuadFactorization(gplus, rplus, kplus, k, fact_res, rho_g, rho_r)


def _h0(f):
    """H_0 = sum_j G+^j K+^{-1} R+^j, summed to a geometric tail of 1e-16."""
    term = np.linalg.inv(f.kplus)
    total = term.copy()
    for _ in range(20000):
        term = f.gplus @ term @ f.rplus
        total += term
        if np.linalg.norm(term) <= 1e-16 * max(np.linalg.norm(total), FLOOR):
            return total
    raise NoConvergence("H_0 series did not reach its tail tolerance")


def inverse_coefficients(f, m):
    """Laurent coefficients H_{-m}..H_m of A(z)^{-1} from a factorization.

    H_i = G+^{-i} H_0 for i < 0 and H_i = H_0 R+^i for i > 0; returns a list
    of 2m + 1 matrices indexed from -m to m.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    h0 = _h0(f)
    neg = []
    cur = h0
    for _ in range(m):
        cur = f.gplus @ cur
        neg.append(cur)
    pos = []
    cur = h0
    for _ in range(m):
        cur = cur @ f.rplus
        pos.append(cur)
    return list(reversed(neg)) + [h0] + pos


def reversed_factorization(am1, a0, a1, f):
    """Canonical factorization of A(z^{-1}) when H_0 is nonsingular.

    G- = H_0 R+ H_0^{-1}, R- = H_0^{-1} G+ H_0, and K- = A_0 + A_{-1} G-
    (= A_0 + R- A_1; both expressions are computed and must agree).
    """
    am1 = np.asarray(am1, dtype=complex)
    a0 = np.asarray(a0, dtype=complex)
    a1 = np.asarray(a1, dtype=complex)
    h0 = _h0(f)
    if 1.0 / np.linalg.cond(h0) < 1e-12:
        raise SingularH0(
            f"reciprocal condition of H_0 is {1.0 / np.linalg.cond(h0):.2e}"
        )
    gminus = np.linalg.solve(h0.T, (h0 @ f.rplus).T).T
    rminus = np.linalg.solve(h0, f.gplus @ h0)
    k_a = a0 + am1 @ gminus
    k_b = a0 + rminus @ a1
    scale = max(np.linalg.norm(am1) + np.linalg.norm(a0) + np.linalg.norm(a1), FLOOR)
    if np.linalg.norm(k_a - k_b) > 1e-10 * scale:
        raise SingularH0(
            f"the two K- expressions disagree by {np.linalg.norm(k_a - k_b):.2e}"
        )
    fact_res = _quad_fact_residual(a1, a0, am1, gminus, rminus, k_a)
    if fact_res > 1e-10:
        raise SingularH0(f"reversed factorization residual {fact_res:.2e} exceeds 1e-10")
    return ReversedFactorization(
        gminus,
        rminus,
        k_a,
        h0,
        fact_res,
        spectral_radius(gminus),
        spectral_radius(rminus),
    )


# ---------------------------------------------------------------------------
# factorization updates under shifts
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CanonicalFactors:
    """General canonical factorization A(z) = U(z) L(z^{-1}) by coefficient lists."""

    ucoeffs: tuple
    lcoeffs: tuple

    def value(self, z):
        u = _poly_value(self.ucoeffs, z)
        l = _poly_value(self.lcoeffs, 1.0 / z)
        return u @ l


def _poly_value(coeffs, z):
    acc = np.array(coeffs[-1], dtype=complex)
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    return acc


def _coeff_tuple(coeffs):
    out = tuple(np.asarray(c, dtype=complex) for c in coeffs)
    n = out[0].shape[0]
    for c in out:
        if c.shape != (n, n):
            raise DimensionMismatch("factor coefficients must be square and equal size")
    return out


def _shift_l_coeffs(lcoeffs, lam, mu, u, vbar):
    """L~_i = L_i - (lam-mu) sum_{j>=1} lam^{-j} L_{j+i-1} u v* (finite for polynomials)."""
    ell = len(lcoeffs) - 1
    out = [np.array(c, dtype=complex) for c in lcoeffs]
    inv_lam = 1.0 / lam
    w = np.zeros(lcoeffs[0].shape[0], dtype=complex)
    fac = lam - mu
    # w at index i equals sum_{j>=1} lam^{-j} L_{j+i-1} u, built downward in i
    for i in range(ell, 0, -1):
        w = inv_lam * (lcoeffs[i] @ u + w)
        out[i] -= fac * np.outer(w, vbar)
    return out


def shifted_factorization_right(ucoeffs, lcoeffs, lam, mu, u, v=None):
    """Update a canonical factorization under a right shift inside the unit disk.

    Given A(z) = U(z) L(z^{-1}) and an eigenpair A(lam) u = 0 with
    |lam| < 1, |mu| < 1, the shifted function keeps U and replaces L by
    L~_0 = L_0, L~_i = L_i - (lam-mu) sum_{j>=1} lam^{-j} L_{j+i-1} Q.
    The updated factors are verified against the shifted function at 8
    unit-circle points, and det L~ is checked to have no roots in the closed
    unit disk (all eigenvalues of the L~ polynomial beyond radius one).
    """
    lam = complex(lam)
    mu = complex(mu)
    if lam == 0:
        raise ZeroLambda("lambda = 0 is outside the annulus of the factorization")
    if abs(lam) >= 1 or abs(mu) >= 1:
        raise ShiftOutsideDisk(f"|lambda|={abs(lam):.4f}, |mu|={abs(mu):.4f} must be < 1")
    ucoeffs = _coeff_tuple(ucoeffs)
    lcoeffs = _coeff_tuple(lcoeffs)
    lpoly = MatrixPoly(lcoeffs)
    u_vec, dual = _normalized_pair(u, v)
    res = right_residual(lpoly, 1.0 / lam, u_vec)
    if res > 1e-8:
        raise NotAnEigenpair(f"||L(1/lambda) u|| residual {res:.2e} exceeds 1e-8")
    if mu == lam:
        return CanonicalFactors(ucoeffs, lcoeffs)
    new_l = _shift_l_coeffs(lcoeffs, lam, mu, u_vec, dual.conj())
    factors = CanonicalFactors(ucoeffs, tuple(new_l))
    _check_shifted_product(ucoeffs, lcoeffs, factors, [(lam, mu, u_vec, dual, "right")])
    _check_l_outside_disk(factors.lcoeffs)
    return factors


def _normalized_pair(u, v):
    u = np.asarray(u, dtype=complex).reshape(-1)
    v = u if v is None else np.asarray(v, dtype=complex).reshape(-1)
    ip = np.vdot(u, v)
    if abs(ip) <= 1e-14 * np.linalg.norm(u) * np.linalg.norm(v):
        raise ValueError("dual vector is orthogonal to the shift vector")
    return u, v / ip


def _check_shifted_product(ucoeffs, lcoeffs, factors, shifts_applied):
    """Compare U~(z) L~(1/z) with the shifted function pointwise on the unit circle."""
    n = ucoeffs[0].shape[0]
    eye = np.eye(n, dtype=complex)
    scale = max(
        sum(np.linalg.norm(c) for c in ucoeffs)
        + sum(np.linalg.norm(c) for c in lcoeffs),
        FLOOR,
    )
    worst = 0.0
    for z in UNIT_CIRCLE:
        ref = _poly_value(ucoeffs, z) @ _poly_value(lcoeffs, 1.0 / z)
        for lam, mu, vec, dual, side in shifts_applied:
            if side == "right":
                ref = ref @ (eye + (lam - mu) / (z - lam) * np.outer(vec, dual.conj()))
            else:
                ref = (eye + (lam - mu) / (z - lam) * np.outer(dual, vec.conj())) @ ref
        worst = max(worst, np.linalg.norm(factors.value(z) - ref) / scale)
    if worst > 1e-10:
        raise NoConvergence(f"updated factors disagree with the shifted function: {worst:.2e}")


def _check_l_outside_disk(lcoeffs):
    from .spectra import polyeig

    lpoly = MatrixPoly(lcoeffs)
    if lpoly.d == 0:
        return
    spec = polyeig(lpoly)
    finite = [abs(q.value) for q in spec.finite()]
    if finite and min(finite) <= 1.0 + RADIUS_MARGIN:
        raise NoConvergence(
            f"det L~ has a root of modulus {min(finite):.6f} inside the closed unit disk"
        )


def shifted_factorization_both(am1, a0, a1, f, rf, lam, mu, u, v=None):
    """Update both canonical factorizations of a quadratic under a right shift.

    Keeps R+ and K+, sets G~+ = G+ + (mu-lam) Q, and updates the reversed
    factors by similarity with W~ = W + (mu-lam) Q W (I - mu R+)^{-1} R+,
    where W = H_0.  (The resolvent factor is exact for every |mu| < 1 and
    collapses to W + (mu-lam) Q W R+ in the common mu = 0 case; see the
    telescoping of (G+ + (mu-lam)Q)^i, whose powers contract with ratio mu
    on the shifted eigendirection.)  Requires |lam| < 1, |mu| < 1, v* u = 1,
    and the non-degeneracy condition
    (lam-mu) v* (I - mu G-)^{-1} G- u != 1 (checked with margin 1e-10).

    Returns the pair (QuadFactorization, ReversedFactorization) for the
    shifted Laurent polynomial.
    """
    lam = complex(lam)
    mu = complex(mu)
    if lam == 0:
        raise ZeroLambda("lambda = 0 is outside the annulus of the factorization")
    if abs(lam) >= 1 or abs(mu) >= 1:
        raise ShiftOutsideDisk(f"|lambda|={abs(lam):.4f}, |mu|={abs(mu):.4f} must be < 1")
    am1 = np.asarray(am1, dtype=complex)
    a0 = np.asarray(a0, dtype=complex)
    a1 = np.asarray(a1, dtype=complex)
    u_vec, dual = _normalized_pair(u, v)
    lpoly = LaurentPoly(-1, (am1, a0, a1))
    res = right_residual(lpoly, lam, u_vec)
    if res > 1e-8:
        raise NotAnEigenpair(f"eigenpair residual {res:.2e} exceeds 1e-8")
    if mu == lam:
        return f, rf

    n = a0.shape[0]
    eye = np.eye(n, dtype=complex)
    resolvent_g = np.linalg.solve(eye - mu * rf.gminus, rf.gminus @ u_vec)
    cond_val = (lam - mu) * (dual.conj() @ resolvent_g)
    if abs(cond_val - 1.0) < 1e-10:
        raise DegenerateShift(
            f"(lam-mu) v* (I - mu G-)^-1 G- u = {cond_val:.6e} is too close to 1"
        )

    q = np.outer(u_vec, dual.conj())
    gplus_t = f.gplus + (mu - lam) * q
    # shifted coefficients of the Laurent polynomial
    am1_t = am1 + (lam - mu) * (a0 + lam * a1) @ q
    a0_t = a0 + (lam - mu) * a1 @ q
    a1_t = a1

    w_t = rf.w + (mu - lam) * q @ rf.w @ np.linalg.solve(eye - mu * f.rplus, f.rplus)
    if 1.0 / np.linalg.cond(w_t) < 1e-12:
        raise SingularWtilde(
            f"reciprocal condition of W~ is {1.0 / np.linalg.cond(w_t):.2e}"
        )
    gminus_t = np.linalg.solve(w_t.T, (w_t @ f.rplus).T).T
    rminus_t = np.linalg.solve(w_t, gplus_t @ w_t)
    k_a = a0_t + am1_t @ gminus_t
    k_b = a0_t + rminus_t @ a1
    scale = max(np.linalg.norm(am1) + np.linalg.norm(a0) + np.linalg.norm(a1), FLOOR)
    if np.linalg.norm(k_a - k_b) > 1e-10 * scale:
        raise SingularWtilde(
            f"the two K~- expressions disagree by {np.linalg.norm(k_a - k_b):.2e}"
        )

    fact_res = _quad_fact_residual(am1_t, a0_t, a1_t, gplus_t, f.rplus, f.kplus)
    rev_res = _quad_fact_residual(a1_t, a0_t, am1_t, gminus_t, rminus_t, k_a)
    if max(fact_res, rev_res) > 1e-10:
        raise NoConvergence(
            f"shifted factorization residuals {fact_res:.2e}/{rev_res:.2e} exceed 1e-10"
        )
    quad = QuadFactorization(
        gplus_t,
        f.rplus,
        f.kplus,
        f.iterations,
        fact_res,
        spectral_radius(gplus_t),
        f.rho_r,
    )
    rev = ReversedFactorization(
        gminus_t,
        rminus_t,
        k_a,
        w_t,
        rev_res,
        spectral_radius(gminus_t),
        spectral_radius(rminus_t),
    )
    return quad, rev


def double_shift_factorization(ucoeffs, lcoeffs, right_spec, left_spec):
    """Update a canonical factorization under a double shift.

    The right pair (lam1 -> mu1, |.| < 1) updates L as in
    :func:`shifted_factorization_right`; the left pair (lam2 -> mu2,
    |.| > 1) updates U by U~_i = U_i + (lam2-mu2) sum_{j>=0} lam2^j S U_{i+j+1}.
    Both sums are finite for polynomial factors, so degrees are preserved.
    """
    ucoeffs = _coeff_tuple(ucoeffs)
    lcoeffs = _coeff_tuple(lcoeffs)
    l1, m1 = complex(right_spec.lam), complex(right_spec.mu)
    l2, m2 = complex(left_spec.lam), complex(left_spec.mu)
    if abs(l1) >= 1 or abs(m1) >= 1:
        raise ModulusConstraintViolated(
            f"right pair must lie inside the unit circle (|lam1|={abs(l1):.4f}, |mu1|={abs(m1):.4f})"
        )
    if abs(l2) <= 1 or abs(m2) <= 1:
        raise ModulusConstraintViolated(
            f"left pair must lie outside the unit circle (|lam2|={abs(l2):.4f}, |mu2|={abs(m2):.4f})"
        )
    lpoly = MatrixPoly(lcoeffs)
    upoly = MatrixPoly(ucoeffs)
    if l1 == 0:
        raise ZeroLambda("lambda1 = 0 is outside the annulus of the factorization")
    res_l = right_residual(lpoly, 1.0 / l1, right_spec.vector)
    if res_l > 1e-8:
        raise NotAnEigenpair(f"||L(1/lambda1) u|| residual {res_l:.2e} exceeds 1e-8")
    res_u = left_residual(upoly, l2, left_spec.vector)
    if res_u > 1e-8:
        raise NotAnEigenpair(f"||v* U(lambda2)|| residual {res_u:.2e} exceeds 1e-8")

    new_l = lcoeffs
    if m1 != l1:
        new_l = tuple(
            _shift_l_coeffs(lcoeffs, l1, m1, right_spec.vector, right_spec.dual.conj())
        )
    new_u = ucoeffs
    if m2 != l2:
        new_u = tuple(
            _left_shift_coeffs(ucoeffs, 0, l2, m2, left_spec.vector, left_spec.dual)
        )
    factors = CanonicalFactors(new_u, new_l)
    applied = []
    if m1 != l1:
        applied.append((l1, m1, right_spec.vector, right_spec.dual, "right"))
    if m2 != l2:
        applied.append((l2, m2, left_spec.vector, left_spec.dual, "left"))
    _check_shifted_product(ucoeffs, lcoeffs, factors, applied)
    return factors


def poly_factorization(p, g):
    """Divide A(z) by (z I - g) for a minimal solvent g: A(z) = U(z) (z I - g).

    The quotient follows the backward recurrence U_{d-1} = A_d,
    U_{i-1} = A_i + U_i g, with the consistency condition A_0 + U_0 g = 0.
    """
    if not isinstance(p, MatrixPoly):
        raise DimensionMismatch("poly_factorization expects a matrix polynomial")
    g = np.asarray(g, dtype=complex)
    if g.shape != (p.n, p.n):
        raise DimensionMismatch(f"solvent must be {p.n}x{p.n}")
    rho = spectral_radius(g)
    if rho >= 1.0 - RADIUS_MARGIN:
        raise NotASolvent(f"rho(g) = {rho:.8f} is not below one")
    scale = max(sum(np.linalg.norm(c) for c in p.coeffs), FLOOR)
    acc = np.zeros_like(g)
    power = np.eye(p.n, dtype=complex)
    for c in p.coeffs:
        acc = acc + c @ power
        power = power @ g
    if np.linalg.norm(acc) > 1e-10 * scale:
        raise NotASolvent(
            f"||sum A_i g^i|| = {np.linalg.norm(acc):.2e} exceeds 1e-10 * scale"
        )
    ucoeffs = [None] * p.d
    ucoeffs[p.d - 1] = np.array(p.coeffs[p.d], dtype=complex)
    for i in range(p.d - 1, 0, -1):
        ucoeffs[i - 1] = p.coeffs[i] + ucoeffs[i] @ g
    consistency = np.linalg.norm(p.coeffs[0] + ucoeffs[0] @ g)
    if consistency > 1e-8 * scale:
        raise NotASolvent(f"division consistency ||A_0 + U_0 g|| = {consistency:.2e}")
    # sample-point reconstruction check
    worst = 0.0
    eye = np.eye(p.n, dtype=complex)
    for z in UNIT_CIRCLE:
        rhs = _poly_value(ucoeffs, z) @ (z * eye - g)
        worst = max(worst, np.linalg.norm(evaluate(p, z) - rhs) / scale)
    if worst > 1e-10:
        raise NotASolvent(f"reconstruction residual {worst:.2e} exceeds 1e-10")
    return PolyFactorization(g, tuple(ucoeffs))


__all__ = [
    "CanonicalFactors",
    "PolyFactorization",
    "QuadFactorization",
    "ReversedFactorization",
    "cr_quadratic",
    "double_shift_factorization",
    "inverse_coefficients",
    "poly_factorization",
    "reversed_factorization",
    "shifted_factorization_right",
    "shifted_factorization_both",
]
