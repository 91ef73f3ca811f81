"""Rank-one and rank-m eigenvalue shifts for matrix polynomials and Laurent polynomials.

A right shift multiplies A(z) by I + ((lambda - mu)/(z - lambda)) u v* where
A(lambda) u = 0 and v* u = 1; the result is again a matrix (Laurent)
polynomial with the same support whose spectrum equals that of A(z) with
lambda replaced by mu.  Left shifts multiply from the left using a left
eigenvector, double shifts compose one of each, and multishifts move a whole
packet of eigenvalues held by an invariant pair (U, Lambda) to the
eigenvalues of an arbitrary target matrix S.  Shifts from/to infinity and a
structure-preserving shift for *-palindromic polynomials round out the set.

Every shift here is validated downstream by the determinant-ratio oracle in
:mod:`mpshift.core`; the coefficient recurrences below are exact (finite
sums) for polynomial data.  For truncated Laurent series the sums run over
the stored support only and the result keeps the ``truncated`` flag, since
the dropped tail decays geometrically.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .core import (
    FLOOR,
    LaurentPoly,
    MatrixPoly,
    is_infinite,
    kernel_residual,
    left_residual,
    right_residual,
    unit_vector,
)
from .errors import (
    CoincidentEigenvalues,
    DimensionMismatch,
    NotAnEigenpair,
    NotInKernel,
    NotInvariant,
    NotPalindromic,
    SingularLambda,
    ZeroLambda,
    ZeroLambdaWithNegativePowers,
    ZeroMu,
)

EIGENPAIR_TOL = 1e-8


@dataclass(frozen=True, eq=False)
class ShiftSpec:
    """Parameters of a single shift: move eigenvalue ``lam`` to ``mu``.

    ``vector`` is the right eigenvector u for a right shift, or the left
    eigenvector v for a left shift.  ``dual`` is the free vector of the
    rank-one factor (v for a right shift, y for a left shift); it defaults to
    ``vector`` and is always rescaled so that the required inner product
    (v* u, respectively v* y) equals one.
    """

    lam: complex
    mu: complex
    vector: np.ndarray
    dual: np.ndarray = None
    side: str = "right"

    def __post_init__(self):
        if self.side not in ("right", "left"):
            raise ValueError(f"side must be 'right' or 'left', got {self.side!r}")
        vec = np.asarray(self.vector, dtype=complex).reshape(-1)
        if np.linalg.norm(vec) == 0:
            raise ValueError("shift vector must be nonzero")
        dual = vec if self.dual is None else np.asarray(self.dual, dtype=complex).reshape(-1)
        if dual.shape != vec.shape:
            raise DimensionMismatch("dual vector has a different length")
        ip = np.vdot(vec, dual)
        if abs(ip) <= 1e-14 * np.linalg.norm(vec) * np.linalg.norm(dual):
            raise ValueError("dual vector is orthogonal to the shift vector")
        dual = dual / ip
        vec = vec.copy()
        vec.setflags(write=False)
        dual.setflags(write=False)
        object.__setattr__(self, "lam", complex(self.lam))
        object.__setattr__(self, "mu", complex(self.mu))
        object.__setattr__(self, "vector", vec)
        object.__setattr__(self, "dual", dual)

    @property
    def q(self):
        """Rank-one factor: u v* for a right shift, y v* for a left shift."""
        if self.side == "right":
            return np.outer(self.vector, self.dual.conj())
        return np.outer(self.dual, self.vector.conj())


@dataclass(frozen=True, eq=False)
class MultiShiftSpec:
    """Invariant pair (U, Lambda) and target S for a simultaneous shift.

    V defaults to U (U* U)^{-1}; it must satisfy ||V* U - I||_F <= 1e-10.
    """

    u: np.ndarray
    lam: np.ndarray
    s: np.ndarray
    v: np.ndarray = None

    def __post_init__(self):
        u = np.asarray(self.u, dtype=complex)
        if u.ndim == 1:
            u = u.reshape(-1, 1)
        n, m = u.shape
        if m >= n:
            raise DimensionMismatch(f"packet size m={m} must be < n={n}")
        lam = np.asarray(self.lam, dtype=complex).reshape(m, m)
        s = np.asarray(self.s, dtype=complex).reshape(m, m)
        v = np.linalg.pinv(u).conj().T if self.v is None else np.asarray(self.v, dtype=complex).reshape(n, m)
        gap = np.linalg.norm(v.conj().T @ u - np.eye(m))
        if gap > 1e-10:
            raise DimensionMismatch(f"||V* U - I||_F = {gap:.2e} exceeds 1e-10")
        for name, arr in (("u", u), ("lam", lam), ("s", s), ("v", v)):
            arr = arr.copy()
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def m(self):
        return self.u.shape[1]


# ---------------------------------------------------------------------------
# coefficient workers (shared by polynomial and Laurent entry points)
# ---------------------------------------------------------------------------

def _right_shift_coeffs(coeffs, lo, lam, mu, u, dual):
    """Apply the right-shift recurrences on a coefficient list.

    Nonnegative powers get A_i + (lam-mu) * (sum_k lam^k A_{k+i+1} u) v*,
    negative powers get A_i - (lam-mu) * (sum_k lam^{-k-1} A_{i-k} u) v*,
    with sums over the stored support.
    """
    hi = lo + len(coeffs) - 1
    n = coeffs[0].shape[0]
    out = [np.array(c, dtype=complex) for c in coeffs]
    vbar = dual.conj()
    fac = lam - mu

    w = np.zeros(n, dtype=complex)
    for i in range(hi - 1, -1, -1):
        w = coeffs[i + 1 - lo] @ u + lam * w
        out[i - lo] += fac * np.outer(w, vbar)

    if lo < 0:
        inv_lam = 1.0 / lam
        s = np.zeros(n, dtype=complex)
        for i in range(lo, 0):
            s = (coeffs[i - lo] @ u + s) * inv_lam
            out[i - lo] -= fac * np.outer(s, vbar)
    return out


def _left_shift_coeffs(coeffs, lo, lam, mu, v, y):
    """Left-shift recurrences: rank-one factor S = y v* applied from the left."""
    hi = lo + len(coeffs) - 1
    n = coeffs[0].shape[0]
    out = [np.array(c, dtype=complex) for c in coeffs]
    vbar = v.conj()
    fac = lam - mu

    row = np.zeros(n, dtype=complex)
    for i in range(hi - 1, -1, -1):
        row = vbar @ coeffs[i + 1 - lo] + lam * row
        out[i - lo] += fac * np.outer(y, row)

    if lo < 0:
        inv_lam = 1.0 / lam
        t = np.zeros(n, dtype=complex)
        for i in range(lo, 0):
            t = (vbar @ coeffs[i - lo] + t) * inv_lam
            out[i - lo] -= fac * np.outer(y, t)
    return out


def _multishift_coeffs(coeffs, lo, u, lam, s, v):
    """Packet version of the right-shift recurrences with U Lambda^k blocks."""
    hi = lo + len(coeffs) - 1
    n = coeffs[0].shape[0]
    m = u.shape[1]
    out = [np.array(c, dtype=complex) for c in coeffs]
    diff = lam - s
    vstar = v.conj().T

    w = np.zeros((n, m), dtype=complex)
    for i in range(hi - 1, -1, -1):
        w = coeffs[i + 1 - lo] @ u + w @ lam
        out[i - lo] += w @ diff @ vstar

    if lo < 0:
        try:
            lam_inv = np.linalg.inv(lam)
        except np.linalg.LinAlgError as exc:
            raise SingularLambda("Lambda is singular; negative powers cannot be shifted") from exc
        acc = np.zeros((n, m), dtype=complex)
        for i in range(lo, 0):
            acc = (coeffs[i - lo] @ u + acc) @ lam_inv
            out[i - lo] -= acc @ diff @ vstar
    return out


# ---------------------------------------------------------------------------
# single shifts
# ---------------------------------------------------------------------------

def right_shift_pencil(a, spec):
    """Classical rank-one shift of one matrix eigenvalue: A + (mu-lam) u v*."""
    a = np.asarray(a, dtype=complex)
    u = spec.vector
    res = np.linalg.norm(a @ u - spec.lam * u) / max(
        np.linalg.norm(a) * np.linalg.norm(u), FLOOR
    )
    if res > EIGENPAIR_TOL:
        raise NotAnEigenpair(f"||A u - lam u|| residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    if spec.mu == spec.lam:
        return a.copy()
    return a + (spec.mu - spec.lam) * np.outer(u, spec.dual.conj())


def _route_infinite(p, spec):
    lam_inf, mu_inf = is_infinite(spec.lam), is_infinite(spec.mu)
    if lam_inf and mu_inf:
        raise ZeroMu("both lambda and mu are infinite; nothing to shift")
    if lam_inf:
        return shift_from_infinity(p, spec.mu, spec.vector, spec.dual)
    return shift_to_infinity(p, spec.lam, spec.vector, spec.dual)


def right_shift_poly(p, spec):
    """Shift one eigenvalue of a matrix polynomial; degree and A_d are preserved.

    Infinite ``lam`` or ``mu`` are routed to :func:`shift_from_infinity` or
    :func:`shift_to_infinity` respectively.
    """
    if is_infinite(spec.lam) or is_infinite(spec.mu):
        return _route_infinite(p, spec)
    res = right_residual(p, spec.lam, spec.vector)
    if res > EIGENPAIR_TOL:
        raise NotAnEigenpair(f"eigenpair residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    if spec.mu == spec.lam:
        return p
    return MatrixPoly(_right_shift_coeffs(p.coeffs, 0, spec.lam, spec.mu, spec.vector, spec.dual))


def left_shift_poly(p, spec):
    """Left-eigenvector analogue of :func:`right_shift_poly`."""
    if is_infinite(spec.lam) or is_infinite(spec.mu):
        raise ZeroMu("infinity shifts are provided for the right side only")
    res = left_residual(p, spec.lam, spec.vector)
    if res > EIGENPAIR_TOL:
        raise NotAnEigenpair(f"left eigenpair residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    if spec.mu == spec.lam:
        return p
    return MatrixPoly(_left_shift_coeffs(p.coeffs, 0, spec.lam, spec.mu, spec.vector, spec.dual))


def right_shift_laurent(p, spec):
    """Shift one eigenvalue of a matrix Laurent polynomial; support (lo, hi) is kept."""
    if is_infinite(spec.lam) or is_infinite(spec.mu):
        raise ZeroMu("infinity shifts apply to matrix polynomials only")
    if p.lo < 0 and spec.lam == 0:
        raise ZeroLambdaWithNegativePowers("lambda = 0 with negative powers present")
    res = right_residual(p, spec.lam, spec.vector)
    if res > EIGENPAIR_TOL:
        raise NotAnEigenpair(f"eigenpair residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    if spec.mu == spec.lam:
        return p
    coeffs = _right_shift_coeffs(p.coeffs, p.lo, spec.lam, spec.mu, spec.vector, spec.dual)
    return LaurentPoly(p.lo, coeffs, p.truncated)


def left_shift_laurent(p, spec):
    """Left-eigenvector analogue of :func:`right_shift_laurent`."""
    if is_infinite(spec.lam) or is_infinite(spec.mu):
        raise ZeroMu("infinity shifts apply to matrix polynomials only")
    if p.lo < 0 and spec.lam == 0:
        raise ZeroLambdaWithNegativePowers("lambda = 0 with negative powers present")
    res = left_residual(p, spec.lam, spec.vector)
    if res > EIGENPAIR_TOL:
        raise NotAnEigenpair(f"left eigenpair residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    if spec.mu == spec.lam:
        return p
    coeffs = _left_shift_coeffs(p.coeffs, p.lo, spec.lam, spec.mu, spec.vector, spec.dual)
    return LaurentPoly(p.lo, coeffs, p.truncated)


def double_shift_laurent(p, right_spec, left_spec):
    """Shift two distinct eigenvalues at once: a right shift followed by a left shift.

    The composition order does not matter (both yield the same series); this
    routine applies the right shift first.  lambda1 = lambda2 is rejected.
    """
    if right_spec.lam == left_spec.lam:
        raise CoincidentEigenvalues("double shift requires lambda1 != lambda2")
    if p.lo < 0 and (right_spec.lam == 0 or left_spec.lam == 0):
        raise ZeroLambdaWithNegativePowers("lambda = 0 with negative powers present")
    res_r = right_residual(p, right_spec.lam, right_spec.vector)
    if res_r > EIGENPAIR_TOL:
        raise NotAnEigenpair(f"right eigenpair residual {res_r:.2e} exceeds {EIGENPAIR_TOL}")
    res_l = left_residual(p, left_spec.lam, left_spec.vector)
    if res_l > EIGENPAIR_TOL:
        raise NotAnEigenpair(f"left eigenpair residual {res_l:.2e} exceeds {EIGENPAIR_TOL}")

    coeffs = p.coeffs
    if right_spec.mu != right_spec.lam:
        coeffs = _right_shift_coeffs(
            coeffs, p.lo, right_spec.lam, right_spec.mu, right_spec.vector, right_spec.dual
        )
    if left_spec.mu != left_spec.lam:
        coeffs = _left_shift_coeffs(
            coeffs, p.lo, left_spec.lam, left_spec.mu, left_spec.vector, left_spec.dual
        )
    return LaurentPoly(p.lo, coeffs, p.truncated)


# ---------------------------------------------------------------------------
# multishifts
# ---------------------------------------------------------------------------

def _multishift_residual(p, ms):
    from .spectra import invariant_pair_residual

    return invariant_pair_residual(p, ms.u, ms.lam)


def _single_spec_from(ms):
    return ShiftSpec(
        complex(ms.lam[0, 0]), complex(ms.s[0, 0]), ms.u[:, 0], ms.v[:, 0]
    )


def multishift_pencil(a, ms):
    """Move the eigenvalues of an invariant pair of A to those of S: A - U (Lambda - S) V*."""
    a = np.asarray(a, dtype=complex)
    res = np.linalg.norm(a @ ms.u - ms.u @ ms.lam) / max(
        np.linalg.norm(a) * np.linalg.norm(ms.u), FLOOR
    )
    if res > EIGENPAIR_TOL:
        raise NotInvariant(f"||A U - U Lambda|| residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    if ms.m == 1:
        return right_shift_pencil(a, _single_spec_from(ms))
    if np.array_equal(ms.s, ms.lam):
        return a.copy()
    return a - ms.u @ (ms.lam - ms.s) @ ms.v.conj().T


def multishift_poly(p, ms):
    """Packet shift for matrix polynomials; m = 1 reduces to the single right shift."""
    res = _multishift_residual(p, ms)
    if res > EIGENPAIR_TOL:
        raise NotInvariant(f"invariant-pair residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    if ms.m == 1:
        return right_shift_poly(p, _single_spec_from(ms))
    if np.array_equal(ms.s, ms.lam):
        return p
    return MatrixPoly(_multishift_coeffs(p.coeffs, 0, ms.u, ms.lam, ms.s, ms.v))


def multishift_laurent(p, ms):
    """Packet shift for matrix Laurent polynomials (Lambda nonsingular when lo < 0)."""
    if p.lo < 0:
        svals = np.linalg.svd(ms.lam, compute_uv=False)
        if svals[-1] <= 1e-14 * max(svals[0], FLOOR):
            raise SingularLambda("Lambda is singular; negative powers cannot be shifted")
    res = _multishift_residual(p, ms)
    if res > EIGENPAIR_TOL:
        raise NotInvariant(f"invariant-pair residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    if ms.m == 1:
        return right_shift_laurent(p, _single_spec_from(ms))
    if np.array_equal(ms.s, ms.lam):
        return p
    coeffs = _multishift_coeffs(p.coeffs, p.lo, ms.u, ms.lam, ms.s, ms.v)
    return LaurentPoly(p.lo, coeffs, p.truncated)


# ---------------------------------------------------------------------------
# shifts from and to infinity
# ---------------------------------------------------------------------------

def _dual_for(u, v):
    u = np.asarray(u, dtype=complex).reshape(-1)
    v = u if v is None else np.asarray(v, dtype=complex).reshape(-1)
    ip = np.vdot(u, v)
    if abs(ip) <= 1e-14 * np.linalg.norm(u) * np.linalg.norm(v):
        raise ValueError("dual vector is orthogonal to the shift vector")
    return u, v / ip


def shift_from_infinity(p, mu, u, v=None):
    """Replace one eigenvalue at infinity by finite mu != 0.

    Requires A_d u = 0.  Coefficients become A_i - mu^{-1} A_{i-1} Q with
    A_0 unchanged; all finite eigenvalues are preserved and the determinant
    gains the factor (1 - z/mu).
    """
    if not isinstance(p, MatrixPoly):
        raise DimensionMismatch("infinity shifts act on matrix polynomials")
    mu = complex(mu)
    if mu == 0:
        raise ZeroMu("target mu must be nonzero")
    if is_infinite(mu):
        raise ZeroMu("target mu must be finite")
    u, dual = _dual_for(u, v)
    res = kernel_residual(p.coeffs[-1], u)
    if res > EIGENPAIR_TOL:
        raise NotInKernel(f"||A_d u|| residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    vbar = dual.conj()
    inv_mu = 1.0 / mu
    out = [np.array(p.coeffs[0], dtype=complex)]
    for i in range(1, p.d + 1):
        out.append(p.coeffs[i] - inv_mu * np.outer(p.coeffs[i - 1] @ u, vbar))
    return MatrixPoly(out)


def shift_to_infinity(p, lam, u, v=None):
    """Send the finite eigenvalue lam != 0 to infinity.

    Coefficients become A_i + sum_{k=0}^{i-1} lam^{-k-1} A_{i-k-1} Q with A_0
    unchanged; the new leading coefficient annihilates u.
    """
    if not isinstance(p, MatrixPoly):
        raise DimensionMismatch("infinity shifts act on matrix polynomials")
    lam = complex(lam)
    if lam == 0:
        raise ZeroLambda("lambda must be nonzero")
    if is_infinite(lam):
        raise ZeroLambda("lambda must be finite")
    u, dual = _dual_for(u, v)
    res = right_residual(p, lam, u)
    if res > EIGENPAIR_TOL:
        raise NotAnEigenpair(f"eigenpair residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    vbar = dual.conj()
    inv_lam = 1.0 / lam
    out = [np.array(p.coeffs[0], dtype=complex)]
    g = np.zeros(p.n, dtype=complex)
    for i in range(1, p.d + 1):
        g = inv_lam * (p.coeffs[i - 1] @ u + g)
        out.append(p.coeffs[i] + np.outer(g, vbar))
    return MatrixPoly(out)


# ---------------------------------------------------------------------------
# palindromic double shift
# ---------------------------------------------------------------------------

def palindromic_shift(p, lam, mu, u):
    """Move the eigenvalue pair (lam, 1/conj(lam)) of a *-palindromic polynomial
    to (mu, 1/conj(mu)), preserving A_i = A_{d-i}^*.

    Uses Q = u u*/(u* u) on both sides; the output is explicitly
    re-symmetrized (averaging A_i with A_{d-i}^*) after the two-stage
    formulas, whose pre-symmetrization deviation is checked against
    1e-12 * scale.  lam = 0 (the pair (0, infinity)) uses the simplified
    closed form.
    """
    if not isinstance(p, MatrixPoly):
        raise DimensionMismatch("palindromic shift acts on matrix polynomials")
    d = p.d
    scale = max(sum(np.linalg.norm(c) for c in p.coeffs), FLOOR)
    dev = max(
        np.linalg.norm(p.coeffs[i] - p.coeffs[d - i].conj().T) for i in range(d + 1)
    )
    if dev > 1e-12 * scale:
        raise NotPalindromic(f"||A_i - A_(d-i)*|| deviation {dev:.2e} exceeds 1e-12*scale")
    lam = complex(lam)
    mu = complex(mu)
    res = right_residual(p, lam, u)
    if res > EIGENPAIR_TOL:
        raise NotAnEigenpair(f"eigenpair residual {res:.2e} exceeds {EIGENPAIR_TOL}")
    if mu == lam:
        return p
    if abs(lam * lam.conjugate() - 1.0) < 1e-8:
        warnings.warn(
            "lambda * conj(lambda) is close to 1: the shifted pair nearly coincides",
            stacklevel=2,
        )
    uh = unit_vector(u)
    ubar = uh.conj()

    if lam == 0:
        q = np.outer(uh, ubar)
        out = []
        for i in range(d + 1):
            nxt = p.coeffs[i + 1] if i + 1 <= d else np.zeros((p.n, p.n), dtype=complex)
            prv = p.coeffs[i - 1] if i - 1 >= 0 else np.zeros((p.n, p.n), dtype=complex)
            out.append(
                p.coeffs[i]
                - mu * nxt @ q
                - mu.conjugate() * q @ prv
                + (mu * mu.conjugate()) * q @ p.coeffs[i] @ q
            )
    else:
        ahat = _right_shift_coeffs(p.coeffs, 0, lam, mu, uh, uh)
        cl, cm = lam.conjugate(), mu.conjugate()
        out = [ahat[0]]
        t = np.zeros(p.n, dtype=complex)
        for i in range(1, d + 1):
            t = ubar @ ahat[i - 1] + cl * t
            out.append(ahat[i] + (cl - cm) * np.outer(uh, t))

    dev = max(np.linalg.norm(out[i] - out[d - i].conj().T) for i in range(d + 1))
    out_scale = max(sum(np.linalg.norm(c) for c in out), FLOOR)
    if dev > 1e-12 * out_scale:
        warnings.warn(
            f"pre-symmetrization palindromic deviation {dev:.2e} exceeds 1e-12*scale",
            stacklevel=2,
        )
    if dev > 1e-6 * out_scale:
        raise NotAnEigenpair(
            f"palindromic shift lost structure (deviation {dev:.2e}); eigenpair too inaccurate"
        )
    sym = [(out[i] + out[d - i].conj().T) / 2 for i in range(d + 1)]
    return MatrixPoly(sym)
