"""Core data types and operations for matrix polynomials and Laurent polynomials.

A matrix polynomial is A(z) = sum_{i=0}^d z^i A_i with square complex
coefficients; a matrix Laurent polynomial is A(z) = sum_{i=lo}^{hi} z^i A_i
with lo <= 0 <= hi.  This module provides the containers, evaluation,
determinants, serialization, and the determinant-ratio oracle used to
validate every eigenvalue shift in the package.

All arithmetic is complex double precision; real inputs are promoted on
construction.  Containers are immutable after construction and all
operations are pure functions, so concurrent use is safe.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegeneratePolynomial,
    DimensionMismatch,
    ParseError,
    ZeroAtNegativePower,
)

# Absolute floor protecting relative tolerances from division by zero.
FLOOR = 1e-300


def _freeze(arr):
    arr = np.array(arr, dtype=complex)
    arr.setflags(write=False)
    return arr


def _square_coeffs(coeffs):
    """Coerce a coefficient sequence to immutable complex square arrays."""
    if len(coeffs) == 0:
        raise DimensionMismatch("at least one coefficient is required")
    out = []
    n = None
    for k, c in enumerate(coeffs):
        m = np.asarray(c, dtype=complex)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise DimensionMismatch(f"coefficient {k} is not square: shape {m.shape}")
        if n is None:
            n = m.shape[0]
        elif m.shape[0] != n:
            raise DimensionMismatch(
                f"coefficient {k} has size {m.shape[0]}, expected {n}"
            )
        if not (np.all(np.isfinite(m.real)) and np.all(np.isfinite(m.imag))):
            raise ValueError(f"coefficient {k} contains non-finite entries")
        out.append(_freeze(m))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class MatrixPoly:
    """Matrix polynomial A(z) = sum_{i=0}^d z^i coeffs[i]."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _square_coeffs(self.coeffs))

    @property
    def n(self):
        return self.coeffs[0].shape[0]

    @property
    def d(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        """Coefficient of z^i; zero matrix outside the stored range."""
        if 0 <= i <= self.d:
            return self.coeffs[i]
        return np.zeros((self.n, self.n), dtype=complex)

    def to_laurent(self, truncated=False):
        return LaurentPoly(0, self.coeffs, truncated)


@dataclass(frozen=True, eq=False)
class LaurentPoly:
    """Matrix Laurent polynomial A(z) = sum_{i=lo}^{hi} z^i A_i, lo <= 0 <= hi.

    ``coeffs[k]`` is the coefficient of z^{lo+k}.  The ``truncated`` flag
    records that the instance stands for a truncated Laurent series; the
    truncation itself is the caller's responsibility.
    """

    lo: int
    coeffs: tuple
    truncated: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _square_coeffs(self.coeffs))
        if self.lo > 0:
            raise DimensionMismatch(f"lo must be <= 0, got {self.lo}")
        if self.hi < 0:
            raise DimensionMismatch(f"hi must be >= 0, got {self.hi}")

    @property
    def n(self):
        return self.coeffs[0].shape[0]

    @property
    def hi(self):
        return self.lo + len(self.coeffs) - 1

    def coeff(self, power):
        """Coefficient of z^power; zero matrix outside the stored range."""
        if self.lo <= power <= self.hi:
            return self.coeffs[power - self.lo]
        return np.zeros((self.n, self.n), dtype=complex)

    def to_matrix_poly(self):
        if self.lo != 0:
            raise DimensionMismatch("only lo == 0 converts to a matrix polynomial")
        return MatrixPoly(self.coeffs)


INF = complex(math.inf, 0.0)


def is_infinite(value):
    return not cmath.isfinite(complex(value))


@dataclass(frozen=True, eq=False)
class EigenPair:
    """Eigenvalue with right (and optionally left) vector and residual.

    ``value`` may be the point at infinity (any non-finite complex).  The
    right vector has unit 2-norm with its first significant entry real
    positive.  ``residual`` is ||A(value) right|| / scale for finite values
    and ||A_d right|| / ||A_d||_F for infinite ones.  ``borderline`` marks
    finite/infinite classifications that were decided near the threshold.
    """

    value: complex
    right: np.ndarray
    left: np.ndarray = None
    residual: float = 0.0
    borderline: bool = False

    def __post_init__(self):
        object.__setattr__(self, "right", _freeze(self.right).reshape(-1))
        if self.left is not None:
            object.__setattr__(self, "left", _freeze(self.left).reshape(-1))

    @property
    def is_infinite(self):
        return is_infinite(self.value)


def unit_vector(v):
    """Normalize to unit 2-norm with the first significant entry real positive."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    nrm = np.linalg.norm(v)
    if nrm == 0:
        raise ValueError("cannot normalize the zero vector")
    v = v / nrm
    k = int(np.argmax(np.abs(v) > 1e-12))
    phase = v[k] / abs(v[k])
    return v * phase.conjugate()


def evaluate(p, z):
    """Evaluate A(z) by Horner's scheme.

    Laurent polynomials are evaluated as z^lo times a Horner sweep over the
    ascending-power coefficients, so z = 0 is rejected when lo < 0.
    """
    z = complex(z)
    lo = 0 if isinstance(p, MatrixPoly) else p.lo
    if z == 0 and lo < 0:
        raise ZeroAtNegativePower("cannot evaluate at z = 0 with negative powers")
    coeffs = p.coeffs
    acc = np.array(coeffs[-1], dtype=complex)
    for c in reversed(coeffs[:-1]):
        acc = acc * z + c
    if lo != 0:
        acc = acc * z**lo
    return acc


def derivative_at(p, z):
    """Evaluate A'(z) = sum_i i z^{i-1} A_i directly."""
    z = complex(z)
    lo = 0 if isinstance(p, MatrixPoly) else p.lo
    if z == 0 and lo < 0:
        raise ZeroAtNegativePower("cannot differentiate at z = 0 with negative powers")
    acc = np.zeros((p.n, p.n), dtype=complex)
    for k, c in enumerate(p.coeffs):
        i = lo + k
        if i != 0:
            acc = acc + i * z ** (i - 1) * c
    return acc


def det_at(p, z):
    """Determinant of A(z), via the pivoted-LU determinant of the evaluation."""
    return complex(np.linalg.det(evaluate(p, z)))


def reverse(p):
    """Reverse polynomial z^d A(1/z); eigenvalues become reciprocals (1/0 = inf)."""
    if not isinstance(p, MatrixPoly):
        raise DimensionMismatch("reverse is defined for matrix polynomials")
    return MatrixPoly(tuple(reversed(p.coeffs)))


def coeff_scale(p, radius):
    """sum_i ||A_i||_F radius^i, the natural scale for residuals at |z| = radius."""
    radius = float(radius)
    lo = 0 if isinstance(p, MatrixPoly) else p.lo
    if radius == 0.0 and lo < 0:
        raise ZeroAtNegativePower("scale undefined at radius 0 with negative powers")
    return float(
        sum(np.linalg.norm(c) * radius ** (lo + k) for k, c in enumerate(p.coeffs))
    )


def right_residual(p, lam, u):
    """Relative residual ||A(lam) u|| / (||u|| * scale); leading-coefficient form at infinity."""
    u = np.asarray(u, dtype=complex).reshape(-1)
    nu = np.linalg.norm(u)
    if nu == 0:
        return math.inf
    if is_infinite(lam):
        lead = p.coeffs[-1]
        return kernel_residual(lead, u)
    scale = max(coeff_scale(p, abs(complex(lam))), FLOOR)
    return float(np.linalg.norm(evaluate(p, lam) @ u) / (nu * scale))


def left_residual(p, lam, v):
    """Relative residual ||v* A(lam)|| / (||v|| * scale)."""
    v = np.asarray(v, dtype=complex).reshape(-1)
    nv = np.linalg.norm(v)
    if nv == 0:
        return math.inf
    if is_infinite(lam):
        lead = p.coeffs[-1]
        return float(np.linalg.norm(v.conj() @ lead) / (nv * max(np.linalg.norm(lead), FLOOR)))
    scale = max(coeff_scale(p, abs(complex(lam))), FLOOR)
    return float(np.linalg.norm(v.conj() @ evaluate(p, lam)) / (nv * scale))


def kernel_residual(a, u):
    """||A u|| / (||A||_F ||u||), the kernel-membership residual."""
    a = np.asarray(a, dtype=complex)
    u = np.asarray(u, dtype=complex).reshape(-1)
    return float(
        np.linalg.norm(a @ u) / (max(np.linalg.norm(a), FLOOR) * np.linalg.norm(u))
    )


# ---------------------------------------------------------------------------
# determinant-ratio oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OracleReport:
    """Outcome of a determinant-ratio check."""

    passed: bool
    max_rel_err: float
    samples: int
    constant: complex
    tol: float

    def __str__(self):
        verdict = "PASS" if self.passed else "FAIL"
        return (
            f"{verdict} (max rel err {self.max_rel_err:.3e} over "
            f"{self.samples} samples, tol {self.tol:.1e})"
        )


def det_ratio_oracle(
    a,
    a_tilde,
    removed=(),
    added=(),
    samples=16,
    seed=0,
    radii=(0.7, 1.3),
    fit_constant=False,
    tol=1e-8,
):
    """Check det a_tilde(z) * prod(z - removed) == C * det a(z) * prod(z - added).

    Sample points are drawn uniformly on circles of the given radii
    (straddling the unit circle), rejecting points within 1e-3 of any removed
    or added value.  With ``fit_constant`` the constant C is fitted at the
    best-conditioned sample and verified at the rest; otherwise C = 1.  The
    determinants come from pivoted LU on the evaluated matrices, so the check
    is independent of any shift formula.

    Returns an :class:`OracleReport`; ``passed`` means the maximum relative
    error over all samples is at most ``tol``.
    """
    if a.n != a_tilde.n:
        raise DimensionMismatch("operands have different dimensions")
    removed = [complex(w) for w in removed]
    added = [complex(w) for w in added]
    for w in removed + added:
        if is_infinite(w):
            raise ValueError("oracle factors must be finite; handle infinity via fit_constant")
    avoid = np.array(removed + added, dtype=complex)

    rng = np.random.default_rng(seed)
    pts = []
    attempts = 0
    while len(pts) < samples:
        attempts += 1
        if attempts > 200 * samples:
            raise RuntimeError("could not place oracle samples away from shift values")
        r = radii[len(pts) % len(radii)]
        z = r * cmath.exp(2j * math.pi * rng.random())
        if avoid.size and np.min(np.abs(z - avoid)) < 1e-3:
            continue
        pts.append(z)

    n = a.n
    lhs = np.empty(samples, dtype=complex)
    rhs = np.empty(samples, dtype=complex)
    degenerate = True
    for j, z in enumerate(pts):
        ma = evaluate(a, z)
        da = complex(np.linalg.det(ma))
        dt = det_at(a_tilde, z)
        if abs(da) > 1e-12 * max(np.linalg.norm(ma), FLOOR) ** n:
            degenerate = False
        lhs[j] = dt * np.prod([z - w for w in removed]) if removed else dt
        rhs[j] = da * np.prod([z - w for w in added]) if added else da
    if degenerate:
        raise DegeneratePolynomial("det a(z) vanishes at every sample point")

    if fit_constant:
        k = int(np.argmax(np.abs(rhs)))
        if abs(rhs[k]) <= FLOOR:
            raise DegeneratePolynomial("no sample with usable determinant magnitude")
        constant = lhs[k] / rhs[k]
    else:
        constant = 1.0 + 0.0j

    scaled = constant * rhs
    errs = np.abs(lhs - scaled) / np.maximum(np.abs(scaled), FLOOR)
    max_err = float(np.max(errs))
    return OracleReport(max_err <= tol, max_err, samples, complex(constant), tol)


# ---------------------------------------------------------------------------
# serialization (.mp.json)
# ---------------------------------------------------------------------------

def write_poly(p, path):
    """Write a polynomial to the ``.mp.json`` format (bit-exact round trip)."""
    lo = 0 if isinstance(p, MatrixPoly) else p.lo
    coeffs = []
    for c in p.coeffs:
        c = np.asarray(c)
        coeffs.append([[[float(x.real), float(x.imag)] for x in row] for row in c])
    payload = {"n": p.n, "lo": lo, "coeffs": coeffs}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=1)
        fh.write("\n")


def _entry(value, where):
    if (
        not isinstance(value, (list, tuple))
        or len(value) != 2
        or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in value)
    ):
        raise ParseError(f"{where}: expected a [re, im] pair, got {value!r}")
    return complex(value[0], value[1])


def read_poly(path):
    """Read a ``.mp.json`` file; returns MatrixPoly when lo == 0, else LaurentPoly."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(payload, dict):
        raise ParseError("top-level value must be an object")
    for key in ("n", "lo", "coeffs"):
        if key not in payload:
            raise ParseError(f"missing field {key!r}")
    n, lo, raw = payload["n"], payload["lo"], payload["coeffs"]
    if not isinstance(n, int) or n < 1:
        raise ParseError(f"field 'n': expected a positive integer, got {n!r}")
    if not isinstance(lo, int):
        raise ParseError(f"field 'lo': expected an integer, got {lo!r}")
    if not isinstance(raw, list) or not raw:
        raise ParseError("field 'coeffs': expected a non-empty array")
    if lo > 0 or lo + len(raw) - 1 < 0:
        raise ParseError(
            f"coefficient range [{lo}, {lo + len(raw) - 1}] must contain power 0"
        )

    coeffs = []
    for k, mat in enumerate(raw):
        if not isinstance(mat, list):
            raise ParseError(f"coeffs[{k}]: expected an array of rows")
        widths = {len(row) if isinstance(row, list) else -1 for row in mat}
        if len(widths) > 1 or -1 in widths:
            raise ParseError(f"coeffs[{k}]: ragged or malformed rows")
        if len(mat) != n or (mat and len(mat[0]) != n):
            raise DimensionMismatch(
                f"coeffs[{k}]: shape {len(mat)}x{len(mat[0]) if mat else 0}, expected {n}x{n}"
            )
        coeffs.append(
            [
                [_entry(v, f"coeffs[{k}][{i}][{j}]") for j, v in enumerate(row)]
                for i, row in enumerate(mat)
            ]
        )
    if lo == 0:
        return MatrixPoly(tuple(coeffs))
    return LaurentPoly(lo, tuple(coeffs))
