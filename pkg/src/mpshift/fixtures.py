"""Built-in worked examples: two small quadratics and a stochastic quartic.

``p1``  2x2 quadratic with eigenvalues {1/3, 1/2, 1, 1}; the double
        eigenvalue 1 (eigenvector e_1) is ill conditioned and is the standard
        target for a shift to 0.
``p2``  3x3 quadratic with a rank-1-deficient leading coefficient: two
        eigenvalues at infinity plus {+-i sqrt(3), +-i}; the target for
        shifts from infinity.
``p3``  5x5 quartic A(z) = z I - B(z) built from nonnegative B_i whose sum
        is row stochastic, so A(1) e = 0: the eigenvalue 1 sits on the unit
        circle and slows cyclic reduction until it is shifted away.
"""

import numpy as np

from .core import MatrixPoly
from .errors import UnknownFixture


def p1():
    a0 = -np.array([[1.0, 1.0], [0.0, 1.0]])
    a1 = np.array([[4.0, 3.0], [1.0, 4.0]])
    a2 = -np.array([[3.0, 0.0], [1.0, 2.0]])
    return MatrixPoly((a0, a1, a2))


def p2():
    a0 = np.array([[1.0, 0.0, -1.0], [1.0, 2.0, 0.0], [1.0, 1.0, 1.0]])
    a1 = np.array([[0.0, 1.0, 1.0], [0.0, 1.0, 1.0], [0.0, 1.0, 1.0]])
    a2 = np.diag([0.0, 1.0, 1.0])
    return MatrixPoly((a0, a1, a2))


def p3_b_coeffs():
    """The nonnegative B_0..B_4 with (sum_i B_i) e = e (exact row sums in rationals)."""
    n = 5
    d_inv = np.diag(1.0 / np.array([57.0, 49.0, 41.0, 33.0, 25.0]))
    e = np.ones((n, n))
    t = np.triu(np.ones((n, n)))
    b0 = 9.0 * d_inv @ t
    b1 = d_inv @ t.T
    b2 = d_inv @ e
    b3 = d_inv @ e
    b4 = d_inv.copy()
    return [b0, b1, b2, b3, b4]


def p3():
    b = p3_b_coeffs()
    eye = np.eye(5)
    coeffs = [-b[0], eye - b[1], -b[2], -b[3], -b[4]]
    return MatrixPoly(coeffs)


FIXTURES = {"p1": p1, "p2": p2, "p3": p3}


def fixture(name):
    try:
        return FIXTURES[name]()
    except KeyError:
        raise UnknownFixture(
            f"unknown fixture {name!r}; available: {', '.join(sorted(FIXTURES))}"
        ) from None
