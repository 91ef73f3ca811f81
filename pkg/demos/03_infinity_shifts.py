"""Deflating eigenvalues at infinity (and sending finite ones there).

A matrix polynomial with a singular leading coefficient has eigenvalues at
infinity, which degrade eigensolvers and iterations that need a nonsingular
lead.  The p2 fixture (3x3 quadratic) carries two of them.  Each shift
A_i <- A_i - mu^-1 A_{i-1} Q with a kernel vector u of A_d replaces one
infinite eigenvalue by mu.  Two shifts (to 1 and to 1/2) make det A_2 = 2.
"""

import numpy as np

from mpshift import polyeig, shift_from_infinity, shift_to_infinity
from mpshift.fixtures import p2


def show(title, poly):
    print(title)
    for q in polyeig(poly).pairs:
        tag = "Inf" if q.is_infinite else f"{q.value:.12f}"
        print(f"  {tag}")


poly = p2()
print(f"det A_2 = {np.linalg.det(poly.coeffs[2]).real}")
show("spectrum with a rank-1-deficient lead:", poly)

step1 = shift_from_infinity(poly, 1.0, [1, 0, 0])
show("\nafter one shift from infinity (mu = 1):", step1)

step2 = shift_from_infinity(step1, 0.5, [1, 0, 0])
print(f"\nafter the second shift (mu = 1/2): det A_2 = {np.linalg.det(step2.coeffs[2]).real}")
show("all six eigenvalues are now finite:", step2)

# the reverse direction: push the eigenvalue 1/2 back out to infinity
u = np.linalg.svd(
    step2.coeffs[0] + 0.5 * step2.coeffs[1] + 0.25 * step2.coeffs[2]
)[2][-1].conj()
back = shift_to_infinity(step2, 0.5, u)
show("\nand back: 1/2 sent to infinity again:", back)
