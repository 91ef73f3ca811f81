"""Eigenvalue shifts, canonical factorizations, and accelerated solvers for
matrix polynomials and matrix Laurent series."""

from .core import (
    EigenPair,
    LaurentPoly,
    MatrixPoly,
    OracleReport,
    coeff_scale,
    det_at,
    det_ratio_oracle,
    evaluate,
    is_infinite,
    read_poly,
    reverse,
    unit_vector,
    write_poly,
)
from .equations import (
    ReblockedQuadratic,
    SolveReport,
    convergence_ratio,
    equation_residual,
    reblock,
    shift_accelerated_solve,
    solve_unilateral,
)
from .factorizations import (
    CanonicalFactors,
    PolyFactorization,
    QuadFactorization,
    ReversedFactorization,
    cr_quadratic,
    double_shift_factorization,
    inverse_coefficients,
    poly_factorization,
    reversed_factorization,
    shifted_factorization_both,
    shifted_factorization_right,
)
from .fixtures import fixture
from .shifts import (
    MultiShiftSpec,
    ShiftSpec,
    double_shift_laurent,
    left_shift_laurent,
    left_shift_poly,
    multishift_laurent,
    multishift_pencil,
    multishift_poly,
    palindromic_shift,
    right_shift_laurent,
    right_shift_pencil,
    right_shift_poly,
    shift_from_infinity,
    shift_to_infinity,
)
from .spectra import (
    CompanionPencil,
    InvariantPair,
    Spectrum,
    companion_pencil,
    invariant_pair,
    polyeig,
    refine_pair,
    spectral_radius,
)

__version__ = "0.1.0"

__all__ = [
    "CanonicalFactors",
    "CompanionPencil",
    "EigenPair",
    "InvariantPair",
    "LaurentPoly",
    "MatrixPoly",
    "MultiShiftSpec",
    "OracleReport",
    "PolyFactorization",
    "QuadFactorization",
    "ReblockedQuadratic",
    "ReversedFactorization",
    "ShiftSpec",
    "SolveReport",
    "Spectrum",
    "coeff_scale",
    "companion_pencil",
    "convergence_ratio",
    "cr_quadratic",
    "det_at",
    "det_ratio_oracle",
    "double_shift_factorization",
    "double_shift_laurent",
    "equation_residual",
    "evaluate",
    "fixture",
    "invariant_pair",
    "inverse_coefficients",
    "is_infinite",
    "left_shift_laurent",
    "left_shift_poly",
    "multishift_laurent",
    "multishift_pencil",
    "multishift_poly",
    "palindromic_shift",
    "poly_factorization",
    "polyeig",
    "read_poly",
    "reblock",
    "refine_pair",
    "reverse",
    "reversed_factorization",
    "right_shift_laurent",
    "right_shift_pencil",
    "right_shift_poly",
    "shift_accelerated_solve",
    "shift_from_infinity",
    "shift_to_infinity",
    "shifted_factorization_both",
    "shifted_factorization_right",
    "solve_unilateral",
    "spectral_radius",
    "unit_vector",
    "write_poly",
]
