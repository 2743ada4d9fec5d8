"""Riemann-Roch space bases from Mumford representations on imaginary
hyperelliptic curves, and the Goppa codes they generate."""

from .curve import AffinePoint, HyperellipticCurve, solve_y_quadratic
from .divisor import (
    GeneralDivisor,
    MumfordDivisor,
    ReductionResult,
    cantor_reduction_step,
    compose,
    mumford_from_points,
    reduce_divisor,
    reduce_mumford,
)
from .finite_field import Field, FieldElement, embed, is_prime
from .function_field import (
    FormalDivisor,
    FunctionFieldElement,
    branch_series,
)
from .goppa import (
    EvaluationSet,
    GeneratorMatrix,
    encode,
    fit_curve,
    fit_curve_padded,
    generator_matrix,
    mds_check,
    min_distance_bruteforce,
    rs_coincidence_check,
    with_opposites,
)
from .polynomial import Polynomial, ext_gcd, gcd, interpolate, pow_mod
from .riemann_roch import (
    RRBasis,
    basis_generator,
    has_generic_dimension,
    membership_check,
    rr_basis,
    rr_dim,
)

__version__ = "0.1.0"

__all__ = [
    "AffinePoint",
    "EvaluationSet",
    "Field",
    "FieldElement",
    "FormalDivisor",
    "FunctionFieldElement",
    "GeneralDivisor",
    "GeneratorMatrix",
    "HyperellipticCurve",
    "MumfordDivisor",
    "Polynomial",
    "RRBasis",
    "ReductionResult",
    "basis_generator",
    "branch_series",
    "cantor_reduction_step",
    "compose",
    "embed",
    "encode",
    "ext_gcd",
    "fit_curve",
    "fit_curve_padded",
    "gcd",
    "generator_matrix",
    "has_generic_dimension",
    "interpolate",
    "is_prime",
    "mds_check",
    "membership_check",
    "min_distance_bruteforce",
    "mumford_from_points",
    "pow_mod",
    "reduce_divisor",
    "reduce_mumford",
    "rr_basis",
    "rr_dim",
    "rs_coincidence_check",
    "solve_y_quadratic",
    "with_opposites",
]
