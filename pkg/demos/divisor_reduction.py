#!/usr/bin/env python3
"""Reduce a messy formal sum of points to its Mumford pair.

The reduction returns (delta, m, witness) with the exact identity
D = delta + m*Inf + div(witness); the last line re-verifies it through
the valuation machinery, point by point.
"""

from hyperroch import (
    Field,
    FormalDivisor,
    GeneralDivisor,
    HyperellipticCurve,
    reduce_divisor,
)
from hyperroch.polynomial import Polynomial

field = Field(7)
curve = HyperellipticCurve(field, Polynomial(field, [1, 0, 0, 0, 0, 1]))
points = curve.points()

divisor = GeneralDivisor(
    [(points[0], 2), (points[2], 1), (points[4], -1), (points[6], 1)],
    infinity=1)
print("input:", divisor.as_formal())
print("degree:", divisor.degree())

result = reduce_divisor(divisor, curve)
print("\nreduced pair:", result.delta)
print("m:", result.m)
print("witness:", result.witness)

witness_divisor = result.witness.divisor(max_extension=4)
ext = (next(iter(witness_divisor.points)).x.field
       if witness_divisor.points else field)
expected = (divisor.as_formal().map_field(ext)
            - result.delta.as_formal(max_extension=4).map_field(ext)
            - FormalDivisor({}, result.m))
print("\ndiv(witness) == D - delta - m*Inf ?",
      witness_divisor == expected)
