#!/usr/bin/env python3
"""Walk the filtration L(Delta + m*Inf) on a small genus-2 curve.

Shows how the basis grows with m: powers of x enter every other step,
and the generator (y + v)/u joins exactly at m = d - t, after which its
multiples fill the odd pole orders.
"""

from hyperroch import (
    Field,
    HyperellipticCurve,
    membership_check,
    mumford_from_points,
    basis_generator,
    rr_basis,
    rr_dim,
)
from hyperroch.polynomial import Polynomial

field = Field(7)
curve = HyperellipticCurve(field, Polynomial(field, [1, 0, 0, 0, 0, 1]))
print(curve)

points = curve.points()
print("rational points:", [(p.x.lift(), p.y.lift()) for p in points])

delta = mumford_from_points(curve, [(points[0], 1), (points[2], 1)])
t, g, d = delta.weight, curve.genus, curve.degree
print(f"\ndivisor {delta}  (weight t = {t})")

for m in range(1, 10):
    basis = rr_basis(delta, m)
    dim = rr_dim(t, m, g)
    marker = " <- generator enters" if m == d - t else ""
    print(f"m = {m}: dim {dim}, basis {[repr(b) for b in basis.elements]}"
          f"{marker}")

gen = basis_generator(delta)
print(f"\ngenerator G = {gen!r}")
print("pole order of G at infinity:", -gen.valuation_at_infinity())
print("G in L(Delta + 2*Inf)?", membership_check(gen, delta, 2))
print("G in L(Delta + 3*Inf)?", membership_check(gen, delta, 3))
print("\ndivisor of G (over the splitting field):")
print("  ", gen.divisor(max_extension=4))
