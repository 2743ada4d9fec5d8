#!/usr/bin/env python3
"""Build the [10,5,6] MDS code over GF(101) from a Mumford pair.

The whole construction needs nothing but the pair (u, v) = (x^11 + 1,
x^6 + 1) and ten evaluation points: the matrix rows are the functions
1, x, x^2, G, x*G with G = (y + v)/u, evaluated columnwise.  A degree-23
genus-11 curve realizing the code is fitted afterwards, purely as a
certificate; the encoder never touches it.
"""

from hyperroch import (
    AffinePoint,
    Field,
    MumfordDivisor,
    encode,
    fit_curve_padded,
    generator_matrix,
    mds_check,
    with_opposites,
)
from hyperroch.polynomial import Polynomial

field = Field(101)
u = Polynomial(field, [1] + [0] * 10 + [1])   # x^11 + 1
v = Polynomial(field, [1] + [0] * 5 + [1])    # x^6 + 1

base_points = [AffinePoint(field.element(x), field.element(y))
               for x, y in [(15, 45), (53, 48), (80, 2), (58, 10), (64, 13)]]
code_points = with_opposites(base_points)     # each point plus its opposite

matrix = generator_matrix(u, v, None, g=11, k=5, points=code_points)
print(f"generator matrix, [{matrix.n},{matrix.k}] over {field}:")
for row in matrix.as_lists():
    print("  ", row)

print("\nMDS?", mds_check(matrix),
      f"-> minimum distance {matrix.n - matrix.k + 1}")

word = encode(matrix, [1, 1, 0, 0, 0])
print("encode (1,1,0,0,0):", [w.lift() for w in word])

curve, aux = fit_curve_padded(u, v, None, 11, base_points)
print(f"\nfitted certificate curve: genus {curve.genus}, "
      f"degree {curve.f.degree}")
print("auxiliary interpolation points:",
      [(p.x.lift(), p.y.lift()) for p in aux])
delta = MumfordDivisor(curve, u, v)
print("pair weight on the fitted curve:", delta.weight)
