import pytest

from hyperroch import Field, HyperellipticCurve, AffinePoint
from hyperroch.polynomial import Polynomial


@pytest.fixture(scope="session")
def gf7():
    return Field(7)


@pytest.fixture(scope="session")
def gf101():
    return Field(101)


@pytest.fixture(scope="session")
def genus2_gf7(gf7):
    # y^2 = x^5 + 1, smooth, 7 affine points, one of them ramified
    return HyperellipticCurve(gf7, Polynomial(gf7, [1, 0, 0, 0, 0, 1]))


@pytest.fixture(scope="session")
def genus3_gf11():
    field = Field(11)
    # y^2 = x^7 + x^3 + 1, smooth, 16 affine points
    return HyperellipticCurve(field, Polynomial(field, [1, 0, 0, 1, 0, 0, 0, 1]))


@pytest.fixture(scope="session")
def code101(gf101):
    """The [10,5,6] reference code over GF(101): pair, points, and the
    known generator matrix (columns come in +/- pairs; the reference
    lists some pairs in the other order, so compare pairwise)."""
    u = Polynomial(gf101, [1] + [0] * 10 + [1])
    v = Polynomial(gf101, [1] + [0] * 5 + [1])
    base_points = [AffinePoint(gf101.element(x), gf101.element(y))
                   for x, y in [(15, 45), (53, 48), (80, 2), (58, 10), (64, 13)]]
    # eight auxiliary interpolation points with fresh x-coordinates, chosen
    # so the fitted equation comes out monic and smooth
    aux_points = [AffinePoint(gf101.element(x), gf101.element(y))
                  for x, y in [(1, 2), (2, 3), (3, 4), (4, 5),
                               (5, 6), (6, 7), (7, 8), (8, 42)]]
    reference_matrix = [
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
        [15, 15, 53, 53, 80, 80, 58, 58, 64, 64],
        [23, 23, 82, 82, 37, 37, 31, 31, 56, 56],
        [73, 41, 35, 92, 1, 45, 99, 71, 48, 21],
        [85, 9, 37, 28, 80, 65, 86, 78, 42, 31],
    ]
    return {
        "field": gf101,
        "u": u,
        "v": v,
        "g": 11,
        "k": 5,
        "base_points": base_points,
        "aux_points": aux_points,
        "reference_matrix": reference_matrix,
    }
