import pytest

from hyperroch import AffinePoint, Field, HyperellipticCurve
from hyperroch.errors import (
    Char2NotNormalizableError,
    EvenDegreeError,
    FieldTooLargeError,
    MissingHInChar2Error,
    NonMonicError,
    PointNotOnCurveError,
    SingularCurveError,
)
from hyperroch.polynomial import Polynomial


def test_genus_and_validation(gf7, genus2_gf7):
    assert genus2_gf7.genus == 2
    assert genus2_gf7.degree == 5
    with pytest.raises(EvenDegreeError):
        HyperellipticCurve(gf7, Polynomial(gf7, [1, 0, 0, 0, 1]))
    with pytest.raises(NonMonicError):
        HyperellipticCurve(gf7, Polynomial(gf7, [1, 0, 0, 0, 0, 2]))
    with pytest.raises(SingularCurveError):
        # (x - 1)^2 (x - 2) has a repeated root
        x = Polynomial.x(gf7)
        HyperellipticCurve(gf7, (x - 1) ** 2 * (x - 2))


def test_char2_needs_h():
    f2 = Field(2)
    with pytest.raises(MissingHInChar2Error):
        HyperellipticCurve(f2, Polynomial(f2, [1, 1, 0, 0, 0, 1]))


def test_char2_smoothness():
    f2 = Field(2)
    x = Polynomial.x(f2)
    # y^2 + xy = x^5 + 1 is smooth
    curve = HyperellipticCurve(f2, x ** 5 + 1, x)
    assert curve.genus == 2
    # y^2 + xy = x^5 is singular at the origin
    with pytest.raises(SingularCurveError):
        HyperellipticCurve(f2, x ** 5, x)


def test_normalize():
    # note: over GF(5) the same equation would be singular, because
    # x^5 + 1 = (x + 1)^5 there; GF(13) keeps the arithmetic identical
    f13 = Field(13)
    x = Polynomial.x(f13)
    curve = HyperellipticCurve(f13, x ** 5, Polynomial(f13, [2]))
    flat = curve.normalized()
    assert not flat.h
    assert flat.f == x ** 5 + 1     # h^2/4 = 4/4 = 1
    plain = HyperellipticCurve(f13, x ** 5 + 1)
    assert plain.normalized() is plain
    f2 = Field(2)
    x2 = Polynomial.x(f2)
    with pytest.raises(Char2NotNormalizableError):
        HyperellipticCurve(f2, x2 ** 5 + 1, x2).normalized()


def test_normalize_preserves_points():
    f13 = Field(13)
    x = Polynomial.x(f13)
    curve = HyperellipticCurve(f13, x ** 5 + 2 * x + 1, x ** 2 + 3)
    flat = curve.normalized()
    half = f13.element(2).inverse()
    mapped = {AffinePoint(p.x, p.y + curve.h(p.x) * half) for p in curve.points()}
    assert mapped == set(flat.points())


def test_on_curve_and_opposite(genus2_gf7, gf7):
    p = AffinePoint(gf7.element(1), gf7.element(3))
    assert genus2_gf7.contains(p)
    assert not genus2_gf7.contains(AffinePoint(gf7.element(1), gf7.element(5)))
    assert genus2_gf7.opposite(p) == AffinePoint(gf7.element(1), gf7.element(4))
    w = AffinePoint(gf7.element(6), gf7.element(0))
    assert genus2_gf7.opposite(w) == w
    assert genus2_gf7.is_weierstrass(w)
    assert not genus2_gf7.is_weierstrass(p)
    with pytest.raises(PointNotOnCurveError):
        genus2_gf7.opposite(AffinePoint(gf7.element(1), gf7.element(5)))
    for point in genus2_gf7.points():
        assert genus2_gf7.opposite(genus2_gf7.opposite(point)) == point


def test_opposite_char2():
    f4 = Field(2, 2)
    x = Polynomial.x(f4)
    curve = HyperellipticCurve(f4, x ** 5 + 1, x)
    for point in curve.points():
        mate = curve.opposite(point)
        assert mate == AffinePoint(point.x, point.y + point.x)


def test_enumerate_points_against_scan(gf7, genus2_gf7):
    # oracle: brute-force scan of the full affine plane
    expected = {(x, y) for x in range(7) for y in range(7)
                if (y * y - (pow(x, 5, 7) + 1)) % 7 == 0}
    got = {(p.x.lift(), p.y.lift()) for p in genus2_gf7.points()}
    assert got == expected


def test_point_count_matches_character_sum():
    # for y^2 = f(x) over odd GF(p) the affine count is
    # sum_x (1 + chi(f(x))) with chi the quadratic character
    for p, coeffs in [(3, [1, 1, 0, 1]), (7, [1, 0, 0, 0, 0, 1]),
                      (11, [1, 0, 0, 1, 0, 0, 0, 1])]:
        field = Field(p)
        curve = HyperellipticCurve(field, Polynomial(field, coeffs))
        def chi(v):
            if v % p == 0:
                return 0
            return 1 if pow(v, (p - 1) // 2, p) == 1 else -1
        f_int = lambda x: sum(c.lift() * x ** i for i, c in enumerate(curve.f.coeffs))
        expected = sum(1 + chi(f_int(x)) for x in range(p))
        assert len(curve.points()) == expected


def test_points_above_nonresidue_is_empty(gf7, genus2_gf7):
    # f(4) = 4^5 + 1 = 2 + 1 = 3, a non-residue mod 7
    assert pow(3, 3, 7) != 1
    assert genus2_gf7.points_above(gf7.element(4)) == []


def test_field_too_large_guard():
    field = Field(10007)
    curve = HyperellipticCurve(field, Polynomial(field, [1, 1, 0, 1]))
    with pytest.raises(FieldTooLargeError):
        curve.points()


def test_base_change(genus2_gf7):
    ext = Field(7, 2)
    lifted = genus2_gf7.map_field(ext)
    assert lifted.genus == 2 and lifted.field == ext
    # rational points remain on the lifted curve
    for point in genus2_gf7.points():
        assert lifted.contains(AffinePoint(ext.element(point.x.lift()),
                                           ext.element(point.y.lift())))
