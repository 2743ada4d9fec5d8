"""Elements (a(x) + b(x)*y)/c(x) of the function field of a curve.

Every function on the curve has this shape because y satisfies the quadratic
relation y^2 = f - y*h.  Elements are kept in a canonical form (monic
denominator, gcd(gcd(a, b), c) = 1), which makes equality structural and
zero-testing trivial.

The module also computes valuations: at the point at infinity by a degree
formula that is exact because deg f is odd, at affine points either through
a truncated power-series branch expansion (ordinary points) or through the
norm (ramification points).  :meth:`FunctionFieldElement.divisor` assembles
the full principal divisor whenever the support splits over the working
field or a small extension.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field as dataclass_field

from .curve import AffinePoint, HyperellipticCurve, embed_point
from .errors import (
    FieldMismatchError,
    NonSplitSupportError,
    PointNotOnCurveError,
    ZeroFunctionError,
)
from .finite_field import Field
from .polynomial import Polynomial, gcd, roots_with_multiplicity

SPLIT_SCAN_LIMIT = 2 * 10 ** 5


def series_inverse(series: Polynomial, order: int) -> Polynomial:
    """Inverse of a unit power series, modulo x^order (Newton iteration)."""
    const = series[0]
    if not const:
        raise ZeroDivisionError("series has no inverse: zero constant term")
    result = Polynomial.constant(const.inverse())
    precision = 1
    while precision < order:
        precision = min(2 * precision, order)
        correction = (2 - series.truncated(precision) * result)
        result = (result * correction).truncated(precision)
    return result


def branch_series(curve: HyperellipticCurve, point: AffinePoint,
                  order: int) -> Polynomial:
    """Expansion of y along the curve branch through an ordinary point.

    Returns the truncated series y(t) with x = x0 + t and y(0) = y0, solving
    y^2 + y*h(x0+t) = f(x0+t) by Newton iteration.  The point must not be a
    ramification point (there 2*y0 + h(x0) = 0 and the branch is not a
    function of x).
    """
    # compute at power-of-two depth so repeated valuations at one point
    # share the cache
    rounded = 1
    while rounded < order:
        rounded *= 2
    return _branch_series_cached(curve, point, rounded).truncated(order)


@functools.lru_cache(maxsize=4096)
def _branch_series_cached(curve: HyperellipticCurve, point: AffinePoint,
                          order: int) -> Polynomial:
    x0 = point.x
    f_local = curve.f.shifted(x0).truncated(order)
    h_local = curve.h.shifted(x0).truncated(order)
    y = Polynomial.constant(point.y)
    tangent = curve.field.element(2) * point.y + curve.h(x0)
    if not tangent:
        raise PointNotOnCurveError(
            f"{point} is a ramification point; no branch series in x")
    precision = 1
    while precision < order:
        precision = min(2 * precision, order)
        value = (y * y + y * h_local - f_local).truncated(precision)
        slope = (y + y + h_local).truncated(precision)
        y = (y - value * series_inverse(slope, precision)).truncated(precision)
    return y.truncated(order)


def _root_multiplicity(poly: Polynomial, x0) -> int:
    if not poly:
        raise ZeroFunctionError("multiplicity in the zero polynomial")
    linear = Polynomial(poly.field, (-x0, 1))
    count = 0
    while True:
        q, r = divmod(poly, linear)
        if r:
            return count
        poly = q
        count += 1


@dataclass
class FormalDivisor:
    """A finite formal sum of affine points plus a multiple of infinity."""

    points: dict[AffinePoint, int] = dataclass_field(default_factory=dict)
    infinity: int = 0

    def __post_init__(self):
        self.points = {p: m for p, m in self.points.items() if m}

    def degree(self) -> int:
        return sum(self.points.values()) + self.infinity

    def is_effective(self) -> bool:
        return self.infinity >= 0 and all(m >= 0 for m in self.points.values())

    def coefficient(self, point: AffinePoint) -> int:
        return self.points.get(point, 0)

    def __add__(self, other: "FormalDivisor") -> "FormalDivisor":
        merged = dict(self.points)
        for p, m in other.points.items():
            merged[p] = merged.get(p, 0) + m
        return FormalDivisor(merged, self.infinity + other.infinity)

    def __neg__(self) -> "FormalDivisor":
        return FormalDivisor({p: -m for p, m in self.points.items()}, -self.infinity)

    def __sub__(self, other: "FormalDivisor") -> "FormalDivisor":
        return self + (-other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, FormalDivisor)
                and self.points == other.points
                and self.infinity == other.infinity)

    def map_field(self, target: Field) -> "FormalDivisor":
        return FormalDivisor(
            {embed_point(p, target): m for p, m in self.points.items()},
            self.infinity)

    def __repr__(self) -> str:
        parts = [f"{m}*{p!r}" for p, m in sorted(
            self.points.items(), key=lambda kv: (kv[0].x.as_int(), kv[0].y.as_int()))]
        parts.append(f"{self.infinity}*Inf")
        return " + ".join(parts)


class FunctionFieldElement:
    """A function (a(x) + b(x)*y) / c(x) on a fixed hyperelliptic curve."""

    __slots__ = ("curve", "a", "b", "den")

    def __init__(self, curve: HyperellipticCurve, a: Polynomial,
                 b: Polynomial | None = None, den: Polynomial | None = None):
        field = curve.field
        if b is None:
            b = Polynomial.zero(field)
        if den is None:
            den = Polynomial.one(field)
        if a.field != field or b.field != field or den.field != field:
            raise FieldMismatchError("function parts over a different field")
        if not den:
            raise ZeroDivisionError("zero denominator")
        common = gcd(gcd(a, b), den)
        if common.degree > 0:
            a, b, den = a // common, b // common, den // common
        lead = den.leading_coefficient()
        if lead != field.one():
            inv = lead.inverse()
            a, b, den = a.scale(inv), b.scale(inv), den.scale(inv)
        self.curve = curve
        self.a = a
        self.b = b
        self.den = den

    # -- constructors --------------------------------------------------------

    @classmethod
    def from_polynomial(cls, curve: HyperellipticCurve,
                        poly: Polynomial) -> "FunctionFieldElement":
        return cls(curve, poly)

    @classmethod
    def x(cls, curve: HyperellipticCurve) -> "FunctionFieldElement":
        return cls(curve, Polynomial.x(curve.field))

    @classmethod
    def y(cls, curve: HyperellipticCurve) -> "FunctionFieldElement":
        return cls(curve, Polynomial.zero(curve.field),
                   Polynomial.one(curve.field))

    @classmethod
    def one(cls, curve: HyperellipticCurve) -> "FunctionFieldElement":
        return cls(curve, Polynomial.one(curve.field))

    @classmethod
    def constant(cls, curve: HyperellipticCurve, value) -> "FunctionFieldElement":
        return cls(curve, Polynomial(curve.field, (value,)))

    # -- structure -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FunctionFieldElement):
            return NotImplemented
        return (self.curve == other.curve and self.a == other.a
                and self.b == other.b and self.den == other.den)

    def __hash__(self) -> int:
        return hash((self.curve, self.a, self.b, self.den))

    def _check(self, other: "FunctionFieldElement") -> None:
        if self.curve != other.curve:
            raise FieldMismatchError("functions on different curves")

    # -- field arithmetic ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = FunctionFieldElement.constant(self.curve, other)
        elif isinstance(other, Polynomial):
            other = FunctionFieldElement.from_polynomial(self.curve, other)
        if not isinstance(other, FunctionFieldElement):
            return NotImplemented
        self._check(other)
        return FunctionFieldElement(
            self.curve,
            self.a * other.den + other.a * self.den,
            self.b * other.den + other.b * self.den,
            self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return FunctionFieldElement(self.curve, -self.a, -self.b, self.den)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = FunctionFieldElement.constant(self.curve, other)
        elif isinstance(other, Polynomial):
            other = FunctionFieldElement.from_polynomial(self.curve, other)
        if not isinstance(other, FunctionFieldElement):
            return NotImplemented
        self._check(other)
        # (a1 + b1 y)(a2 + b2 y) with y^2 = f - y h
        bb = self.b * other.b
        return FunctionFieldElement(
            self.curve,
            self.a * other.a + bb * self.curve.f,
            self.a * other.b + self.b * other.a - bb * self.curve.h,
            self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "FunctionFieldElement":
        if not self:
            raise ZeroDivisionError("inverse of the zero function")
        # 1/F = conj(F) / norm(F); the norm is y-free
        return FunctionFieldElement(
            self.curve,
            (self.a - self.b * self.curve.h) * self.den,
            -self.b * self.den,
            self._norm_numerator())

    def __truediv__(self, other):
        if isinstance(other, (int, Polynomial)):
            other = self.__class__.constant(self.curve, other) \
                if isinstance(other, int) \
                else self.__class__.from_polynomial(self.curve, other)
        if not isinstance(other, FunctionFieldElement):
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, n: int) -> "FunctionFieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = FunctionFieldElement.one(self.curve)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "FunctionFieldElement":
        """Image under the hyperelliptic involution y -> -y - h(x)."""
        return FunctionFieldElement(
            self.curve, self.a - self.b * self.curve.h, -self.b, self.den)

    def _norm_numerator(self) -> Polynomial:
        """Numerator of F * conj(F) over den^2, before cancellation."""
        return (self.a * self.a - self.a * self.b * self.curve.h
                - self.b * self.b * self.curve.f)

    def norm(self) -> tuple[Polynomial, Polynomial]:
        """F * conj(F) as a reduced rational function (num, den) in x alone."""
        num = self._norm_numerator()
        den = self.den * self.den
        if num:
            common = gcd(num, den)
            if common.degree > 0:
                num, den = num // common, den // common
        lead = den.leading_coefficient()
        if lead != self.curve.field.one():
            num, den = num.scale(lead.inverse()), den.monic()
        return num, den

    # -- evaluation ----------------------------------------------------------

    def evaluate(self, point: AffinePoint):
        den_val = self.den(point.x)
        if not den_val:
            raise ZeroDivisionError(f"pole at {point}")
        return (self.a(point.x) + self.b(point.x) * point.y) / den_val

    # -- valuations ----------------------------------------------------------

    def valuation_at_infinity(self) -> int:
        """Order of vanishing at the point at infinity.

        v(x) = -2 and v(y) = -(2g+1) there, so a pure x-part contributes an
        even order and the y-part an odd one; the two never tie and the
        formula below is exact.
        """
        if not self:
            raise ZeroFunctionError("valuation of the zero function")
        d = self.curve.degree
        pole = max(
            2 * self.a.degree if self.a else float("-inf"),
            2 * self.b.degree + d if self.b else float("-inf"),
        )
        return int(2 * self.den.degree - pole)

    def valuation(self, point: AffinePoint) -> int:
        """Order of vanishing at an affine point (negative at poles)."""
        if not self:
            raise ZeroFunctionError("valuation of the zero function")
        if not self.curve.contains(point):
            raise PointNotOnCurveError(f"{point} is not on the curve")
        x0 = point.x
        den_order = _root_multiplicity(self.den, x0) if self.den.degree > 0 else 0
        if self.curve.is_weierstrass(point):
            # v(x - x0) = 2 at a ramification point and v(F) = v(conj F),
            # so 2 v(F) = v(norm) and the norm is a function of x alone.
            return _root_multiplicity(self._norm_numerator(), x0) - 2 * den_order
        depth = 2 * max(
            (int(p.degree) for p in
             (self.a, self.b, self.den, self.curve.f, self.curve.h) if p),
            default=0) + 2
        while True:
            branch = branch_series(self.curve, point, depth)
            series = (self.a.shifted(x0).truncated(depth)
                      + (self.b.shifted(x0) * branch).truncated(depth))
            for i, coef in enumerate(series.coeffs):
                if coef:
                    return i - den_order
            # the numerator series cannot vanish identically (the curve
            # relation is irreducible), so retry deeper
            depth *= 2
            if depth > 1 << 16:
                raise AssertionError("branch series identically zero")

    # -- divisor -------------------------------------------------------------

    def map_field(self, target: Field) -> "FunctionFieldElement":
        curve = self.curve.map_field(target)
        return FunctionFieldElement(curve, self.a.map_field(target),
                                    self.b.map_field(target),
                                    self.den.map_field(target))

    def divisor(self, max_extension: int = 1) -> FormalDivisor:
        """The principal divisor div(F), affine part plus infinity part.

        The support must split over the working field; with
        ``max_extension`` > 1 (prime base fields only) extensions of degree
        up to that bound are tried in order and the divisor is returned over
        the first field where everything splits.
        """
        if not self:
            raise ZeroFunctionError("divisor of the zero function")
        base = self.curve.field
        last_error = None
        for ext_degree in range(1, max_extension + 1):
            if ext_degree > 1 and base.c != 1:
                break
            if base.order ** ext_degree > SPLIT_SCAN_LIMIT:
                break
            if ext_degree == 1:
                candidate = self
            else:
                candidate = self.map_field(Field(base.p, ext_degree))
            try:
                return candidate._divisor_over_field()
            except NonSplitSupportError as err:
                last_error = err
        if last_error is None:
            last_error = NonSplitSupportError("support does not split")
        raise last_error

    def _divisor_over_field(self) -> FormalDivisor:
        support_poly = self._norm_numerator() * self.den
        if support_poly.degree > 0:
            roots, cofactor = roots_with_multiplicity(support_poly)
            if cofactor.degree > 0:
                raise NonSplitSupportError(
                    f"irreducible factor {cofactor!r} in the support",
                    factor=cofactor)
        else:
            roots = []
        points: dict[AffinePoint, int] = {}
        for x0, _ in roots:
            above = self.curve.points_above(x0)
            if not above:
                raise NonSplitSupportError(
                    f"no rational point above x = {x0!r}",
                    factor=Polynomial(self.curve.field, (-x0, 1)))
            for point in above:
                order = self.valuation(point)
                if order:
                    points[point] = order
        result = FormalDivisor(points, self.valuation_at_infinity())
        assert result.degree() == 0, "principal divisor of nonzero degree"
        return result

    def __repr__(self) -> str:
        num = f"{self.a!r}"
        if self.b:
            num = f"({self.a!r}) + ({self.b!r})*y"
        if self.den.degree == 0:
            return num if self.b else f"{self.a!r}"
        return f"({num})/({self.den!r})"
