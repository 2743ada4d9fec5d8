"""Imaginary hyperelliptic curves y^2 + y*h(x) = f(x).

The model has deg f = 2g + 1 with f monic and deg h <= g, so there is a
single (Weierstrass) point at infinity.  In characteristic 2 the cross term
h is mandatory; in odd characteristic it can be removed by completing the
square, see :meth:`HyperellipticCurve.normalized`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    Char2NotNormalizableError,
    DegreeViolationError,
    EvenDegreeError,
    FieldMismatchError,
    FieldTooLargeError,
    MissingHInChar2Error,
    NonMonicError,
    PointNotOnCurveError,
    SingularCurveError,
)
from .finite_field import Field, FieldElement, embed
from .polynomial import Polynomial, gcd

POINT_SCAN_LIMIT = 10 ** 4


def solve_y_quadratic(field: Field, hx: FieldElement,
                      wx: FieldElement) -> list[FieldElement]:
    """The solutions y of y^2 + y*hx = wx, sorted for determinism."""
    if field.p != 2:
        # complete the square: (y + hx/2)^2 = wx + hx^2/4
        half = field.element(2).inverse()
        root = (wx + hx * hx * half * half).sqrt()
        if root is None:
            return []
        ys = {root - hx * half, -root - hx * half}
    elif not hx:
        ys = {wx.sqrt()}
    else:
        # 0 or 2 roots; desk-scale scan
        ys = {y for y in field.elements() if y * y + y * hx == wx}
    return sorted(ys, key=lambda e: e.as_int())


@dataclass(frozen=True)
class AffinePoint:
    """An affine point (x, y); membership is checked by the curve."""

    x: FieldElement
    y: FieldElement

    def __repr__(self) -> str:
        return f"({self.x!r}, {self.y!r})"


class HyperellipticCurve:
    """A validated curve y^2 + y*h(x) = f(x) with one point at infinity."""

    __slots__ = ("field", "f", "h", "genus")

    def __init__(self, field: Field, f: Polynomial, h: Polynomial | None = None):
        if h is None:
            h = Polynomial.zero(field)
        if f.field != field or h.field != field:
            raise FieldMismatchError(
                "curve polynomials must live over the given field")
        d = f.degree
        if not f or d < 3 or d % 2 == 0:
            raise EvenDegreeError(f"deg f = {d}; need odd degree >= 3")
        if not f.is_monic():
            raise NonMonicError("f must be monic")
        genus = (d - 1) // 2
        if h and h.degree > genus:
            raise DegreeViolationError(f"deg h = {h.degree} exceeds genus {genus}")
        if field.p == 2 and not h:
            raise MissingHInChar2Error("characteristic 2 needs h != 0")
        self.field = field
        self.f = f
        self.h = h
        self.genus = genus
        self._check_smooth()

    @property
    def degree(self) -> int:
        return 2 * self.genus + 1

    def _check_smooth(self) -> None:
        if self.field.p != 2:
            # Completing the square is an isomorphism, so the curve is
            # smooth iff f + h^2/4 is squarefree.
            quarter = self.field.element(4).inverse()
            reduced = self.f + (self.h * self.h).scale(quarter)
            if gcd(reduced, reduced.derivative()).degree != 0:
                raise SingularCurveError("f + h^2/4 has a repeated root")
        else:
            # Jacobian criterion: a singular point needs h(x0) = 0 and
            # y0*h'(x0) = f'(x0) with y0^2 = f(x0).  Squaring the second
            # equation (squaring is injective) turns existence into
            # gcd(h, f*h'^2 + f'^2) != 1 over the algebraic closure.
            hp = self.h.derivative()
            fp = self.f.derivative()
            witness = self.f * hp * hp + fp * fp
            if gcd(self.h, witness).degree != 0:
                raise SingularCurveError("singular point over the closure")

    # -- point predicates ----------------------------------------------------

    def equation_value(self, point: AffinePoint) -> FieldElement:
        """y^2 + y*h(x) - f(x); zero exactly on the curve."""
        x, y = point.x, point.y
        return y * y + y * self.h(x) - self.f(x)

    def contains(self, point: AffinePoint) -> bool:
        return not self.equation_value(point)

    def _require(self, point: AffinePoint) -> None:
        if not self.contains(point):
            raise PointNotOnCurveError(f"{point} is not on {self}")

    def opposite(self, point: AffinePoint) -> AffinePoint:
        """The hyperelliptic involution (x, y) -> (x, -y - h(x))."""
        self._require(point)
        return AffinePoint(point.x, -point.y - self.h(point.x))

    def is_weierstrass(self, point: AffinePoint) -> bool:
        self._require(point)
        return self.opposite(point) == point

    # -- model changes -------------------------------------------------------

    def normalized(self) -> "HyperellipticCurve":
        """The isomorphic model with h = 0 (odd characteristic only)."""
        if self.field.p == 2:
            raise Char2NotNormalizableError("h cannot be removed in characteristic 2")
        if not self.h:
            return self
        quarter = self.field.element(4).inverse()
        return HyperellipticCurve(
            self.field, self.f + (self.h * self.h).scale(quarter))

    def map_field(self, target: Field) -> "HyperellipticCurve":
        """The same equation over an extension field."""
        return HyperellipticCurve(
            target, self.f.map_field(target), self.h.map_field(target))

    # -- point enumeration ---------------------------------------------------

    def points_above(self, x0: FieldElement) -> list[AffinePoint]:
        """Rational points with the given x-coordinate (0, 1 or 2 of them)."""
        ys = solve_y_quadratic(self.field, self.h(x0), self.f(x0))
        return [AffinePoint(x0, y) for y in ys]

    def points(self) -> list[AffinePoint]:
        """All affine rational points, by scanning x-coordinates."""
        if self.field.order > POINT_SCAN_LIMIT:
            raise FieldTooLargeError(
                f"point enumeration over {self.field} exceeds {POINT_SCAN_LIMIT}")
        out = []
        for x0 in self.field.elements():
            out.extend(self.points_above(x0))
        return out

    # -- identity ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, HyperellipticCurve)
                and self.field == other.field
                and self.f == other.f and self.h == other.h)

    def __hash__(self) -> int:
        return hash((self.field, self.f, self.h))

    def __repr__(self) -> str:
        lhs = "y^2" if not self.h else f"y^2 + y*({self.h!r})"
        return f"{lhs} = {self.f!r} over {self.field} (genus {self.genus})"


def embed_point(point: AffinePoint, target: Field) -> AffinePoint:
    """Embed a prime-field point into an extension of the same p."""
    return AffinePoint(embed(point.x, target), embed(point.y, target))
