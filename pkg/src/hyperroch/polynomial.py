"""Dense univariate polynomials over a finite field.

Coefficients are stored constant term first with no trailing zeros, so the
zero polynomial is the empty tuple.  Its degree is the sentinel
``NEG_INFINITY``, which compares below every integer and keeps degree tests
such as ``deg v < deg u`` total.

Monic normalization is always an explicit call (:meth:`Polynomial.monic`);
no operation rescales silently, because divisor reduction needs to track the
normalization constants itself.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence, Union

from .errors import AlgebraError, DuplicateAbscissaError, FieldMismatchError
from .finite_field import Field, FieldElement, embed

NEG_INFINITY = float("-inf")

_Coef = Union[int, FieldElement]


class Polynomial:
    """A dense polynomial with coefficients in a fixed :class:`Field`."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable[_Coef] = ()):
        elems = [field.element(x) for x in coeffs]
        while elems and not elems[-1]:
            elems.pop()
        self.field = field
        self.coeffs = tuple(elems)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, field: Field) -> "Polynomial":
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> "Polynomial":
        return cls(field, (1,))

    @classmethod
    def x(cls, field: Field) -> "Polynomial":
        return cls(field, (0, 1))

    @classmethod
    def constant(cls, value: FieldElement) -> "Polynomial":
        return cls(value.field, (value,))

    @classmethod
    def monomial(cls, field: Field, degree: int, coeff: _Coef = 1) -> "Polynomial":
        return cls(field, (0,) * degree + (coeff,))

    # -- basic queries ------------------------------------------------------

    @property
    def degree(self):
        """Degree, or NEG_INFINITY for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    def leading_coefficient(self) -> FieldElement:
        if not self.coeffs:
            return self.field.zero()
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def __getitem__(self, i: int) -> FieldElement:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return self.field.zero()

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, (int, FieldElement)):
            return self == Polynomial(self.field, (other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    # -- ring operations ----------------------------------------------------

    def _check(self, other: "Polynomial") -> None:
        if self.field != other.field:
            raise FieldMismatchError("polynomials over different fields")

    def _coerce(self, other) -> Optional["Polynomial"]:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, FieldElement)):
            return Polynomial(self.field, (other,))
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field,
                          (self[i] + other[i] for i in range(n)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.field,
                          (self[i] - other[i] for i in range(n)))

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return Polynomial(self.field, (-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, FieldElement):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Polynomial.zero(self.field)
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    __rmul__ = __mul__

    def scale(self, s: _Coef) -> "Polynomial":
        s = self.field.element(s)
        return Polynomial(self.field, (c * s for c in self.coeffs))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.one(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        field = self.field
        rem = list(self.coeffs)
        q = [field.zero()] * max(0, len(rem) - len(other.coeffs) + 1)
        inv_lead = other.coeffs[-1].inverse()
        db = len(other.coeffs)
        while len(rem) >= db and rem:
            coef = rem[-1] * inv_lead
            shift = len(rem) - db
            q[shift] = coef
            for i, bi in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - coef * bi
            while rem and not rem[-1]:
                rem.pop()
        return Polynomial(field, q), Polynomial(field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        """Rescale to leading coefficient one (identity on zero)."""
        if not self.coeffs or self.is_monic():
            return self
        return self.scale(self.coeffs[-1].inverse())

    def derivative(self) -> "Polynomial":
        return Polynomial(self.field,
                          (self.coeffs[i] * i for i in range(1, len(self.coeffs))))

    def __call__(self, x0: _Coef) -> FieldElement:
        """Horner evaluation."""
        x0 = self.field.element(x0)
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    def shifted(self, x0: FieldElement) -> "Polynomial":
        """The composition p(x + x0), i.e. the Taylor expansion about x0."""
        field = self.field
        shift = Polynomial(field, (x0, 1))
        acc = Polynomial.zero(field)
        for c in reversed(self.coeffs):
            acc = acc * shift + c
        return acc

    def truncated(self, order: int) -> "Polynomial":
        """Drop terms of degree >= order (series truncation)."""
        return Polynomial(self.field, self.coeffs[:order])

    def map_field(self, target: Field) -> "Polynomial":
        """Re-base coefficients into an extension field."""
        return Polynomial(target, (embed(c, target) for c in self.coeffs))

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(repr(c))
            else:
                xi = "x" if i == 1 else f"x^{i}"
                one = self.field.one()
                parts.append(xi if c == one else f"{c!r}*{xi}")
        return " + ".join(parts)


def gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    while g:
        f, g = g, f % g
    return f.monic()


def ext_gcd(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Monic gcd d with Bezout coefficients (d, s, t), s*f + t*g = d."""
    if not f and not g:
        raise ZeroDivisionError("gcd of two zero polynomials")
    field = f.field
    r0, r1 = f, g
    s0, s1 = Polynomial.one(field), Polynomial.zero(field)
    t0, t1 = Polynomial.zero(field), Polynomial.one(field)
    while r1:
        q, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lead = r0.leading_coefficient().inverse()
    return r0.scale(lead), s0.scale(lead), t0.scale(lead)


def pow_mod(base: Polynomial, exp: int, modulus: Polynomial) -> Polynomial:
    """base**exp reduced modulo `modulus`."""
    result = Polynomial.one(base.field)
    base = base % modulus
    while exp:
        if exp & 1:
            result = result * base % modulus
        base = base * base % modulus
        exp >>= 1
    return result


def interpolate(field: Field,
                points: Sequence[tuple[_Coef, _Coef]],
                degree_cap: Optional[int] = None) -> Polynomial:
    """Lagrange interpolation through (x_i, y_i) with pairwise distinct x_i.

    With ``degree_cap`` given, exactly ``degree_cap + 1`` nodes are required;
    the result always satisfies deg <= degree_cap (possibly less when the
    data degenerates).
    """
    xs = [field.element(x) for x, _ in points]
    ys = [field.element(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissaError("repeated x-coordinate in interpolation data")
    if degree_cap is not None and len(points) != degree_cap + 1:
        raise AlgebraError(
            f"degree cap {degree_cap} needs {degree_cap + 1} nodes, got {len(points)}")
    result = Polynomial.zero(field)
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if not yi:
            continue
        num = Polynomial.one(field)
        den = field.one()
        for j, xj in enumerate(xs):
            if i != j:
                num = num * Polynomial(field, (-xj, 1))
                den = den * (xi - xj)
        result = result + num.scale(yi / den)
    return result


def roots_with_multiplicity(f: Polynomial) -> tuple[list[tuple[FieldElement, int]], Polynomial]:
    """All roots of f in its coefficient field, found by exhaustive scan.

    Returns (roots, cofactor) where cofactor is what remains of f after all
    linear factors over the field are divided out; the cofactor is constant
    exactly when f splits.
    """
    if not f:
        raise AlgebraError("root scan of the zero polynomial")
    field = f.field
    remaining = f
    found = []
    for x0 in field.elements():
        if remaining.degree == 0 or not remaining:
            break
        if f(x0):
            continue
        multiplicity = 0
        linear = Polynomial(field, (-x0, 1))
        while True:
            q, r = divmod(remaining, linear)
            if r:
                break
            remaining = q
            multiplicity += 1
        if multiplicity:
            found.append((x0, multiplicity))
    return found, remaining
