"""Mumford representation and reduction of divisors.

A degree-zero divisor with semi-reduced affine part (no two opposite points,
ramification points at most simple) is encoded as a pair (u, v): u is monic
and vanishes on the x-coordinates with the right multiplicities, v picks the
branch, and u | v^2 + v*h - f ties the pair to the curve.  The pair is
*reduced* when deg u <= genus; every divisor class contains exactly one
reduced pair.

:func:`reduce_divisor` brings an arbitrary formal sum D to the shape
Delta + m*Inf + div(w): vertical lines clear negative and opposite parts,
then reduction steps replace (u, v) by

    u' = monic((f - v*h - v^2)/u),     v' = (-h - v) mod u',

each step contributing (y - v)/u' to the witness function w.  The degree of
u strictly drops, so the loop ends with deg u <= genus.  The exact identity
``D - Delta - m*Inf = div(w)`` is what the tests verify through the
function-field valuations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curve import AffinePoint, HyperellipticCurve
from .errors import (
    AlreadyReducedError,
    DegreeViolationError,
    DivisibilityFailureError,
    FieldMismatchError,
    NonMonicUError,
    NonSplitSupportError,
    OppositePointsError,
    PointNotOnCurveError,
    WeierstrassMultiplicityError,
)
from .finite_field import Field
from .function_field import (
    FormalDivisor,
    FunctionFieldElement,
    branch_series,
)
from .polynomial import Polynomial, ext_gcd, gcd, roots_with_multiplicity


class MumfordDivisor:
    """A semi-reduced degree-zero divisor div(u, v) on a fixed curve."""

    __slots__ = ("curve", "u", "v")

    def __init__(self, curve: HyperellipticCurve, u: Polynomial, v: Polynomial):
        if u.field != curve.field or v.field != curve.field:
            raise FieldMismatchError("Mumford pair over a different field")
        if not u or not u.is_monic():
            raise NonMonicUError("u must be monic and nonzero")
        if v and v.degree >= u.degree:
            raise DegreeViolationError(
                f"deg v = {v.degree} must be below deg u = {u.degree}")
        witness = v * v + v * curve.h - curve.f
        if witness % u:
            raise DivisibilityFailureError("u does not divide v^2 + v*h - f")
        self.curve = curve
        self.u = u
        self.v = v

    @classmethod
    def zero(cls, curve: HyperellipticCurve) -> "MumfordDivisor":
        return cls(curve, Polynomial.one(curve.field), Polynomial.zero(curve.field))

    @property
    def weight(self) -> int:
        """deg u: the number of affine points counted with multiplicity."""
        return int(self.u.degree)

    @property
    def is_reduced(self) -> bool:
        return self.weight <= self.curve.genus

    @property
    def has_ramified_support(self) -> bool:
        """The gcd(u, u', v) flag: nontrivial when a repeated x-coordinate
        sits on the x-axis branch."""
        shared = gcd(gcd(self.u, self.u.derivative()), self.v)
        return shared.degree > 0

    def is_zero(self) -> bool:
        return self.u.degree == 0

    def __eq__(self, other) -> bool:
        return (isinstance(other, MumfordDivisor)
                and self.curve == other.curve
                and self.u == other.u and self.v == other.v)

    def __hash__(self) -> int:
        return hash((self.curve, self.u, self.v))

    def __repr__(self) -> str:
        return f"div({self.u!r}, {self.v!r})"

    # -- support -------------------------------------------------------------

    def support(self, max_extension: int = 1) -> tuple[list[tuple[AffinePoint, int]], Field]:
        """The affine points with multiplicities, over the first field where
        u splits; raises NonSplitSupportError beyond ``max_extension``."""
        base = self.curve.field
        last = None
        for ext_degree in range(1, max_extension + 1):
            if ext_degree > 1 and base.c != 1:
                break
            if ext_degree == 1:
                field, u, v = base, self.u, self.v
            else:
                field = Field(base.p, ext_degree)
                u, v = self.u.map_field(field), self.v.map_field(field)
            if u.degree == 0:
                return [], field
            roots, cofactor = roots_with_multiplicity(u)
            if cofactor.degree > 0:
                last = NonSplitSupportError(
                    f"u has irreducible factor {cofactor!r}", factor=cofactor)
                continue
            return [(AffinePoint(x0, v(x0)), mult) for x0, mult in roots], field
        raise last or NonSplitSupportError("u does not split")

    def as_formal(self, max_extension: int = 1) -> FormalDivisor:
        """The divisor as a formal sum: affine part minus weight * infinity."""
        points, _ = self.support(max_extension)
        return FormalDivisor({p: m for p, m in points}, -self.weight)


def mumford_from_points(curve: HyperellipticCurve,
                        points: list[tuple[AffinePoint, int]]) -> MumfordDivisor:
    """The semi-reduced pair through given points with multiplicities.

    Multiplicity above one asks the branch polynomial v to match the local
    expansion of y to that order (a Hermite condition), which is exactly what
    u | v^2 + v*h - f requires; ramification points admit multiplicity one
    only, and no point may appear together with its opposite.
    """
    field = curve.field
    merged: dict[AffinePoint, int] = {}
    for point, mult in points:
        if mult < 1:
            raise DegreeViolationError("multiplicities must be positive")
        if not curve.contains(point):
            raise PointNotOnCurveError(f"{point} is not on the curve")
        merged[point] = merged.get(point, 0) + mult
    for point in merged:
        mate = curve.opposite(point)
        if mate != point and mate in merged:
            raise OppositePointsError(f"{point} and {mate} are opposite")
        if mate == point and merged[point] > 1:
            raise WeierstrassMultiplicityError(
                f"ramification point {point} with multiplicity {merged[point]}")
    if not merged:
        return MumfordDivisor.zero(curve)

    u = Polynomial.one(field)
    crt_v = Polynomial.zero(field)
    modulus_so_far = Polynomial.one(field)
    for point, mult in sorted(merged.items(),
                              key=lambda kv: (kv[0].x.as_int(), kv[0].y.as_int())):
        local_mod = Polynomial(field, (-point.x, 1)) ** mult
        if mult == 1:
            local_poly = Polynomial.constant(point.y)
        else:
            series = branch_series(curve, point, mult)
            local_poly = series.shifted(-point.x)  # back from t = x - x0 to x
        # incremental CRT: keep crt_v = local_poly (mod local_mod)
        correction = (local_poly - crt_v) % local_mod
        _, inv_prev, _ = ext_gcd(modulus_so_far % local_mod, local_mod)
        crt_v = crt_v + modulus_so_far * ((correction * inv_prev) % local_mod)
        modulus_so_far = modulus_so_far * local_mod
        u = u * local_mod
    v = crt_v % u
    return MumfordDivisor(curve, u, v)


def cantor_reduction_step(divisor: MumfordDivisor) -> tuple[MumfordDivisor, FunctionFieldElement]:
    """One reduction step on a semi-reduced pair with deg u > genus.

    Returns the new pair together with the witness factor (y - v)/u', whose
    divisor is exactly old - new; the monic normalization constant of u' is
    a unit and does not disturb that identity.
    """
    curve = divisor.curve
    if divisor.is_reduced:
        raise AlreadyReducedError(f"deg u = {divisor.weight} <= genus {curve.genus}")
    u, v = divisor.u, divisor.v
    u_next = ((curve.f - v * curve.h - v * v) // u).monic()
    v_next = (-curve.h - v) % u_next if u_next.degree > 0 else Polynomial.zero(curve.field)
    step = FunctionFieldElement(curve, -v, Polynomial.one(curve.field), u_next)
    return MumfordDivisor(curve, u_next, v_next), step


def reduce_mumford(divisor: MumfordDivisor) -> tuple[MumfordDivisor, FunctionFieldElement]:
    """Iterate reduction steps until deg u <= genus; witness is the product."""
    witness = FunctionFieldElement.one(divisor.curve)
    while not divisor.is_reduced:
        divisor, step = cantor_reduction_step(divisor)
        witness = witness * step
    return divisor, witness


def compose(d1: MumfordDivisor, d2: MumfordDivisor) -> tuple[MumfordDivisor, Polynomial]:
    """Semi-reduced sum of two pairs (Cantor composition).

    Returns (d3, s) with s = gcd(u1, u2, v1 + v2 + h); the divisor identity
    is d1 + d2 = d3 + div(s(x)), so s is the factor a caller folds into its
    witness function.
    """
    if d1.curve != d2.curve:
        raise FieldMismatchError("divisors on different curves")
    curve = d1.curve
    u1, v1 = d1.u, d1.v
    u2, v2 = d2.u, d2.v
    d_, e1, e2 = ext_gcd(u1, u2)
    cross = v1 + v2 + curve.h
    s, c1, c2 = ext_gcd(d_, cross)
    # Bezout: s = c1*e1*u1 + c1*e2*u2 + c2*(v1 + v2 + h)
    s1, s2, s3 = c1 * e1, c1 * e2, c2
    u3, u_rem = divmod(u1 * u2, s * s)
    numerator = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + curve.f)
    scaled, n_rem = divmod(numerator, s)
    assert not u_rem and not n_rem, "composition divisibility failed"
    v3 = scaled % u3 if u3.degree > 0 else Polynomial.zero(curve.field)
    return MumfordDivisor(curve, u3, v3), s


@dataclass
class GeneralDivisor:
    """A formal sum of affine points (nonzero net multiplicities) plus
    an integer multiple of the point at infinity."""

    terms: list[tuple[AffinePoint, int]]
    infinity: int = 0

    def degree(self) -> int:
        return sum(m for _, m in self.terms) + self.infinity

    def as_formal(self) -> FormalDivisor:
        merged: dict[AffinePoint, int] = {}
        for point, mult in self.terms:
            merged[point] = merged.get(point, 0) + mult
        return FormalDivisor(merged, self.infinity)


@dataclass
class ReductionResult:
    """Output of :func:`reduce_divisor`: D = delta + m*Inf + div(witness)."""

    delta: MumfordDivisor
    m: int
    witness: FunctionFieldElement


def reduce_divisor(divisor: GeneralDivisor,
                   curve: HyperellipticCurve) -> ReductionResult:
    """Reduce an arbitrary divisor to (reduced Mumford pair, m, witness).

    Bookkeeping invariant throughout: the original D equals the current
    formal sum plus div(witness).  Moves only ever subtract a principal
    divisor from the current sum while multiplying the witness by the same
    function: vertical lines (x - x0) absorb negative multiplicities,
    opposite pairs and ramification doublings; reduction steps contribute
    their (y - v)/u' factors.
    """
    for point, _ in divisor.terms:
        if not curve.contains(point):
            raise PointNotOnCurveError(f"{point} is not on the curve")
    total_degree = divisor.degree()
    field = curve.field
    net: dict[AffinePoint, int] = {}
    for point, mult in divisor.terms:
        net[point] = net.get(point, 0) + mult
    net = {p: m for p, m in net.items() if m}
    infinity = divisor.infinity
    witness = FunctionFieldElement.one(curve)

    def vertical(x0) -> FunctionFieldElement:
        return FunctionFieldElement.from_polynomial(
            curve, Polynomial(field, (-x0, 1)))

    # clear negative multiplicities through vertical lines
    for point in sorted(net, key=lambda p: (p.x.as_int(), p.y.as_int())):
        mult = net.get(point, 0)
        if mult >= 0:
            continue
        count = -mult
        mate = curve.opposite(point)
        witness = witness * vertical(point.x) ** (-count)
        infinity -= 2 * count
        if mate == point:
            net[point] = mult + 2 * count
        else:
            net[point] = 0
            net[mate] = net.get(mate, 0) + count
    net = {p: m for p, m in net.items() if m}

    # cancel opposite pairs and fold ramification multiplicities
    for point in sorted(net, key=lambda p: (p.x.as_int(), p.y.as_int())):
        mult = net.get(point, 0)
        if mult <= 0:
            continue
        mate = curve.opposite(point)
        if mate == point:
            pairs = mult // 2
            if pairs:
                witness = witness * vertical(point.x) ** pairs
                infinity += 2 * pairs
                net[point] = mult % 2
        elif mate in net and net[mate] > 0:
            pairs = min(mult, net[mate])
            witness = witness * vertical(point.x) ** pairs
            infinity += 2 * pairs
            net[point] -= pairs
            net[mate] -= pairs
    net = {p: m for p, m in net.items() if m}

    semi = mumford_from_points(curve, list(net.items()))
    delta, steps_witness = reduce_mumford(semi)
    witness = witness * steps_witness
    assert infinity + semi.weight == total_degree, "degree bookkeeping broke"
    return ReductionResult(delta, total_degree, witness)
