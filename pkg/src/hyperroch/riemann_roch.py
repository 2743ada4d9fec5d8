"""Bases and dimensions of the spaces L(Delta + m*Inf).

For a reduced Mumford pair (u, v) of weight t on a curve of genus g (degree
d = 2g + 1) and m > 0, the space of functions F with div(F) + Delta + m*Inf
effective is spanned by

    x^i                 for 0 <= i <= (m - t)/2,
    G(x, y) * x^j       for 0 <= j <= (m - (d - t))/2   (only once m >= d - t),

where G = (y + v + h)/u is the generating function whose poles are exactly
the divisor: div(G) = W - Delta - (d - t)*Inf for an effective W of degree
d - t.  The two families have even and odd pole order at infinity
respectively, so they are independent, and counting them gives

    dim = 1 + floor((m-t)/2)  [ + 1 + floor((m-(d-t))/2) when m >= d-t ].

For 0 <= m < t the space is null: reduction strictly decreases affine
weight, so no effective divisor of degree m is equivalent to Delta + m*Inf.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .divisor import MumfordDivisor
from .errors import (
    AlgebraError,
    NegativeMError,
    NonPositiveMError,
    NonSplitSupportError,
)
from .finite_field import Field, FieldElement, minimal_polynomial
from .function_field import FunctionFieldElement, _root_multiplicity, branch_series
from .polynomial import Polynomial

SUPPORT_SCAN_LIMIT = 2 * 10 ** 5


def rr_dim(t: int, m: int, g: int) -> int:
    """dim L(Delta + m*Inf) for a reduced pair of weight t on a genus-g curve."""
    if m < 0:
        raise NegativeMError(f"m = {m} must be nonnegative")
    if not 0 <= t <= g:
        raise AlgebraError(f"weight t = {t} out of range for genus {g}")
    if m < t:
        return 0
    d = 2 * g + 1
    dim = 1 + (m - t) // 2
    if m >= d - t:
        dim += 1 + (m - (d - t)) // 2
    return dim


def has_generic_dimension(t: int, m: int, g: int) -> bool:
    """Whether dim L(Delta + m*Inf) equals m - g + 1 (the Riemann value).

    The threshold is m >= d - t - 2: below it the dimension is strictly
    smaller than the Riemann value, at and above it they agree.
    """
    return m >= 2 * g - t - 1


def basis_generator(delta: MumfordDivisor) -> FunctionFieldElement:
    """The function (y + v + h)/u attached to a Mumford pair.

    Its divisor is W - Delta - (d - t)*Inf with W effective of degree d - t,
    so it enters L(Delta + m*Inf) exactly at m = d - t.  For the zero pair
    (1, 0) this degenerates to y + h.
    """
    curve = delta.curve
    return FunctionFieldElement(
        curve, delta.v + curve.h, Polynomial.one(curve.field), delta.u)


@dataclass
class RRBasis:
    """An ordered basis of L(Delta + m*Inf): x-powers first, then the
    generator multiples."""

    delta: MumfordDivisor
    m: int
    elements: list[FunctionFieldElement]
    includes_generator: bool

    def __len__(self) -> int:
        return len(self.elements)


def rr_basis(delta: MumfordDivisor, m: int) -> RRBasis:
    """The basis of L(Delta + m*Inf) read off the Mumford pair.

    Requires m > 0 (divisors of nonpositive degree fall to the standard
    special cases: the space is null unless the divisor is principal).
    For 0 < m < t the listed family is empty and the space is null.
    """
    if m <= 0:
        raise NonPositiveMError(f"basis needs positive degree, got m = {m}")
    if not delta.is_reduced:
        raise AlgebraError("basis needs a reduced Mumford pair")
    curve = delta.curve
    t = delta.weight
    d = curve.degree
    x = Polynomial.x(curve.field)
    elements = []
    if m >= t:
        elements.extend(
            FunctionFieldElement.from_polynomial(curve, x ** i)
            for i in range((m - t) // 2 + 1))
    includes = m >= d - t
    if includes:
        gen = basis_generator(delta)
        elements.extend(gen * x ** j for j in range((m - (d - t)) // 2 + 1))
    return RRBasis(delta, m, elements, includes)


# ---------------------------------------------------------------------------
# Membership: div(F) + Delta + m*Inf >= 0, checked through valuations.
# ---------------------------------------------------------------------------

def _field_degree_of(x0: FieldElement) -> int:
    """Degree over GF(p) of the subfield generated by x0."""
    p = x0.field.p
    e = 1
    power = x0 ** p
    while power != x0:
        power = power ** p
        e += 1
    return e


@functools.lru_cache(maxsize=2048)
def _split_places(poly: Polynomial, max_extension: int):
    """Roots of a base-field polynomial grouped by minimal splitting field.

    Returns a list of (field, [roots in that field with minimal degree e]).
    Raises NonSplitSupportError when an irreducible factor needs a larger
    extension than allowed (or the base field is itself an extension).
    """
    base = poly.field
    remaining = poly.monic()
    found: list[tuple[Field, list[FieldElement]]] = []
    for ext_degree in range(1, max_extension + 1):
        if remaining.degree == 0:
            break
        if ext_degree > 1 and base.c != 1:
            break
        if base.order ** ext_degree > SUPPORT_SCAN_LIMIT:
            break
        field = base if ext_degree == 1 else Field(base.p, ext_degree)
        local = remaining.map_field(field)
        level_roots = []
        for x0 in field.elements():
            if local(x0):
                continue
            if ext_degree > 1 and _field_degree_of(x0) != ext_degree:
                continue
            level_roots.append(x0)
            if ext_degree == 1:
                # every base-field root needs its own conditions
                min_poly = Polynomial(base, (-x0, 1))
            else:
                # conjugate roots give Frobenius-equivalent conditions,
                # so one representative per orbit suffices; dividing the
                # minimal polynomial drops the whole orbit at once
                min_poly = Polynomial(base, minimal_polynomial(x0))
            while True:
                q, r = divmod(remaining, min_poly)
                if r:
                    break
                remaining = q
            local = remaining.map_field(field)
        if level_roots:
            found.append((field, level_roots))
    if remaining.degree > 0:
        raise NonSplitSupportError(
            f"support factor {remaining!r} needs an extension beyond {max_extension}",
            factor=remaining)
    return found


def membership_check(F: FunctionFieldElement, delta: MumfordDivisor, m: int,
                     max_extension: int = 4) -> bool:
    """Whether div(F) + Delta + m*Inf is effective.

    Only the poles of F and the support of Delta can break effectiveness,
    and both live above the roots of den(F) * u, so it suffices to check
    valuations there (over each factor's minimal splitting field) plus the
    order at infinity.  Zeros of F never need to be located, which keeps
    the splitting requirement down to den(F) * u.  At each point only a
    lower valuation bound is needed, so the branch expansion stops at the
    allowed pole order instead of resolving the exact valuation.
    """
    if F.curve != delta.curve:
        raise AlgebraError("function and divisor live on different curves")
    if not F:
        return True
    t = delta.weight
    if F.valuation_at_infinity() + (m - t) < 0:
        return False
    locus = F.den * delta.u
    if locus.degree == 0:
        return True
    for field, roots in _split_places(locus, max_extension):
        if field == F.curve.field:
            F_local, u_local, v_local = F, delta.u, delta.v
        else:
            F_local = F.map_field(field)
            u_local = delta.u.map_field(field)
            v_local = delta.v.map_field(field)
        curve_local = F_local.curve
        for x0 in roots:
            above = curve_local.points_above(x0)
            if not above:
                # inert quadratic place: the canonical form cannot cancel
                # the denominator there, so F has a bare pole
                return False
            u_mult = _root_multiplicity(u_local, x0) if not u_local(x0) else 0
            den_mult = (_root_multiplicity(F_local.den, x0)
                        if not F_local.den(x0) else 0)
            for point in above:
                support_mult = u_mult if point.y == v_local(x0) else 0
                if curve_local.is_weierstrass(point):
                    order = (_root_multiplicity(F_local._norm_numerator(), x0)
                             - 2 * den_mult)
                    if order + support_mult < 0:
                        return False
                    continue
                needed = den_mult - support_mult
                if needed <= 0:
                    continue
                branch = branch_series(curve_local, point, needed)
                series = (F_local.a.shifted(x0)
                          + F_local.b.shifted(x0) * branch).truncated(needed)
                if any(series.coeffs[:needed]):
                    return False
    return True
