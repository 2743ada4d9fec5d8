"""Evaluation (Goppa) codes from Mumford data, and the curves behind them.

The generator matrix needs only the pair (u, v) (plus h in characteristic 2)
and n points with u(x_s) != 0: its rows are the basis functions of
L(div(u, v) + (k + g - 1)*Inf) evaluated at the points, and every one of
those functions is a ratio of polynomials in x and y.  No curve equation is
required to encode.

:func:`fit_curve` recovers a curve that realizes the code as an honest
algebraic-geometry code: a polynomial c of degree 2g + 1 - t interpolating

    c(x_s) = (v(x_s)^2 + h(x_s) v(x_s) - y_s^2 - y_s h(x_s)) / u(x_s)

makes y^2 + y*h = v^2 + h*v - c*u pass through all the points and through
the support of div(u, v).  The interpolation uses every degree of freedom,
so the leading coefficient of the result is whatever the data dictates; the
curve model here requires a monic equation, and :func:`fit_curve_padded`
picks its last free point to force exactly that.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass, field as dataclass_field
from typing import Sequence

from .curve import AffinePoint, HyperellipticCurve, solve_y_quadratic
from .errors import (
    AlgebraError,
    DegreeViolationError,
    DuplicateAbscissaError,
    DuplicateEvaluationWarning,
    KOutOfRangeError,
    LengthMismatchError,
    NonMonicModelError,
    NonMonicUError,
    SearchSpaceTooLargeError,
    SingularCurveError,
    TooManyMinorsError,
    UOnSupportError,
    WrongPointCountError,
)
from .finite_field import Field, FieldElement
from .linalg import is_nonsingular
from .polynomial import Polynomial, gcd, interpolate

MINOR_BUDGET = 10 ** 6
CODEWORD_BUDGET = 10 ** 7


def _check_pair(u: Polynomial, v: Polynomial, h: Polynomial, g: int) -> int:
    """Common validation for the (u, v, h, g) data; returns t = deg u."""
    if not u or not u.is_monic():
        raise NonMonicUError("u must be monic and nonzero")
    t = int(u.degree)
    if v and v.degree >= t:
        raise DegreeViolationError("deg v must be below deg u")
    if g < max(t, int(h.degree) if h else 0):
        raise DegreeViolationError(
            f"genus {g} must be at least deg u and deg h")
    if gcd(gcd(u, u.derivative()), v).degree > 0:
        raise AlgebraError("gcd(u, u', v) must be trivial")
    return t


@dataclass(frozen=True)
class EvaluationSet:
    """Points for a code, with the (u, v, h) values cached per point."""

    points: tuple[AffinePoint, ...]
    u_values: tuple[FieldElement, ...]
    v_values: tuple[FieldElement, ...]
    h_values: tuple[FieldElement, ...]

    @classmethod
    def build(cls, u: Polynomial, v: Polynomial, h: Polynomial,
              points: Sequence[AffinePoint]) -> "EvaluationSet":
        u_values = tuple(u(p.x) for p in points)
        for point, value in zip(points, u_values):
            if not value:
                raise UOnSupportError(f"u vanishes at evaluation point {point}")
        if len(set(points)) != len(points):
            warnings.warn("repeated evaluation point gives equal columns",
                          DuplicateEvaluationWarning)
        return cls(tuple(points),
                   u_values,
                   tuple(v(p.x) for p in points),
                   tuple(h(p.x) for p in points))

    def __len__(self) -> int:
        return len(self.points)


@dataclass
class GeneratorMatrix:
    """A k x n generator matrix; the first ``x_rows`` rows evaluate powers
    of x, the remaining ones the generator function times powers of x."""

    rows: tuple[tuple[FieldElement, ...], ...]
    k: int
    n: int
    x_rows: int
    field: Field
    genus: int
    notes: list[str] = dataclass_field(default_factory=list)

    def column(self, s: int) -> tuple[FieldElement, ...]:
        return tuple(row[s] for row in self.rows)

    def as_lists(self) -> list[list[int]]:
        return [[entry.as_int() for entry in row] for row in self.rows]


def generator_matrix(u: Polynomial, v: Polynomial, h: Polynomial | None,
                     g: int, k: int,
                     points: Sequence[AffinePoint] | EvaluationSet) -> GeneratorMatrix:
    """The k x n matrix of basis evaluations for L(div(u,v) + (k+g-1)*Inf).

    Row r (1-based) evaluates x^(r-1) while r <= eta + 1 with
    eta = floor((k + g - 1 - t)/2); above that it evaluates
    G(x, y) * x^(r - eta - 2) with G = (y + v + h)/u, so the generator
    multiples carry exponents 0, 1, ..., k - eta - 2.  For k < g - t + 2
    every row is a power of x and the code is Reed-Solomon on the
    x-coordinates.
    """
    field = u.field
    if h is None:
        h = Polynomial.zero(field)
    t = _check_pair(u, v, h, g)
    if not isinstance(points, EvaluationSet):
        points = EvaluationSet.build(u, v, h, points)
    n = len(points)
    if not 1 <= k < n:
        raise KOutOfRangeError(f"need 1 <= k < n = {n}, got k = {k}")
    m = k + g - 1
    d = 2 * g + 1
    eta = (k + g - 1 - t) // 2
    notes = []
    # over a field this small, distinct basis monomials repeat values
    if field.order <= (m - t) // 2 or (m >= d - t
                                       and field.order <= (m - (d - t)) // 2):
        notes.append(
            f"field of order {field.order} duplicates basis rows "
            f"(x and x^{field.order} agree on every rational point)")
        warnings.warn(notes[-1], DuplicateEvaluationWarning)

    xs = [p.x for p in points.points]
    generator_values = [
        (p.y + v_val + h_val) / u_val
        for p, u_val, v_val, h_val in zip(points.points, points.u_values,
                                          points.v_values, points.h_values)]
    rows = []
    for r in range(1, k + 1):
        if r <= eta + 1:
            rows.append(tuple(x ** (r - 1) for x in xs))
        else:
            j = r - eta - 2
            rows.append(tuple(gval * x ** j
                              for gval, x in zip(generator_values, xs)))
    return GeneratorMatrix(tuple(rows), k, n, min(k, eta + 1), field, g, notes)


def with_opposites(points: Sequence[AffinePoint],
                   h: Polynomial | None = None) -> list[AffinePoint]:
    """Expand each point to the adjacent pair (x, y), (x, -y - h(x))."""
    out = []
    for point in points:
        hx = h(point.x) if h else point.x.field.zero()
        out.append(point)
        out.append(AffinePoint(point.x, -point.y - hx))
    return out


def encode(matrix: GeneratorMatrix, message: Sequence) -> list[FieldElement]:
    """The codeword message * G."""
    field = matrix.field
    coeffs = [field.element(x) for x in message]
    if len(coeffs) != matrix.k:
        raise LengthMismatchError(
            f"message length {len(coeffs)} != k = {matrix.k}")
    zero = field.zero()
    return [sum((c * row[s] for c, row in zip(coeffs, matrix.rows)), zero)
            for s in range(matrix.n)]


def mds_check(matrix: GeneratorMatrix) -> bool:
    """Whether every k x k minor is nonsingular (the MDS property).

    When true, the minimum distance meets the Singleton bound n - k + 1.
    """
    k, n = matrix.k, matrix.n
    if k > n:
        raise KOutOfRangeError("more rows than columns")
    if math.comb(n, k) > MINOR_BUDGET:
        raise TooManyMinorsError(f"{math.comb(n, k)} minors exceed the budget")
    for cols in itertools.combinations(range(n), k):
        minor = [[row[s] for s in cols] for row in matrix.rows]
        if not is_nonsingular(minor):
            return False
    return True


def min_distance_bruteforce(matrix: GeneratorMatrix) -> int:
    """Exact minimum weight over all nonzero codewords.

    Messages are enumerated up to scalar multiples (weight is invariant),
    so the search visits (q^k - 1)/(q - 1) codewords.
    """
    field = matrix.field
    k, n = matrix.k, matrix.n
    if field.order ** k > CODEWORD_BUDGET:
        raise SearchSpaceTooLargeError(
            f"{field.order}^{k} codewords exceed the budget")
    best = n
    elements = list(field.elements())
    zero = field.zero()
    for lead in range(k):
        # first nonzero coordinate normalized to 1
        for tail in itertools.product(elements, repeat=k - lead - 1):
            message = (zero,) * lead + (field.one(),) + tail
            weight = sum(1 for s in range(n)
                         if sum((c * row[s] for c, row in zip(message, matrix.rows)),
                                zero))
            if weight < best:
                best = weight
                if best == 0:
                    return 0
    return best


def rs_coincidence_check(u: Polynomial, v: Polynomial, g: int, k: int,
                         points: Sequence[AffinePoint],
                         h: Polynomial | None = None) -> bool:
    """Whether the code equals the Reed-Solomon code on the x-coordinates,
    i.e. whether the generator matrix is exactly the k x n Vandermonde
    matrix of the points' abscissae (always the case for k < g - t + 2)."""
    matrix = generator_matrix(u, v, h, g, k, points)
    xs = [p.x for p in points]
    vandermonde = tuple(tuple(x ** r for x in xs) for r in range(k))
    return matrix.rows == vandermonde


def fit_curve(u: Polynomial, v: Polynomial, h: Polynomial | None, g: int,
              points: Sequence[AffinePoint]) -> HyperellipticCurve:
    """A genus-g curve through the given points and the support of (u, v).

    Needs exactly 2g + 2 - t points with pairwise distinct x-coordinates
    away from the roots of u: that pins the interpolating polynomial c of
    degree 2g + 1 - t, hence the equation.  Raises NonMonicModelError when
    the data forces a non-monic equation (perturb a free point, or use
    :func:`fit_curve_padded` which arranges monicity), and SingularCurveError
    when the fitted equation is singular.
    """
    field = u.field
    if h is None:
        h = Polynomial.zero(field)
    t = _check_pair(u, v, h, g)
    needed = 2 * g + 2 - t
    if len(points) != needed:
        raise WrongPointCountError(
            f"need exactly {needed} points, got {len(points)}")
    xs = [p.x for p in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissaError("points share an x-coordinate")
    nodes = []
    for point in points:
        u_val = u(point.x)
        if not u_val:
            raise UOnSupportError(f"u vanishes at {point}")
        v_val, h_val = v(point.x), h(point.x)
        nodes.append((point.x,
                      (v_val * v_val + h_val * v_val
                       - point.y * point.y - point.y * h_val) / u_val))
    c = interpolate(field, nodes, degree_cap=2 * g + 1 - t)
    f = v * v + h * v - c * u
    if f.degree != 2 * g + 1 or not f.is_monic():
        raise NonMonicModelError(
            f"fitted equation has degree {f.degree} and leading "
            f"coefficient {f.leading_coefficient()!r}; the model needs a "
            f"monic polynomial of degree {2 * g + 1}")
    curve = HyperellipticCurve(field, f, h if h else None)
    for point in points:
        assert curve.contains(point)
    return curve


def fit_curve_padded(u: Polynomial, v: Polynomial, h: Polynomial | None,
                     g: int, points: Sequence[AffinePoint],
                     max_tries: int = 500) -> tuple[HyperellipticCurve, list[AffinePoint]]:
    """Fit a curve through fewer than 2g + 2 - t points by choosing the rest.

    Auxiliary points take the smallest unused x-coordinates with
    u(x) != 0; their y-values are picked deterministically, and the last
    one is solved so the leading coefficient of the equation comes out
    monic.  Retries bump the free values when the last point does not
    exist over the field or the equation comes out singular.  Returns the
    curve together with the auxiliary points used.
    """
    field = u.field
    if h is None:
        h = Polynomial.zero(field)
    t = _check_pair(u, v, h, g)
    needed = 2 * g + 2 - t
    if len(points) >= needed:
        raise WrongPointCountError(
            f"already have {len(points)} of {needed} points; call fit_curve")
    if len({p.x for p in points}) != len(points):
        raise DuplicateAbscissaError("points share an x-coordinate")
    used = {p.x for p in points}
    free_x: list[FieldElement] = []
    for x0 in field.elements():
        if len(free_x) == needed - len(points):
            break
        if x0 not in used and u(x0):
            free_x.append(x0)
    if len(free_x) < needed - len(points):
        raise WrongPointCountError("field too small for the auxiliary points")

    # leading coefficient of the interpolating c is a linear form in the
    # node values: lc = sum value_i / prod_{j != i} (x_i - x_j)
    all_x = [p.x for p in points] + free_x
    inverse_weights = []
    for i, xi in enumerate(all_x):
        w = field.one()
        for j, xj in enumerate(all_x):
            if i != j:
                w = w * (xi - xj)
        inverse_weights.append(w.inverse())

    def node_value(x0, y0):
        v_val, h_val = v(x0), h(x0)
        return (v_val * v_val + h_val * v_val - y0 * y0 - y0 * h_val) / u(x0)

    fixed = sum((node_value(p.x, p.y) * w
                 for p, w in zip(points, inverse_weights)),
                field.zero())
    for attempt in range(max_tries):
        free_y = [field.from_int((i + 1 + attempt) % field.order)
                  for i in range(len(free_x) - 1)]
        partial = fixed + sum(
            (node_value(x0, y0) * w for x0, y0, w in
             zip(free_x, free_y, inverse_weights[len(points):])),
            field.zero())
        # solve the last node value so that lc(c) = -1, then find a point
        # of the would-be curve over the last abscissa
        last_x = free_x[-1]
        last_weight = inverse_weights[-1]
        target = (-field.one() - partial) / last_weight
        v_val, h_val = v(last_x), h(last_x)
        w_val = v_val * v_val + h_val * v_val - target * u(last_x)
        ys = solve_y_quadratic(field, h_val, w_val)
        if not ys:
            continue
        aux = [AffinePoint(x0, y0) for x0, y0 in zip(free_x, free_y)]
        aux.append(AffinePoint(last_x, ys[0]))
        try:
            curve = fit_curve(u, v, h, g, list(points) + aux)
        except (SingularCurveError, NonMonicModelError):
            continue
        return curve, aux
    raise SingularCurveError(f"no smooth monic fit found in {max_tries} tries")
