import math
import random

import pytest

from hyperroch import (
    AffinePoint,
    EvaluationSet,
    Field,
    MumfordDivisor,
    encode,
    fit_curve,
    fit_curve_padded,
    generator_matrix,
    mds_check,
    min_distance_bruteforce,
    rr_basis,
    rr_dim,
    rs_coincidence_check,
    with_opposites,
)
from hyperroch.errors import (
    DuplicateAbscissaError,
    DuplicateEvaluationWarning,
    KOutOfRangeError,
    LengthMismatchError,
    NonMonicModelError,
    SearchSpaceTooLargeError,
    SingularCurveError,
    TooManyMinorsError,
    UOnSupportError,
    WrongPointCountError,
)
from hyperroch.goppa import GeneratorMatrix
from hyperroch.linalg import rank
from hyperroch.polynomial import Polynomial


def pairs_match(ours, reference):
    """Column pairs may appear in either (y, -y) order; compare pairwise."""
    assert len(ours[0]) == len(reference[0])
    for j in range(len(ours[0]) // 2):
        mine = {tuple(row[2 * j] for row in ours),
                tuple(row[2 * j + 1] for row in ours)}
        theirs = {tuple(row[2 * j] for row in reference),
                  tuple(row[2 * j + 1] for row in reference)}
        if mine != theirs:
            return False
    return True


def test_generator_matrix_reference(code101):
    code_points = with_opposites(code101["base_points"])
    matrix = generator_matrix(code101["u"], code101["v"], None,
                              code101["g"], code101["k"], code_points)
    assert matrix.k == 5 and matrix.n == 10 and matrix.x_rows == 3
    assert list(matrix.rows[0]) == [code101["field"].one()] * 10
    assert pairs_match(matrix.as_lists(), code101["reference_matrix"])


def test_generator_matrix_equals_basis_evaluations(code101):
    curve = fit_curve(code101["u"], code101["v"], None, code101["g"],
                      code101["base_points"] + code101["aux_points"])
    delta = MumfordDivisor(curve, code101["u"], code101["v"])
    basis = rr_basis(delta, code101["k"] + code101["g"] - 1)
    code_points = with_opposites(code101["base_points"])
    matrix = generator_matrix(code101["u"], code101["v"], None,
                              code101["g"], code101["k"], code_points)
    for row, func in zip(matrix.rows, basis.elements):
        assert list(row) == [func.evaluate(p) for p in code_points]


def test_row_count_matches_dimension():
    field = Field(13)
    u = Polynomial(field, [3, 1])       # one affine point
    v = Polynomial(field, [4])
    points = [AffinePoint(field.element(x), field.element(x + 1))
              for x in range(0, 9)]
    for g in (1, 2, 3):
        t = 1
        for k in range(max(1, g - t + 2), 8):
            matrix = generator_matrix(u, v, None, g, k, points)
            assert matrix.k == k == rr_dim(t, k + g - 1, g)


def test_uonsupport_and_krange(code101, gf101):
    bad = [AffinePoint(gf101.element(100), gf101.element(2))]  # u(-1) = 0
    with pytest.raises(UOnSupportError):
        EvaluationSet.build(code101["u"], code101["v"],
                            Polynomial.zero(gf101),
                            code101["base_points"] + bad)
    code_points = with_opposites(code101["base_points"])
    with pytest.raises(KOutOfRangeError):
        generator_matrix(code101["u"], code101["v"], None, 11, 0, code_points)
    with pytest.raises(KOutOfRangeError):
        generator_matrix(code101["u"], code101["v"], None, 11, 10, code_points)


def test_duplicate_point_warning(code101):
    pts = with_opposites(code101["base_points"])
    pts[1] = pts[0]
    with pytest.warns(DuplicateEvaluationWarning):
        generator_matrix(code101["u"], code101["v"], None, 11, 5, pts)


def test_small_field_row_collision_warning():
    field = Field(3)
    u, v = Polynomial.one(field), Polynomial.zero(field)
    points = [AffinePoint(field.element(x), field.element(y))
              for x, y in [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)]]
    # m = k + g - 1 = 10 and q = 3 <= (m - t)/2 = 5: x and x^3 rows agree
    with pytest.warns(DuplicateEvaluationWarning):
        matrix = generator_matrix(u, v, None, 7, 4, points)
    rows = matrix.as_lists()
    assert rows[1] == rows[3]   # x and x^3 take equal values on GF(3)


def test_encode(code101):
    code_points = with_opposites(code101["base_points"])
    matrix = generator_matrix(code101["u"], code101["v"], None, 11, 5,
                              code_points)
    field = code101["field"]
    assert encode(matrix, [0] * 5) == [field.zero()] * 10
    assert encode(matrix, [1, 0, 0, 0, 0]) == list(matrix.rows[0])
    word = encode(matrix, [1, 1, 0, 0, 0])
    assert [w.lift() for w in word[:2]] == [16, 16]
    with pytest.raises(LengthMismatchError):
        encode(matrix, [1, 2, 3])


def test_mds_check_cases(gf7):
    # an all-ones row with distinct columns is MDS with distance n
    ones = GeneratorMatrix((tuple(gf7.one() for _ in range(4)),), 1, 4, 1,
                           gf7, 0)
    assert mds_check(ones)
    assert min_distance_bruteforce(ones) == 4
    # a repeated column breaks the property
    x_row = (gf7.element(1), gf7.element(2), gf7.element(2), gf7.element(5))
    bad = GeneratorMatrix((tuple(gf7.one() for _ in range(4)), x_row),
                          2, 4, 2, gf7, 0)
    assert not mds_check(bad)


def test_mds_budget():
    field = Field(5)
    rows = tuple(tuple(field.element((i * j + i) % 5) for j in range(40))
                 for i in range(15))
    big = GeneratorMatrix(rows, 15, 40, 15, field, 0)
    assert math.comb(40, 15) > 10 ** 6
    with pytest.raises(TooManyMinorsError):
        mds_check(big)


def test_min_distance_repetition_code():
    field = Field(3)
    rows = (tuple(field.one() for _ in range(3)),)
    rep = GeneratorMatrix(rows, 1, 3, 1, field, 0)
    assert min_distance_bruteforce(rep) == 3


def test_min_distance_budget():
    field = Field(101)
    rows = tuple(tuple(field.element(i + j) for j in range(10))
                 for i in range(5))
    matrix = GeneratorMatrix(rows, 5, 10, 5, field, 0)
    with pytest.raises(SearchSpaceTooLargeError):
        min_distance_bruteforce(matrix)


def test_min_distance_singleton_bound_random():
    rng = random.Random(6)
    field = Field(5)
    for _ in range(10):
        k, n = 2, 6
        rows = tuple(tuple(field.random_element(rng) for _ in range(n))
                     for _ in range(k))
        matrix = GeneratorMatrix(rows, k, n, k, field, 0)
        assert min_distance_bruteforce(matrix) <= n - k + 1


def test_rs_coincidence(gf7):
    u, v = Polynomial.one(gf7), Polynomial.zero(gf7)
    points = [AffinePoint(gf7.element(x), gf7.element(1)) for x in range(6)]
    g = 3
    # t = 0: pure Vandermonde while k < g + 2
    for k in range(1, g + 2):
        assert rs_coincidence_check(u, v, g, k, points)
    assert not rs_coincidence_check(u, v, g, g + 2, points)


def test_fit_curve_reference(code101):
    points = code101["base_points"] + code101["aux_points"]
    curve = fit_curve(code101["u"], code101["v"], None, code101["g"], points)
    assert curve.genus == 11 and curve.f.degree == 23 and curve.f.is_monic()
    for p in points:
        assert curve.contains(p)
    field = code101["field"]
    assert not curve.contains(AffinePoint(field.element(15),
                                          field.element(46)))
    # the divisor support lies on the curve: u | v^2 - f
    delta = MumfordDivisor(curve, code101["u"], code101["v"])
    assert delta.weight == 11
    # the one rational support point
    root = field.element(100)
    assert curve.contains(AffinePoint(root, code101["v"](root)))
    # the interpolating polynomial behind the fit has full degree 2g+1-t
    # and reproduces every node value
    c = (code101["v"] * code101["v"] - curve.f) // code101["u"]
    assert c.degree == 12
    for p in points:
        assert c(p.x) == (code101["v"](p.x) ** 2 - p.y * p.y) / code101["u"](p.x)


def test_fit_curve_point_count_and_duplicates(code101):
    with pytest.raises(WrongPointCountError):
        fit_curve(code101["u"], code101["v"], None, code101["g"],
                  code101["base_points"])
    doubled = code101["base_points"] + code101["aux_points"][:-1] \
        + [code101["aux_points"][0]]
    with pytest.raises(DuplicateAbscissaError):
        fit_curve(code101["u"], code101["v"], None, code101["g"], doubled)


def test_fit_curve_singular_data(gf7):
    # node values engineered so the equation comes out (x-1)^2 (x-2)
    x = Polynomial.x(gf7)
    target = (x - 1) ** 2 * (x - 2)
    points = []
    for x0 in (1, 2, 3, 4):
        y0 = target(gf7.element(x0)).sqrt()
        assert y0 is not None
        points.append(AffinePoint(gf7.element(x0), y0))
    with pytest.raises(SingularCurveError):
        fit_curve(Polynomial.one(gf7), Polynomial.zero(gf7), None, 1, points)


def test_fit_curve_nonmonic_data(gf7):
    # forcing leading coefficient 3: equation 3 x^3 cannot be monic
    target = Polynomial(gf7, [1, 0, 0, 3])
    points = []
    for x0 in (0, 1, 2, 4):
        y0 = target(gf7.element(x0)).sqrt()
        assert y0 is not None, x0
        points.append(AffinePoint(gf7.element(x0), y0))
    with pytest.raises(NonMonicModelError):
        fit_curve(Polynomial.one(gf7), Polynomial.zero(gf7), None, 1, points)


def test_fit_curve_t0_collapse(gf7):
    # with u = 1, v = 0 the equation is y^2 = -c(x), so f(x_s) = y_s^2
    curve, aux = fit_curve_padded(Polynomial.one(gf7), Polynomial.zero(gf7),
                                  None, 1, [])
    assert curve.genus == 1
    for p in aux:
        assert curve.f(p.x) == p.y * p.y


def test_fit_curve_padded_genus2_t1(genus2_gf7, gf7):
    # a weight-1 pair on some genus-2 curve: 5-point fit
    point = AffinePoint(gf7.element(1), gf7.element(3))
    u = Polynomial(gf7, [-1, 1])
    v = Polynomial(gf7, [3])
    code_point = AffinePoint(gf7.element(0), gf7.element(2))
    curve, aux = fit_curve_padded(u, v, None, 2, [code_point])
    assert curve.genus == 2
    assert curve.contains(code_point)
    assert len(aux) == 4
    MumfordDivisor(curve, u, v)   # support divisibility holds


def test_char2_code_internal_invariants():
    # no published values exist for characteristic 2, so the checks are
    # structural: row count, dimension, and the designed distance window
    field = Field(2, 3)
    x = Polynomial.x(field)
    u, v, h = Polynomial.one(field), Polynomial.zero(field), x
    g, t = 2, 0
    curve, aux = fit_curve_padded(u, v, h, g, [])
    assert curve.field.p == 2 and curve.genus == 2 and curve.h == x
    points = [p for p in curve.points()][:6]
    n = len(points)
    assert n == 6
    k = 4       # g - t + 2
    matrix = generator_matrix(u, v, h, g, k, points)
    assert matrix.k == k == rr_dim(t, k + g - 1, g)
    from hyperroch.linalg import rank
    assert rank(matrix.rows) == k
    distance = min_distance_bruteforce(matrix)
    assert n - k + 1 - g <= distance <= n - k + 1
    # the generator rows really use (y + v + h)/u
    delta = MumfordDivisor(curve, u, v)
    from hyperroch import basis_generator
    gen = basis_generator(delta)
    assert list(matrix.rows[matrix.x_rows]) == \
        [gen.evaluate(p) for p in points]


def test_char2_weight_one_fit_over_gf8():
    field = Field(2, 3)
    x = Polynomial.x(field)
    u, v, h = x + 1, Polynomial(field, [field.from_int(2)]), x
    curve, aux = fit_curve_padded(u, v, h, 2, [])
    assert curve.genus == 2 and curve.h == x
    delta = MumfordDivisor(curve, u, v)
    assert delta.weight == 1
    assert curve.contains(AffinePoint(field.one(), v(field.one())))
    points = [p for p in curve.points() if u(p.x)][:6]
    n, k = len(points), 3
    matrix = generator_matrix(u, v, h, 2, k, points)
    from hyperroch.linalg import rank
    assert rank(matrix.rows) == k
    distance = min_distance_bruteforce(matrix)
    assert n - k + 1 - 2 <= distance <= n - k + 1


def test_goppa_bounds_on_fitted_code(gf7):
    # k x n evaluation code on a genus-2 curve: distance within the
    # designed window n - k + 1 - g <= d <= n - k + 1
    u = Polynomial(gf7, [-1, 1])
    v = Polynomial(gf7, [3])
    curve, aux = fit_curve_padded(u, v, None, 2, [])
    candidates = [p for p in curve.points() if u(p.x)]
    points = candidates[:6]
    n = len(points)
    assert n == 6
    for k in range(3, 5):      # k >= g - t + 2 = 3
        matrix = generator_matrix(u, v, None, 2, k, points)
        assert rank(matrix.rows) == k
        distance = min_distance_bruteforce(matrix)
        assert n - k + 1 - 2 <= distance <= n - k + 1
