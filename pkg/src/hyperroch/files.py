"""JSON and CSV formats for the command-line layer.

Field elements serialize as plain integers over a prime field and as
ascending residue lists over an extension; polynomials as ascending
coefficient arrays of those.  Matrices travel as integer CSV with a
one-line ``# [n,k] over GF(...)`` header.  Function-field elements render
as ``(a + b*y)/den`` with explicit coefficient lists, and the rendering
parses back (round-trippable).
"""

from __future__ import annotations

import json
from typing import Sequence

from .curve import AffinePoint, HyperellipticCurve
from .divisor import GeneralDivisor, MumfordDivisor
from .errors import AlgebraError
from .finite_field import Field, FieldElement
from .function_field import FunctionFieldElement
from .goppa import GeneratorMatrix
from .polynomial import Polynomial


# -- field elements and polynomials -----------------------------------------

def element_to_json(el: FieldElement):
    if el.field.c == 1:
        return el.coeffs[0]
    return list(el.coeffs)


def element_from_json(field: Field, data) -> FieldElement:
    return field.element(data)


def poly_to_json(poly: Polynomial) -> list:
    return [element_to_json(c) for c in poly.coeffs]


def poly_from_json(field: Field, data: Sequence) -> Polynomial:
    return Polynomial(field, [field.element(c) for c in data])


# -- fields and curves --------------------------------------------------------

def field_to_json(field: Field) -> dict:
    return {"p": field.p, "c": field.c,
            "modulus": list(field.modulus) if field.modulus else []}


def field_from_json(data: dict) -> Field:
    modulus = data.get("modulus") or None
    return Field(int(data["p"]), int(data.get("c", 1)), modulus)


def curve_to_json(curve: HyperellipticCurve) -> dict:
    return {"field": field_to_json(curve.field),
            "f": poly_to_json(curve.f),
            "h": poly_to_json(curve.h)}


def curve_from_json(data: dict) -> HyperellipticCurve:
    field = field_from_json(data["field"])
    f = poly_from_json(field, data["f"])
    h = poly_from_json(field, data.get("h", []))
    return HyperellipticCurve(field, f, h if h else None)


# -- divisors -----------------------------------------------------------------

def mumford_to_json(divisor: MumfordDivisor, m: int | None = None) -> dict:
    out = {"u": poly_to_json(divisor.u), "v": poly_to_json(divisor.v)}
    if m is not None:
        out["m"] = m
    return out


def mumford_from_json(curve: HyperellipticCurve, data: dict) -> tuple[MumfordDivisor, int | None]:
    field = curve.field
    u = poly_from_json(field, data["u"])
    v = poly_from_json(field, data["v"])
    m = data.get("m")
    return MumfordDivisor(curve, u, v), (int(m) if m is not None else None)


def general_divisor_from_json(curve: HyperellipticCurve, data: dict) -> GeneralDivisor:
    field = curve.field
    terms = []
    for entry in data["points"]:
        if len(entry) == 2:
            x, y = entry
            mult, sign = 1, 1
        else:
            x, y, mult, sign = entry
        point = AffinePoint(field.element(x), field.element(y))
        terms.append((point, int(mult) * int(sign)))
    return GeneralDivisor(terms, int(data.get("omega", 0)))


def points_from_json(field: Field, data: dict) -> list[AffinePoint]:
    return [AffinePoint(field.element(x), field.element(y))
            for x, y in data["points"]]


def points_to_json(points: Sequence[AffinePoint]) -> dict:
    return {"points": [[element_to_json(p.x), element_to_json(p.y)]
                       for p in points]}


# -- matrices -----------------------------------------------------------------

def matrix_to_csv(matrix: GeneratorMatrix) -> str:
    lines = [f"# [{matrix.n},{matrix.k}] over {matrix.field!r}"]
    for row in matrix.rows:
        lines.append(",".join(str(entry.as_int()) for entry in row))
    return "\n".join(lines) + "\n"


def matrix_from_csv(text: str, field: Field) -> GeneratorMatrix:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        rows.append(tuple(field.from_int(int(cell))
                          for cell in line.split(",")))
    if not rows:
        raise AlgebraError("matrix CSV contains no rows")
    n = len(rows[0])
    if any(len(row) != n for row in rows):
        raise AlgebraError("ragged matrix CSV")
    return GeneratorMatrix(tuple(rows), len(rows), n, 0, field, 0)


# -- function rendering ---------------------------------------------------------

def function_to_text(func: FunctionFieldElement) -> str:
    a = json.dumps(poly_to_json(func.a))
    b = json.dumps(poly_to_json(func.b))
    den = json.dumps(poly_to_json(func.den))
    return f"({a} + {b}*y)/{den}"


def _split_top_level(text: str, sep: str) -> list[str]:
    parts, depth, start = [], 0, 0
    i = 0
    while i < len(text):
        ch = text[i]
        if ch in "[(":
            depth += 1
        elif ch in "])":
            depth -= 1
        elif depth == 0 and text.startswith(sep, i):
            parts.append(text[start:i])
            i += len(sep)
            start = i
            continue
        i += 1
    parts.append(text[start:])
    return parts


def _load_fragment(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise AlgebraError(f"cannot parse {text!r} in a function") from err


def function_from_text(curve: HyperellipticCurve, text: str) -> FunctionFieldElement:
    text = text.strip()
    if text.startswith("{"):
        data = _load_fragment(text)
        return FunctionFieldElement(
            curve,
            poly_from_json(curve.field, data.get("a", [])),
            poly_from_json(curve.field, data.get("b", [])),
            poly_from_json(curve.field, data.get("den", [1])))
    if not text.startswith("("):
        raise AlgebraError(f"cannot parse function {text!r}")
    depth = 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                numerator, rest = text[1:i], text[i + 1:]
                break
    else:
        raise AlgebraError("unbalanced parentheses in function text")
    rest = rest.strip()
    if not rest.startswith("/"):
        raise AlgebraError("function text needs a /denominator part")
    den = _load_fragment(rest[1:].strip())
    halves = _split_top_level(numerator, " + ")
    if len(halves) != 2 or not halves[1].strip().endswith("*y"):
        raise AlgebraError(f"cannot parse numerator {numerator!r}")
    a = _load_fragment(halves[0].strip())
    b = _load_fragment(halves[1].strip()[:-2])
    return FunctionFieldElement(
        curve,
        poly_from_json(curve.field, a),
        poly_from_json(curve.field, b),
        poly_from_json(curve.field, den))
