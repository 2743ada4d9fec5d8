"""Command-line front end.

Exit codes: 0 success (or a true verdict), 1 false verdict, 2 validation
error, 3 split-support limitation, 4 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .divisor import reduce_divisor
from .errors import AlgebraError, NonSplitSupportError
from .files import (
    curve_from_json,
    curve_to_json,
    function_from_text,
    function_to_text,
    general_divisor_from_json,
    matrix_from_csv,
    matrix_to_csv,
    mumford_from_json,
    mumford_to_json,
    points_from_json,
    poly_from_json,
)
from .finite_field import Field
from .goppa import (
    encode,
    fit_curve,
    fit_curve_padded,
    generator_matrix,
    mds_check,
    min_distance_bruteforce,
)
from .riemann_roch import has_generic_dimension, membership_check, rr_basis, rr_dim

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_VALIDATION = 2
EXIT_NONSPLIT = 3
EXIT_IO = 4


def _read_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _write_text(path: str | None, text: str) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _parse_field(text: str, modulus: str | None) -> Field:
    parts = [int(x) for x in text.split(",")]
    p = parts[0]
    c = parts[1] if len(parts) > 1 else 1
    mod = json.loads(modulus) if modulus else None
    return Field(p, c, mod)


def _parse_coeffs(field: Field, text: str):
    text = text.strip()
    data = json.loads(text) if text.startswith("[") else \
        [int(x) for x in text.split(",") if x.strip()]
    return poly_from_json(field, data)


def cmd_reduce(args) -> int:
    curve = curve_from_json(_read_json(args.curve))
    divisor = general_divisor_from_json(curve, _read_json(args.divisor))
    result = reduce_divisor(divisor, curve)
    payload = mumford_to_json(result.delta, result.m)
    payload["psi"] = function_to_text(result.witness)
    _write_text(args.out, json.dumps(payload, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_basis(args) -> int:
    curve = curve_from_json(_read_json(args.curve))
    delta, m = mumford_from_json(curve, _read_json(args.divisor))
    if args.m is not None:
        m = args.m
    if m is None:
        raise AlgebraError("no m given (neither in the divisor file nor --m)")
    basis = rr_basis(delta, m)
    lines = [function_to_text(el) for el in basis.elements]
    lines.append(f"dim {len(basis)}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_dim(args) -> int:
    if args.table:
        lines = ["t,m,dim,generic"]
        for t in range(args.g + 1) if args.t is None else [args.t]:
            for m in range(args.m_max + 1):
                lines.append(f"{t},{m},{rr_dim(t, m, args.g)},"
                             f"{int(has_generic_dimension(t, m, args.g))}")
        _write_text(args.out, "\n".join(lines) + "\n")
        return EXIT_OK
    if args.t is None or args.m is None:
        raise AlgebraError("dim needs --t and --m (or --table with --m-max)")
    _write_text(args.out, f"{rr_dim(args.t, args.m, args.g)}\n")
    return EXIT_OK


def cmd_fit_curve(args) -> int:
    field = _parse_field(args.field, args.modulus)
    u = _parse_coeffs(field, args.u)
    v = _parse_coeffs(field, args.v)
    h = _parse_coeffs(field, args.h) if args.h else None
    points = points_from_json(field, _read_json(args.points))
    if args.pad:
        curve, extra = fit_curve_padded(u, v, h, args.g, points)
        sys.stderr.write(f"auxiliary points: "
                         f"{[[p.x.as_int(), p.y.as_int()] for p in extra]}\n")
    else:
        curve = fit_curve(u, v, h, args.g, points)
    _write_text(args.out, json.dumps(curve_to_json(curve), sort_keys=True) + "\n")
    return EXIT_OK


def cmd_goppa(args) -> int:
    field = _parse_field(args.field, args.modulus)
    u = _parse_coeffs(field, args.u)
    v = _parse_coeffs(field, args.v)
    h = _parse_coeffs(field, args.h) if args.h else None
    points = points_from_json(field, _read_json(args.points))
    matrix = generator_matrix(u, v, h, args.g, args.k, points)
    _write_text(args.out, matrix_to_csv(matrix))
    return EXIT_OK


def cmd_encode(args) -> int:
    field = _parse_field(args.field, args.modulus)
    with open(args.matrix, "r", encoding="utf-8") as handle:
        matrix = matrix_from_csv(handle.read(), field)
    message = [int(x) for x in args.message.split(",")]
    word = encode(matrix, [field.from_int(x) for x in message])
    _write_text(args.out, ",".join(str(x.as_int()) for x in word) + "\n")
    return EXIT_OK


def cmd_mds_check(args) -> int:
    field = _parse_field(args.field, args.modulus)
    with open(args.matrix, "r", encoding="utf-8") as handle:
        matrix = matrix_from_csv(handle.read(), field)
    if mds_check(matrix):
        _write_text(args.out,
                    f"MDS [{matrix.n},{matrix.k},{matrix.n - matrix.k + 1}]\n")
        return EXIT_OK
    _write_text(args.out, "not MDS\n")
    return EXIT_FALSE


def cmd_mindist(args) -> int:
    field = _parse_field(args.field, args.modulus)
    with open(args.matrix, "r", encoding="utf-8") as handle:
        matrix = matrix_from_csv(handle.read(), field)
    _write_text(args.out, f"{min_distance_bruteforce(matrix)}\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    curve = curve_from_json(_read_json(args.curve))
    delta, m = mumford_from_json(curve, _read_json(args.divisor))
    if args.m is not None:
        m = args.m
    if m is None:
        raise AlgebraError("no m given (neither in the divisor file nor --m)")
    func = function_from_text(curve, args.function)
    verdict = membership_check(func, delta, m)
    _write_text(args.out, ("member" if verdict else "not a member") + "\n")
    return EXIT_OK if verdict else EXIT_FALSE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperroch",
        description="Riemann-Roch bases from Mumford pairs, and Goppa codes")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, **flags):
        cmd = sub.add_parser(name)
        for flag, kwargs in flags.items():
            cmd.add_argument(f"--{flag.replace('_', '-')}", **kwargs)
        cmd.set_defaults(func=func)
        return cmd

    add("reduce", cmd_reduce,
        curve={"required": True}, divisor={"required": True}, out={})
    add("basis", cmd_basis,
        curve={"required": True}, divisor={"required": True},
        m={"type": int}, out={})
    add("dim", cmd_dim,
        g={"type": int, "required": True}, t={"type": int},
        m={"type": int}, m_max={"type": int, "default": 0},
        table={"action": "store_true"}, out={})
    add("fit-curve", cmd_fit_curve,
        points={"required": True}, u={"required": True}, v={"required": True},
        g={"type": int, "required": True}, h={}, field={"required": True},
        modulus={}, pad={"action": "store_true"}, out={})
    add("goppa", cmd_goppa,
        points={"required": True}, u={"required": True}, v={"required": True},
        g={"type": int, "required": True}, k={"type": int, "required": True},
        h={}, field={"required": True}, modulus={}, out={})
    add("encode", cmd_encode,
        matrix={"required": True}, message={"required": True},
        field={"required": True}, modulus={}, out={})
    add("mds-check", cmd_mds_check,
        matrix={"required": True}, field={"required": True}, modulus={}, out={})
    add("mindist", cmd_mindist,
        matrix={"required": True}, field={"required": True}, modulus={}, out={})
    add("verify", cmd_verify,
        curve={"required": True}, divisor={"required": True},
        function={"required": True}, m={"type": int}, out={})
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonSplitSupportError as err:
        sys.stderr.write(f"split-support limitation: {err}\n")
        return EXIT_NONSPLIT
    except AlgebraError as err:
        sys.stderr.write(f"validation error: {err}\n")
        return EXIT_VALIDATION
    except ZeroDivisionError as err:
        sys.stderr.write(f"validation error: {err}\n")
        return EXIT_VALIDATION
    except (OSError, json.JSONDecodeError) as err:
        sys.stderr.write(f"i/o error: {err}\n")
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
