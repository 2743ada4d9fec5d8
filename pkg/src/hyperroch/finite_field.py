"""Exact arithmetic in GF(p) and GF(p^c).

A :class:`Field` describes the ambient field: the prime ``p``, the extension
degree ``c`` and, for ``c > 1``, a monic irreducible modulus of degree ``c``
over GF(p).  Elements are stored as tuples of ``c`` least-nonnegative residues
(constant term first), so equality is plain tuple comparison.

Both classes are immutable and safe to share across threads.
"""

from __future__ import annotations

import functools
from typing import Iterator, Optional, Sequence, Union

from .errors import (
    CompositeModulusError,
    FieldMismatchError,
    ReducibleModulusError,
)

# Products of residues must fit comfortably in machine words on any backend.
MAX_PRIME = 1 << 61

_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for every n below 3.3 * 10^24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Integer-tuple polynomial arithmetic over GF(p), used only for the modulus.
# Coefficient order is constant-first, trailing zeros trimmed.
# ---------------------------------------------------------------------------

def _ztrim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _zmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ztrim(out)


def _zsub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    return _ztrim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                   for i in range(n)])


def _zdivmod(a: Sequence[int], b: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    a = list(a)
    q = [0] * max(0, len(a) - len(b) + 1)
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b) and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        q[shift] = coef
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - coef * bi) % p
        _ztrim(a)
    return _ztrim(q), a


def _zmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    return _zdivmod(a, b, p)[1]


def _zgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _ztrim(list(a)), _ztrim(list(b))
    while b:
        a, b = b, _zmod(a, b, p)
    return a


def _zpowmod(base: Sequence[int], exp: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _zmod(base, mod, p)
    while exp:
        if exp & 1:
            result = _zmod(_zmul(result, base, p), mod, p)
        base = _zmod(_zmul(base, base, p), mod, p)
        exp >>= 1
    return result


def _is_irreducible(mod: Sequence[int], p: int) -> bool:
    # A degree-c polynomial is irreducible iff it shares no factor with
    # x^(p^i) - x for i <= c/2 (those split into all irreducibles of degree
    # dividing i).
    c = len(mod) - 1
    frob = [0, 1]
    for _ in range(c // 2):
        frob = _zpowmod(frob, p, mod, p)
        diff = _ztrim([(f - x) % p for f, x in
                       zip(frob + [0, 0], [0, 1] + [0] * len(frob))])
        if len(_zgcd(mod, diff, p)) != 1:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _search_modulus(p: int, c: int) -> tuple[int, ...]:
    # Lexicographically smallest monic irreducible of degree c: count the
    # lower coefficients up as base-p digits, constant term first.
    for code in range(p ** c):
        digits = []
        k = code
        for _ in range(c):
            k, r = divmod(k, p)
            digits.append(r)
        candidate = digits + [1]
        if _is_irreducible(candidate, p):
            return tuple(candidate)
    raise AssertionError("no irreducible polynomial found")  # unreachable


class Field:
    """The finite field GF(p^c)."""

    __slots__ = ("p", "c", "modulus", "order")

    def __init__(self, p: int, c: int = 1,
                 modulus: Optional[Sequence[int]] = None):
        if not isinstance(p, int) or p < 2 or p >= MAX_PRIME:
            raise CompositeModulusError(f"characteristic {p} out of range")
        if not is_prime(p):
            raise CompositeModulusError(f"{p} is not prime")
        if c < 1:
            raise ReducibleModulusError(f"extension degree {c} must be >= 1")
        self.p = p
        self.c = c
        self.order = p ** c
        if c == 1:
            self.modulus = None
        elif modulus is None:
            self.modulus = _search_modulus(p, c)
        else:
            mod = tuple(int(x) % p for x in modulus)
            if len(mod) != c + 1 or mod[-1] != 1:
                raise ReducibleModulusError(
                    f"modulus must be monic of degree {c}")
            if not _is_irreducible(mod, p):
                raise ReducibleModulusError(f"modulus {list(mod)} factors over GF({p})")
            self.modulus = mod

    # -- constructors -------------------------------------------------------

    def element(self, value: Union[int, Sequence[int], "FieldElement"]) -> FieldElement:
        """Coerce an integer (as a constant) or residue sequence."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError("element from a different field")
            return value
        if isinstance(value, int):
            coeffs = (value % self.p,) + (0,) * (self.c - 1)
        else:
            seq = [int(x) % self.p for x in value]
            if len(seq) > self.c and any(seq[self.c:]):
                seq = list(_zmod(seq, list(self.modulus), self.p))
            coeffs = tuple(seq[: self.c]) + (0,) * (self.c - len(seq))
            coeffs = coeffs[: self.c]
        return FieldElement(self, coeffs)

    def zero(self) -> FieldElement:
        return self.element(0)

    def one(self) -> FieldElement:
        return self.element(1)

    def from_int(self, code: int) -> FieldElement:
        """Decode 0 <= code < p^c written in base-p digits, constant first."""
        digits = []
        for _ in range(self.c):
            code, r = divmod(code, self.p)
            digits.append(r)
        return FieldElement(self, tuple(digits))

    def elements(self) -> Iterator[FieldElement]:
        for code in range(self.order):
            yield self.from_int(code)

    def random_element(self, rng) -> FieldElement:
        return self.from_int(rng.randrange(self.order))

    # -- identity -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (isinstance(other, Field) and self.p == other.p
                and self.c == other.c and self.modulus == other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.c, self.modulus))

    def __repr__(self) -> str:
        if self.c == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.c})"

    def __contains__(self, el) -> bool:
        return isinstance(el, FieldElement) and el.field == self


class FieldElement:
    """An element of GF(p^c), stored as c residues (constant term first)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    # -- helpers ------------------------------------------------------------

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"mixed fields {self.field} and {other.field}")
            return other
        if isinstance(other, int):
            return self.field.element(other)
        return NotImplemented

    def as_int(self) -> int:
        """Base-p digit encoding, inverse of Field.from_int."""
        code = 0
        for digit in reversed(self.coeffs):
            code = code * self.field.p + digit
        return code

    def lift(self) -> int:
        """The residue as a plain integer; prime fields only."""
        if self.field.c != 1:
            raise FieldMismatchError("lift() needs a prime field")
        return self.coeffs[0]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FieldElement(self.field, tuple(
            (a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        return self.field.element(other) - self

    def __neg__(self):
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        field = self.field
        if field.c == 1:
            return FieldElement(field,
                                (self.coeffs[0] * other.coeffs[0] % field.p,))
        prod = _zmul(self.coeffs, other.coeffs, field.p)
        prod = _zmod(prod, list(field.modulus), field.p)
        return FieldElement(field, tuple(prod) + (0,) * (field.c - len(prod)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.field.element(other) * self.inverse()

    def inverse(self) -> "FieldElement":
        field = self.field
        if not self:
            raise ZeroDivisionError(f"inverse of zero in {field}")
        if field.c == 1:
            return FieldElement(field,
                                (pow(self.coeffs[0], field.p - 2, field.p),))
        # extended Euclid in GF(p)[x] against the modulus
        p = field.p
        r0, r1 = list(field.modulus), _ztrim(list(self.coeffs))
        s0, s1 = [], [1]
        while len(r1) > 1:
            q, rem = _zdivmod(r0, r1, p)
            r0, r1 = r1, rem
            s0, s1 = s1, _zsub(s0, _zmul(q, s1, p), p)
        # r1 is the (constant) gcd; scale s1 by its inverse
        scale = pow(r1[0], p - 2, p)
        inv = _zmod([x * scale % p for x in s1], list(field.modulus), p)
        return FieldElement(field, tuple(inv) + (0,) * (field.c - len(inv)))

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def sqrt(self) -> Optional["FieldElement"]:
        """A square root when one exists, else None.

        In characteristic 2 squaring is a bijection, so the root always
        exists; in odd characteristic Tonelli-Shanks runs inside GF(p^c).
        """
        field = self.field
        if not self:
            return field.zero()
        q = field.order
        if field.p == 2:
            return self ** (q // 2)
        if self ** ((q - 1) // 2) != field.one():
            return None
        if q % 4 == 3:
            return self ** ((q + 1) // 4)
        # Tonelli-Shanks in the multiplicative group of order q - 1
        s, m = q - 1, 0
        while s % 2 == 0:
            s //= 2
            m += 1
        z = next(el for el in field.elements()
                 if el and el ** ((q - 1) // 2) != field.one())
        c = z ** s
        t = self ** s
        r = self ** ((s + 1) // 2)
        while t != field.one():
            i, sq = 0, t
            while sq != field.one():
                sq = sq * sq
                i += 1
            b = c ** (1 << (m - i - 1))
            m, c = i, b * b
            t = t * c
            r = r * b
        return r

    # -- comparisons --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == self.field.element(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __repr__(self) -> str:
        if self.field.c == 1:
            return str(self.coeffs[0])
        return str(list(self.coeffs))


def embed(element: FieldElement, target: Field) -> FieldElement:
    """Embed a prime-field element into an extension of the same p."""
    base = element.field
    if base == target:
        return element
    if base.c != 1 or target.p != base.p:
        raise FieldMismatchError(f"no canonical embedding {base} -> {target}")
    return target.element(element.coeffs[0])


def minimal_polynomial(alpha: FieldElement) -> list[int]:
    """Coefficients over GF(p) of the minimal polynomial of alpha.

    Computed as the product of (X - alpha^(p^i)) over the Frobenius orbit;
    every coefficient is fixed by Frobenius, hence lies in the prime field.
    """
    field = alpha.field
    orbit = [alpha]
    power = alpha ** field.p
    while power != alpha:
        orbit.append(power)
        power = power ** field.p
    # multiply out (X - root) with coefficients in GF(p^c)
    coeffs = [field.one()]
    for root in orbit:
        nxt = [field.zero()] * (len(coeffs) + 1)
        for i, ci in enumerate(coeffs):
            nxt[i + 1] = nxt[i + 1] + ci
            nxt[i] = nxt[i] - ci * root
        coeffs = nxt
    out = []
    for ci in coeffs:
        assert not any(ci.coeffs[1:]), "minimal polynomial left the prime field"
        out.append(ci.coeffs[0])
    return out
