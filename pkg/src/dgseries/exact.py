"""Exact substrate: rationals, multi-indices, index polynomials, falling factorials.

Rationals are :class:`fractions.Fraction`; multi-indices are plain tuples of
ints.  :class:`Poly` is a sparse polynomial over Q in ``n`` index variables
``t1..tn``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable, Mapping, Sequence, Union

Rational = Fraction
MultiIndex = tuple
Number = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; decimal and exponent forms are rejected."""
    if isinstance(text, bool) or not isinstance(text, (str, int)):
        raise ValueError(f"not a rational literal: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    match = _RATIONAL_RE.match(text)
    if match is None:
        raise ValueError(f"not a rational literal: {text!r}")
    num = int(match.group(1))
    den = int(match.group(2)) if match.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Number) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


# -- multi-indices ---------------------------------------------------------

def mi(*components) -> tuple:
    if len(components) == 1 and not isinstance(components[0], int):
        components = tuple(components[0])
    return tuple(int(c) for c in components)


def mi_add(a: Sequence[int], b: Sequence[int]) -> tuple:
    _check_dims(a, b)
    return tuple(x + y for x, y in zip(a, b))


def mi_sub(a: Sequence[int], b: Sequence[int]) -> tuple:
    _check_dims(a, b)
    return tuple(x - y for x, y in zip(a, b))


def mi_le(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise partial order ``a <= b``."""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def mi_min(a: Sequence[int], b: Sequence[int]) -> tuple:
    _check_dims(a, b)
    return tuple(min(x, y) for x, y in zip(a, b))


def mi_max(a: Sequence[int], b: Sequence[int]) -> tuple:
    _check_dims(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def grlex_key(e: Sequence[int]) -> tuple:
    """Graded lexicographic sort key: total degree first, then lexicographic."""
    return (sum(e), tuple(e))


def box(lo: Sequence[int], hi: Sequence[int]) -> list:
    """All lattice points ``lo <= x <= hi`` in graded-lex order."""
    _check_dims(lo, hi)
    pts = product(*(range(a, b + 1) for a, b in zip(lo, hi)))
    return sorted(pts, key=grlex_key)


def _check_dims(a, b):
    if len(a) != len(b):
        raise ValueError(f"dimension mismatch: {len(a)} vs {len(b)}")


# -- falling factorials ----------------------------------------------------

def falling_factorial(z: Number, n: int) -> Fraction:
    """``z (z-1) ... (z-n+1)``; the empty product for ``n == 0``."""
    if n < 0:
        raise ValueError("falling factorial needs n >= 0")
    z = as_rational(z)
    acc = Fraction(1)
    for k in range(n):
        acc *= z - k
        if not acc:
            break
    return acc


def stirling1_signed(n: int) -> list:
    """Row ``s(n, 0..n)`` of signed Stirling numbers of the first kind."""
    row = [1]
    for k in range(n):
        nxt = [0] * (len(row) + 1)
        for j, c in enumerate(row):
            nxt[j + 1] += c
            nxt[j] -= k * c
        row = nxt
    return row


def ff_to_monomial(n: int) -> "Poly":
    """Monomial expansion of the falling factorial ``t^(n)`` (one variable)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return Poly.from_coeffs(stirling1_signed(n))


# -- polynomials -----------------------------------------------------------

class Poly:
    """Sparse polynomial over Q in ``nvars`` index variables.

    Immutable.  Terms are held as ``{exponent tuple: Fraction}`` with zeros
    removed, so the zero polynomial has no terms.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping | Iterable = ()):
        if nvars < 1:
            raise ValueError("a polynomial needs at least one variable")
        self.nvars = nvars
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for e, c in items:
            e = tuple(int(k) for k in e)
            if len(e) != nvars or any(k < 0 for k in e):
                raise ValueError(f"bad exponent {e} for {nvars} variables")
            acc[e] = acc.get(e, 0) + as_rational(c)
        self._terms = {e: c for e, c in sorted(acc.items(), key=lambda ec: grlex_key(ec[0])) if c}
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, nvars: int, c: Number) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def var(cls, nvars: int, i: int = 0) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Number]) -> "Poly":
        """One-variable polynomial from ascending coefficients ``c0, c1, ...``."""
        return cls(1, {(k,): c for k, c in enumerate(coeffs)})

    # inspection
    def items(self):
        """``(exponent, coefficient)`` pairs in ascending graded-lex order."""
        return self._terms.items()

    def coeff(self, e: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(e), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def kernel_terms(self) -> tuple:
        """Terms as a tuple of ``(exponent, coefficient)`` pairs for the kernels."""
        return tuple(self._terms.items())

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        return self.coeff((0,) * self.nvars)

    def degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(e) for e in self._terms)

    def leading_exponent(self) -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self._terms, key=grlex_key)

    def leading_coeff(self) -> Fraction:
        return self._terms[self.leading_exponent()]

    def __call__(self, *point) -> Fraction:
        if len(point) == 1 and isinstance(point[0], (tuple, list)):
            point = point[0]
        return self.evaluate(point)

    def evaluate(self, point: Sequence[Number]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"dimension mismatch: {len(point)} vs {self.nvars}")
        total = Fraction(0)
        for e, c in self._terms.items():
            term = c
            for xi, k in zip(point, e):
                if k:
                    term *= xi ** k
            total += term
        return total

    # arithmetic
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError(f"dimension mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Poly(self.nvars, acc)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        acc: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Poly(self.nvars, acc)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        out = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def scale(self, c: Number) -> "Poly":
        c = as_rational(c)
        return Poly(self.nvars, {e: c * v for e, v in self._terms.items()})

    def shift(self, beta: Sequence[int]) -> "Poly":
        return poly_substitute_shift(self, beta)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self == Poly.const(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, tuple(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Poly({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        names = ["t"] if self.nvars == 1 else [f"t{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in reversed(list(self._terms.items())):
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(names, e) if k
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def poly_substitute_shift(q: Poly, beta: Sequence[int]) -> Poly:
    """Return ``r`` with ``r(t) = q(t + beta)``."""
    beta = tuple(beta)
    if len(beta) != q.nvars:
        raise ValueError(f"dimension mismatch: {len(beta)} vs {q.nvars}")
    if not any(beta):
        return q
    acc: dict = {}
    for e, c in q.items():
        # expand prod_i (t_i + b_i)^{e_i} by the binomial theorem, axis by axis
        partial = {(): c}
        for k, b in zip(e, beta):
            nxt = {}
            for head, v in partial.items():
                for j in range(k + 1):
                    w = v * comb(k, j) * Fraction(b) ** (k - j)
                    if w:
                        key = head + (j,)
                        nxt[key] = nxt.get(key, 0) + w
            partial = nxt
        for ee, v in partial.items():
            acc[ee] = acc.get(ee, 0) + v
    return Poly(q.nvars, acc)
