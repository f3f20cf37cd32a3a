"""Truncated discrete generating series.

A series ``sum_{0 <= x <= N} f(x) xi^x z^(l x)`` is stored as its coefficient
table ``x -> f(x)``; the basis term ``xi^x z^(l x)`` is identified with its
index ``x``.  ``xi`` is not stored and only enters through :func:`eval_series`.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .exact import as_rational, falling_factorial, grlex_key, mi_le, mi_min


class Series:
    """Immutable coefficient table on the box ``[0, window]``.

    Equality (``==``) is strict: same ``ell``, same ``window`` and the same
    nonzero coefficients.  :meth:`agrees_with` compares on the common box only.
    """

    __slots__ = ("ell", "window", "_coeffs")

    def __init__(self, ell: Sequence[int], window: Sequence[int], coeffs: Mapping | None = None):
        self.ell = tuple(int(k) for k in ell)
        self.window = tuple(int(k) for k in window)
        if len(self.ell) != len(self.window) or not self.ell:
            raise ValueError("ell and window must have the same positive length")
        if any(k < 0 for k in self.ell) or any(k < 0 for k in self.window):
            raise ValueError("ell and window must be componentwise >= 0")
        table = {}
        for x, v in (coeffs or {}).items():
            if not v:
                continue
            if len(x) != len(self.window) or any(a < 0 or a > b for a, b in zip(x, self.window)):
                raise ValueError(f"index {tuple(x)} outside window [0, {self.window}]")
            table[tuple(x)] = v
        self._coeffs = MappingProxyType(dict(sorted(table.items(), key=lambda kv: grlex_key(kv[0]))))

    @classmethod
    def _trusted(cls, ell, window, table: dict) -> "Series":
        # kernel output: keys already in range, values nonzero Fractions
        obj = cls.__new__(cls)
        obj.ell = ell
        obj.window = window
        obj._coeffs = MappingProxyType(dict(sorted(table.items(), key=lambda kv: grlex_key(kv[0]))))
        return obj

    @classmethod
    def zero(cls, ell: Sequence[int], window: Sequence[int]) -> "Series":
        return cls(ell, window)

    @property
    def dim(self) -> int:
        return len(self.ell)

    @property
    def coeffs(self) -> Mapping:
        return self._coeffs

    def __getitem__(self, x) -> Fraction:
        if isinstance(x, int):
            x = (x,)
        return self._coeffs.get(tuple(x), Fraction(0))

    def items(self):
        return self._coeffs.items()

    def support(self) -> list:
        return list(self._coeffs)

    def __len__(self):
        return len(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    # arithmetic requires identical ell and window
    def _check_compatible(self, other: "Series"):
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if self.ell != other.ell or self.window != other.window:
            raise ValueError("series differ in ell or window")

    def __add__(self, other: "Series") -> "Series":
        self._check_compatible(other)
        acc = dict(self._coeffs)
        for x, v in other.items():
            acc[x] = acc.get(x, 0) + v
        return Series(self.ell, self.window, acc)

    def __neg__(self) -> "Series":
        return Series(self.ell, self.window, {x: -v for x, v in self.items()})

    def __sub__(self, other: "Series") -> "Series":
        return self + (-other)

    def scale(self, c) -> "Series":
        c = as_rational(c)
        return Series(self.ell, self.window, {x: c * v for x, v in self.items()})

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return (
            self.ell == other.ell
            and self.window == other.window
            and dict(self._coeffs) == dict(other._coeffs)
        )

    __hash__ = None

    def agrees_with(self, other: "Series") -> bool:
        """Coefficient equality on the intersection of the two windows."""
        if self.ell != other.ell:
            return False
        common = mi_min(self.window, other.window)
        mine = {x: v for x, v in self.items() if mi_le(x, common)}
        theirs = {x: v for x, v in other.items() if mi_le(x, common)}
        return mine == theirs

    def with_window(self, window: Sequence[int]) -> "Series":
        """Same coefficients on a different box; entries outside it are dropped."""
        window = tuple(window)
        return Series(self.ell, window, {x: v for x, v in self.items() if mi_le(x, window)})

    def __repr__(self):
        body = ", ".join(f"{x if len(x) > 1 else x[0]}: {v}" for x, v in self.items())
        return f"Series(ell={self.ell}, window={self.window}, {{{body}}})"


def make_series(
    dim: int,
    ell: Sequence[int],
    window: Sequence[int],
    entries: Iterable[tuple] = (),
) -> Series:
    """Build a canonical series; duplicate indices are summed, zeros dropped."""
    ell, window = tuple(ell), tuple(window)
    if len(ell) != dim or len(window) != dim:
        raise ValueError(f"dimension mismatch: expected {dim}")
    acc: dict = {}
    for x, v in entries:
        x = (x,) if isinstance(x, int) else tuple(x)
        if len(x) != dim:
            raise ValueError(f"dimension mismatch at index {x}")
        if any(a < 0 or a > b for a, b in zip(x, window)):
            raise ValueError(f"index {x} outside window [0, {window}]")
        acc[x] = acc.get(x, 0) + as_rational(v)
    return Series(ell, window, acc)


def truncate(F: Series, s: Sequence[int]) -> Series:
    """Keep ``x <= s``; the window shrinks to ``min(s, N)``."""
    s = (s,) if isinstance(s, int) else tuple(s)
    if any(k < 0 for k in s):
        raise ValueError("truncation index must be >= 0")
    return F.with_window(mi_min(s, F.window))


def project(F: Series, j: int) -> Series:
    """Slice ``x_j = 0`` (0-based axis ``j``), i.e. substitute ``z_j = 0``."""
    if not 0 <= j < F.dim:
        raise ValueError(f"axis {j} out of range for dimension {F.dim}")
    if F.ell[j] < 1:
        raise ValueError("projection undefined for ell_j = 0")
    return Series(F.ell, F.window, {x: v for x, v in F.items() if x[j] == 0})


def combined_projection(F: Series) -> Series:
    """``(1 - pi_1) o ... o (1 - pi_n)``: keeps exactly the indices ``x >= I``."""
    if any(k < 1 for k in F.ell):
        raise ValueError("projection undefined for ell_j = 0")
    return Series(F.ell, F.window, {x: v for x, v in F.items() if all(x)})


def eval_series(F: Series, xi: Sequence, z: Sequence) -> Fraction:
    """Evaluate the truncated sum exactly at the point ``(xi, z)``."""
    if len(xi) != F.dim or len(z) != F.dim:
        raise ValueError(f"dimension mismatch: series has dimension {F.dim}")
    xi = [as_rational(v) for v in xi]
    z = [as_rational(v) for v in z]
    total = Fraction(0)
    for x, v in F.items():
        term = v
        for j in range(F.dim):
            term *= xi[j] ** x[j] * falling_factorial(z[j], F.ell[j] * x[j])
            if not term:
                break
        total += term
    return total
