"""Operator algebra on discrete generating series.

An operator in normal form is a finite sum of terms ``(coeff, beta, q)``, each
read as ``S^beta o q(theta)``: first multiply the coefficient of ``b_x`` by
``q(x)``, then apply the shift-weight ``S^beta = xi^beta z^(l beta) rho^(l beta)``
which sends ``b_x`` to ``b_{x+beta}``.  Composition uses the commutation law
``q(theta) o S^beta = S^beta o q(theta + beta)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, NamedTuple, Sequence

from . import kernels
from .exact import Poly, as_rational, falling_factorial, grlex_key, mi_add
from .series import Series, eval_series


@dataclass(frozen=True)
class OperatorTerm:
    coeff: Fraction
    beta: tuple
    q: Poly

    def __post_init__(self):
        object.__setattr__(self, "coeff", as_rational(self.coeff))
        object.__setattr__(self, "beta", tuple(int(b) for b in self.beta))
        if any(b < 0 for b in self.beta):
            raise ValueError("shifts must be componentwise >= 0")
        if self.q.nvars != len(self.beta):
            raise ValueError("dimension mismatch between shift and polynomial")

    @property
    def poly(self) -> Poly:
        """``coeff * q``: the effective index polynomial of this term."""
        return self.q.scale(self.coeff)


class Operator:
    """Canonical operator ``sum_beta S^beta o q_beta(theta)``.

    Terms with equal shift are merged, zero terms are removed and terms are
    sorted by shift in graded-lex order.  A constant polynomial is held in the
    term's ``coeff`` (``q = 1``); otherwise ``coeff = 1``.
    """

    __slots__ = ("ell", "terms", "_kernel")

    def __init__(self, ell: Sequence[int], terms: Iterable = ()):
        self.ell = tuple(int(k) for k in ell)
        n = len(self.ell)
        if n < 1 or any(k < 0 for k in self.ell):
            raise ValueError("ell must be a nonempty multi-index >= 0")
        merged: dict = {}
        for t in terms:
            if not isinstance(t, OperatorTerm):
                t = OperatorTerm(*t)
            if len(t.beta) != n:
                raise ValueError(f"dimension mismatch: term shift {t.beta} for dimension {n}")
            merged[t.beta] = merged.get(t.beta, Poly.zero(n)) + t.poly
        canon = []
        for beta in sorted(merged, key=grlex_key):
            p = merged[beta]
            if p.is_zero():
                continue
            if p.is_constant():
                canon.append(OperatorTerm(p.constant_value(), beta, Poly.const(n, 1)))
            else:
                canon.append(OperatorTerm(Fraction(1), beta, p))
        self.terms = tuple(canon)
        self._kernel = None

    @property
    def dim(self) -> int:
        return len(self.ell)

    @classmethod
    def identity(cls, ell: Sequence[int]) -> "Operator":
        n = len(ell)
        return cls(ell, [OperatorTerm(1, (0,) * n, Poly.const(n, 1))])

    @classmethod
    def theta(cls, ell: Sequence[int], j: int = 0) -> "Operator":
        n = len(ell)
        return cls(ell, [OperatorTerm(1, (0,) * n, Poly.var(n, j))])

    @classmethod
    def shift(cls, ell: Sequence[int], beta: Sequence[int], coeff=1) -> "Operator":
        n = len(ell)
        return cls(ell, [OperatorTerm(coeff, tuple(beta), Poly.const(n, 1))])

    @classmethod
    def from_poly(cls, ell: Sequence[int], q: Poly) -> "Operator":
        """The pure ``q(theta)`` operator (no shift)."""
        n = len(ell)
        return cls(ell, [OperatorTerm(1, (0,) * n, q)])

    def polys(self) -> dict:
        """``{beta: effective polynomial}``."""
        return {t.beta: t.poly for t in self.terms}

    def max_shift(self) -> tuple:
        if not self.terms:
            return (0,) * self.dim
        return tuple(max(t.beta[i] for t in self.terms) for i in range(self.dim))

    def is_zero(self) -> bool:
        return not self.terms

    def kernel_terms(self) -> list:
        if self._kernel is None:
            self._kernel = [(t.coeff, t.beta, t.q.kernel_terms()) for t in self.terms]
        return self._kernel

    def _check(self, other: "Operator"):
        if not isinstance(other, Operator):
            raise TypeError("expected an Operator")
        if self.ell != other.ell:
            raise ValueError(f"ell mismatch: {self.ell} vs {other.ell}")

    def __add__(self, other: "Operator") -> "Operator":
        self._check(other)
        return Operator(self.ell, self.terms + other.terms)

    def __neg__(self) -> "Operator":
        return Operator(self.ell, [OperatorTerm(-t.coeff, t.beta, t.q) for t in self.terms])

    def __sub__(self, other: "Operator") -> "Operator":
        return self + (-other)

    def scale(self, c) -> "Operator":
        c = as_rational(c)
        return Operator(self.ell, [OperatorTerm(c * t.coeff, t.beta, t.q) for t in self.terms])

    def __matmul__(self, other: "Operator") -> "Operator":
        return op_compose(self, other)

    def __call__(self, F: Series) -> Series:
        return op_apply(self, F)

    def __eq__(self, other):
        if not isinstance(other, Operator):
            return NotImplemented
        return self.ell == other.ell and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"({t.coeff}, {t.beta}, {t.q})" for t in self.terms)
        return f"Operator(ell={self.ell}, [{body}])"


class ShiftResult(NamedTuple):
    series: Series
    dropped: int


def theta_apply(F: Series, j: int = 0) -> Series:
    """``theta_j``: multiply the coefficient at ``x`` by ``x_j``."""
    if not 0 <= j < F.dim:
        raise ValueError(f"axis {j} out of range for dimension {F.dim}")
    return Series(F.ell, F.window, {x: x[j] * v for x, v in F.items()})


def shift_weight_apply(F: Series, beta: Sequence[int]) -> ShiftResult:
    """``S^beta``: move ``f(x)`` to index ``x + beta`` inside the same window."""
    beta = tuple(beta)
    if len(beta) != F.dim:
        raise ValueError("dimension mismatch")
    if any(b < 0 for b in beta):
        raise ValueError("shifts must be componentwise >= 0")
    out, dropped = {}, 0
    for x, v in F.items():
        y = mi_add(x, beta)
        if any(a > b for a, b in zip(y, F.window)):
            dropped += 1
        else:
            out[y] = v
    return ShiftResult(Series(F.ell, F.window, out), dropped)


def _check_apply(op: Operator, F: Series):
    if op.dim != F.dim:
        raise ValueError(f"dimension mismatch: operator {op.dim}, series {F.dim}")
    if op.ell != F.ell:
        raise ValueError(f"ell mismatch: operator {op.ell}, series {F.ell}")


def op_apply_counted(op: Operator, F: Series) -> ShiftResult:
    """Apply ``op`` to ``F``; also report how many contributions left the window."""
    _check_apply(op, F)
    table, dropped = kernels.apply_terms(op.kernel_terms(), dict(F.coeffs), F.window)
    return ShiftResult(Series._trusted(F.ell, F.window, table), dropped)


def op_apply(op: Operator, F: Series) -> Series:
    """Apply ``op`` to ``F``; exact on the whole window since shifts are >= 0."""
    return op_apply_counted(op, F).series


def op_compose(a: Operator, b: Operator) -> Operator:
    """``a o b`` via ``(c1, b1, q1) o (c2, b2, q2) = (c1 c2, b1 + b2, q1(t + b2) q2(t))``."""
    a._check(b)
    terms = []
    for s in a.terms:
        for t in b.terms:
            terms.append(
                OperatorTerm(s.coeff * t.coeff, mi_add(s.beta, t.beta), s.q.shift(t.beta) * t.q)
            )
    return Operator(a.ell, terms)


# -- analytic oracle -------------------------------------------------------
#
# Evaluates the operator on F viewed as a function of z, using only the
# defining formulas theta_j = l_j^{-1} z_j rho_j Delta_j and
# S^beta G(z) = xi^beta z^(l beta) G(z - l beta).  No coefficient tables.

def _memo(fn: Callable) -> Callable:
    cache: dict = {}

    def wrapped(z):
        v = cache.get(z)
        if v is None:
            v = cache[z] = fn(z)
        return v

    return wrapped


def _theta_fn(G: Callable, j: int, ell_j: int) -> Callable:
    inv = Fraction(1, ell_j)

    def H(z):
        back = z[:j] + (z[j] - 1,) + z[j + 1:]
        return inv * z[j] * (G(z) - G(back))

    return _memo(H)


def analytic_op_eval(op: Operator, F: Series, xi: Sequence, z: Sequence) -> Fraction:
    """Value of ``op(F)`` at ``(xi, z)`` computed from the function ``z -> F(xi; l; z)``."""
    _check_apply(op, F)
    n = F.dim
    if len(xi) != n or len(z) != n:
        raise ValueError("dimension mismatch")
    xi = tuple(as_rational(v) for v in xi)
    z = tuple(as_rational(v) for v in z)
    ell = F.ell
    for t in op.terms:
        for e, _ in t.q.items():
            for j in range(n):
                if e[j] and ell[j] == 0:
                    raise ValueError(f"analytic theta undefined for ell_{j + 1} = 0")
    base = _memo(lambda pt: eval_series(F, xi, pt))
    powers: dict = {(0,) * n: base}

    def theta_power(e):
        # theta^e G, built one axis step at a time from a cached lower power
        g = powers.get(e)
        if g is not None:
            return g
        j = max(i for i in range(n) if e[i])
        lower = e[:j] + (e[j] - 1,) + e[j + 1:]
        g = powers[e] = _theta_fn(theta_power(lower), j, ell[j])
        return g

    total = Fraction(0)
    for t in op.terms:
        weight = t.coeff
        for j in range(n):
            weight *= xi[j] ** t.beta[j] * falling_factorial(z[j], ell[j] * t.beta[j])
        if not weight:
            continue
        back = tuple(z[j] - ell[j] * t.beta[j] for j in range(n))
        inner = Fraction(0)
        for e, c in t.q.items():
            inner += c * theta_power(e)(back)
        total += weight * inner
    return total
