"""Linear difference equations with polynomial coefficients and their Cauchy problems."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from . import kernels
from .exact import Poly, as_rational, box, grlex_key, mi_add, mi_le, mi_sub
from .series import Series

FORWARD = "forward"
BACKWARD = "backward"


class SolvabilityError(ValueError):
    """The leading coefficient vanishes at a lattice point the solver needs."""

    def __init__(self, point: tuple, message: str | None = None):
        self.point = tuple(point)
        super().__init__(message or f"leading coefficient vanishes at lattice point {self.point}")


def in_initial_set(x: Sequence[int], m: Sequence[int]) -> bool:
    """Membership in ``X_m``: true iff ``x`` is not componentwise ``>= m``."""
    if len(x) != len(m):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(m)}")
    return any(a < b for a, b in zip(x, m))


class DifferenceEquation:
    """``sum_alpha p_alpha(x) f(x + alpha) = 0`` (forward, ``x >= 0``) or
    ``sum_alpha p_alpha(x) f(x - alpha) = 0`` (backward, ``x >= m``).

    ``terms`` maps each shift ``0 <= alpha <= m`` to its coefficient polynomial.
    The leading term (``alpha = m`` forward, ``alpha = 0`` backward) must be
    present and nonzero.
    """

    __slots__ = ("m", "terms", "form")

    def __init__(self, m: Sequence[int], terms: Mapping, form: str = FORWARD):
        self.m = tuple(int(k) for k in m)
        n = len(self.m)
        if n < 1 or any(k < 0 for k in self.m):
            raise ValueError("order m must be a nonempty multi-index >= 0")
        if form not in (FORWARD, BACKWARD):
            raise ValueError(f"unknown form {form!r}")
        self.form = form
        clean = {}
        for alpha, p in terms.items():
            alpha = (alpha,) if isinstance(alpha, int) else tuple(alpha)
            if not isinstance(p, Poly):
                p = Poly.const(n, as_rational(p))
            if len(alpha) != n or p.nvars != n:
                raise ValueError(f"dimension mismatch in term {alpha}")
            if not (mi_le((0,) * n, alpha) and mi_le(alpha, self.m)):
                raise ValueError(f"shift {alpha} not within [0, m={self.m}]")
            if not p.is_zero():
                clean[alpha] = clean.get(alpha, Poly.zero(n)) + p
        clean = {a: p for a, p in clean.items() if not p.is_zero()}
        lead = self.m if form == FORWARD else (0,) * n
        if lead not in clean:
            raise ValueError(f"leading coefficient at shift {lead} is missing or zero")
        self.terms = dict(sorted(clean.items(), key=lambda kv: grlex_key(kv[0])))

    @property
    def dim(self) -> int:
        return len(self.m)

    def leading(self) -> Poly:
        return self.terms[self.m if self.form == FORWARD else (0,) * self.dim]

    def is_constant(self) -> bool:
        return all(p.is_constant() for p in self.terms.values())

    def constant_coeffs(self) -> dict:
        if not self.is_constant():
            raise ValueError("equation has non-constant coefficients")
        return {a: p.constant_value() for a, p in self.terms.items()}

    def to_forward(self) -> "DifferenceEquation":
        return self if self.form == FORWARD else convert_form(self)

    def to_backward(self) -> "DifferenceEquation":
        return self if self.form == BACKWARD else convert_form(self)

    def normalized(self) -> "DifferenceEquation":
        """Scale so the leading term's graded-lex leading coefficient is 1."""
        c = self.leading().leading_coeff()
        return DifferenceEquation(self.m, {a: p.scale(1 / c) for a, p in self.terms.items()}, self.form)

    def __eq__(self, other):
        if not isinstance(other, DifferenceEquation):
            return NotImplemented
        return self.form == other.form and self.m == other.m and self.terms == other.terms

    __hash__ = None

    def __repr__(self):
        body = ", ".join(f"{a}: {p}" for a, p in self.terms.items())
        return f"DifferenceEquation({self.form}, m={self.m}, {{{body}}})"


def convert_form(eq: DifferenceEquation) -> DifferenceEquation:
    """Swap forward and backward encodings.

    Forward to backward: ``p^b_beta(x) = p^f_{m - beta}(x - m)``; the inverse
    is ``p^f_alpha(x) = p^b_{m - alpha}(x + m)``.
    """
    m = eq.m
    neg_m = tuple(-k for k in m)
    if eq.form == FORWARD:
        terms = {mi_sub(m, a): p.shift(neg_m) for a, p in eq.terms.items()}
        return DifferenceEquation(m, terms, BACKWARD)
    terms = {mi_sub(m, b): p.shift(m) for b, p in eq.terms.items()}
    return DifferenceEquation(m, terms, FORWARD)


@dataclass(frozen=True)
class InitialData:
    """Values of ``phi`` on ``base_offset + X_m``; unlisted points read ``default``."""

    values: Mapping = field(default_factory=dict)
    default: Fraction = Fraction(0)
    base_offset: tuple | None = None

    def __post_init__(self):
        vals = {}
        for x, v in dict(self.values).items():
            x = (x,) if isinstance(x, int) else tuple(x)
            vals[x] = as_rational(v)
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "default", as_rational(self.default))
        if self.base_offset is not None:
            object.__setattr__(self, "base_offset", tuple(int(k) for k in self.base_offset))

    def offset(self, dim: int) -> tuple:
        return self.base_offset if self.base_offset is not None else (0,) * dim

    def phi(self, x: Sequence[int], m: Sequence[int]) -> Fraction:
        """Zero-extended initial data at ``x``.

        Zero wherever some component lies below the base offset (this covers
        negative indices); ``values``/``default`` on ``x0 + X_m``.
        """
        x = tuple(x)
        x0 = self.offset(len(x))
        rel = mi_sub(x, x0)
        if any(k < 0 for k in rel):
            return Fraction(0)
        if not in_initial_set(rel, m):
            raise ValueError(f"{x} is not an initial-data point")
        return self.values.get(x, self.default)


@dataclass(frozen=True)
class CauchyProblem:
    equation: DifferenceEquation
    data: InitialData
    ell: tuple = None

    def __post_init__(self):
        n = self.equation.dim
        ell = (1,) * n if self.ell is None else tuple(int(k) for k in self.ell)
        object.__setattr__(self, "ell", ell)
        if len(ell) != n or any(k < 0 for k in ell):
            raise ValueError("ell must match the equation dimension and be >= 0")
        x0 = self.data.offset(n)
        if len(x0) != n or any(k < 0 for k in x0):
            raise ValueError("base_offset must match the equation dimension and be >= 0")
        m = self.equation.m
        for x in self.data.values:
            if len(x) != n:
                raise ValueError(f"dimension mismatch in initial value at {x}")
            rel = mi_sub(x, x0)
            if any(k < 0 for k in rel) or not in_initial_set(rel, m):
                raise ValueError(f"initial value at {x} lies outside base_offset + X_m")

    @property
    def dim(self) -> int:
        return self.equation.dim

    @property
    def base_offset(self) -> tuple:
        return self.data.offset(self.dim)

    def phi(self, x) -> Fraction:
        return self.data.phi(x, self.equation.m)

    def data_series(self, window: Sequence[int]) -> Series:
        """``phi`` on ``(x0 + X_m) ∩ [0, window]`` as a series."""
        window = tuple(window)
        x0, m = self.base_offset, self.equation.m
        table = {}
        for x in box(x0, window) if mi_le(x0, window) else []:
            if in_initial_set(mi_sub(x, x0), m):
                table[x] = self.data.values.get(x, self.data.default)
        return Series(self.ell, window, table)


def check_solvable(eq: DifferenceEquation, base_offset: Sequence[int], window: Sequence[int]):
    """Raise :class:`SolvabilityError` at the first needed point where ``p_m`` vanishes."""
    eq = eq.to_forward()
    top = mi_sub(window, eq.m)
    if not mi_le(base_offset, top):
        return
    lead = eq.leading().kernel_terms()
    for x in box(base_offset, top):
        if not kernels.poly_eval(lead, x):
            raise SolvabilityError(x)


def solve_cauchy(problem: CauchyProblem, window: Sequence[int]) -> Series:
    """Coefficient table of the solution on ``[0, window]``.

    Initial points take ``phi``; every other point ``y >= x0 + m`` is obtained
    from the equation at ``x = y - m``, sweeping in graded-lex order so all
    dependencies (smaller coordinate sum) are already known.
    """
    window = (window,) if isinstance(window, int) else tuple(window)
    eq = problem.equation.to_forward()
    n, m = eq.dim, eq.m
    if len(window) != n:
        raise ValueError(f"dimension mismatch: window {window} for dimension {n}")
    x0 = problem.base_offset
    if not mi_le(mi_add(x0, m), window):
        raise ValueError(f"window {window} does not contain base_offset + m = {mi_add(x0, m)}")
    check_solvable(eq, x0, window)

    table: dict = {}
    interior = []
    for y in box(x0, window):
        if in_initial_set(mi_sub(y, x0), m):
            v = problem.data.values.get(y, problem.data.default)
            if v:
                table[y] = v
        else:
            interior.append(y)
    others = [(a, p.kernel_terms()) for a, p in eq.terms.items() if a != m]
    try:
        kernels.recurrence_sweep(table, interior, m, eq.leading().kernel_terms(), others)
    except ZeroDivisionError as exc:  # pragma: no cover - guarded by check_solvable
        raise SolvabilityError((), str(exc)) from exc
    return Series(problem.ell, window, table)


def residuals(eq: DifferenceEquation, F: Series, base_offset: Sequence[int] | None = None) -> dict:
    """Nonzero values of ``sum_alpha p_alpha(x) f(x + alpha)`` for every
    ``x >= x0`` with ``x + m`` inside the window."""
    eq = eq.to_forward()
    x0 = tuple(base_offset) if base_offset is not None else (0,) * eq.dim
    top = mi_sub(F.window, eq.m)
    out = {}
    if not mi_le(x0, top):
        return out
    for x in box(x0, top):
        s = sum((p.evaluate(x) * F[mi_add(x, a)] for a, p in eq.terms.items()), Fraction(0))
        if s:
            out[x] = s
    return out
