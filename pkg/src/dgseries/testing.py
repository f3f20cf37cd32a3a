"""Seeded random instances for property checks and benchmarks.

Rationals have numerators and denominators bounded by 9.  Leading
polynomials are built with positive coefficients so they never vanish on the
nonnegative lattice and every generated Cauchy problem is solvable.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

from .exact import Poly
from .operators import Operator, OperatorTerm
from .recurrence import CauchyProblem, DifferenceEquation, InitialData, in_initial_set
from .series import Series


def rational(rng: random.Random, bound: int = 9, nonzero: bool = False) -> Fraction:
    while True:
        v = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if v or not nonzero:
            return v


def exponents(dim: int, max_degree: int) -> list:
    return [e for e in product(range(max_degree + 1), repeat=dim) if sum(e) <= max_degree]


def poly(rng: random.Random, dim: int, max_degree: int = 3, max_terms: int = 3) -> Poly:
    pool = exponents(dim, max_degree)
    k = rng.randint(1, max_terms)
    p = Poly(dim, [(rng.choice(pool), rational(rng, nonzero=True)) for _ in range(k)])
    return p if not p.is_zero() else Poly.const(dim, rational(rng, nonzero=True))


def positive_poly(rng: random.Random, dim: int, max_degree: int = 3) -> Poly:
    """Positive constant plus monomials with positive coefficients."""
    p = Poly.const(dim, Fraction(rng.randint(1, 9), rng.randint(1, 9)))
    for _ in range(rng.randint(0, 2)):
        e = rng.choice(exponents(dim, max_degree))
        p = p + Poly(dim, {e: Fraction(rng.randint(1, 9), rng.randint(1, 9))})
    if rng.random() < 0.5:
        p = -p
    return p


def order(rng: random.Random, dim: int, max_order: int = 3) -> tuple:
    while True:
        m = tuple(rng.randint(0, max_order) for _ in range(dim))
        if any(m):
            return m


def equation(
    rng: random.Random,
    dim: int,
    constant: bool = False,
    max_order: int = 3,
    max_degree: int = 3,
    max_terms: int = 4,
) -> DifferenceEquation:
    """Forward equation whose shift set has componentwise minimum 0."""
    m = order(rng, dim, max_order)
    box = list(product(*(range(k + 1) for k in m)))
    others = [a for a in box if a != m]
    count = rng.randint(1, min(max_terms, len(box))) - 1
    shifts = [m] + rng.sample(others, min(count, len(others)))
    low = tuple(min(a[i] for a in shifts) for i in range(dim))
    if any(low):
        if len(shifts) >= max_terms:
            shifts.pop()
        shifts.append((0,) * dim)
    terms = {}
    for a in shifts:
        if constant:
            terms[a] = Poly.const(dim, rational(rng, nonzero=True))
        elif a == m:
            terms[a] = positive_poly(rng, dim, max_degree)
        else:
            terms[a] = poly(rng, dim, max_degree)
    return DifferenceEquation(m, terms)


def initial_data(rng: random.Random, m: tuple, window: tuple) -> InitialData:
    values = {}
    for x in product(*(range(k + 1) for k in window)):
        if in_initial_set(x, m) and rng.random() < 0.8:
            values[x] = rational(rng)
    return InitialData(values)


def default_window(m: tuple, factor: int = 4) -> tuple:
    return tuple(factor * (k + 1) for k in m)


def problem(
    rng: random.Random,
    dim: int,
    constant: bool = False,
    window: tuple | None = None,
    **kwargs,
) -> tuple:
    """``(problem, window)``; the window defaults to ``4 (m + 1)``."""
    eq = equation(rng, dim, constant=constant, **kwargs)
    window = default_window(eq.m) if window is None else window
    ell = tuple(rng.randint(1, 3) for _ in range(dim))
    return CauchyProblem(eq, initial_data(rng, eq.m, window), ell), window


def series(rng: random.Random, ell: tuple, window: tuple, density: float = 0.7) -> Series:
    table = {}
    for x in product(*(range(k + 1) for k in window)):
        if rng.random() < density:
            table[x] = rational(rng)
    return Series(ell, window, table)


def operator(rng: random.Random, ell: tuple, max_shift: int = 2, max_degree: int = 2, max_terms: int = 3) -> Operator:
    dim = len(ell)
    terms = []
    for _ in range(rng.randint(1, max_terms)):
        beta = tuple(rng.randint(0, max_shift) for _ in range(dim))
        terms.append(OperatorTerm(rational(rng, nonzero=True), beta, poly(rng, dim, max_degree)))
    return Operator(ell, terms)
