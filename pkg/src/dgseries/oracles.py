"""Brute-force reference computations, kept independent of the main code paths.

Nothing here calls the solver, the kernels or :class:`~dgseries.exact.Poly`
evaluation, so agreement with them is meaningful.
"""

from __future__ import annotations

import sys
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .recurrence import CauchyProblem


def _eval_terms(terms, point):
    total = Fraction(0)
    for e, c in terms:
        term = Fraction(c)
        for xi, k in zip(point, e):
            term *= Fraction(xi) ** k
        total += term
    return total


def direct_recursion(problem: CauchyProblem, upto) -> dict:
    """Memoized top-down evaluation of the forward recurrence on ``[0, upto]``.

    Returns only nonzero values, keyed by index tuple.
    """
    upto = (upto,) if isinstance(upto, int) else tuple(upto)
    eq = problem.equation.to_forward()
    m = eq.m
    n = len(m)
    x0 = problem.base_offset
    values, default = problem.data.values, problem.data.default
    terms = {a: list(p.items()) for a, p in eq.terms.items()}
    lead = terms.pop(m)

    @lru_cache(maxsize=None)
    def f(y):
        rel = [y[i] - x0[i] for i in range(n)]
        if any(r < 0 for r in rel):
            return Fraction(0)
        if any(rel[i] < m[i] for i in range(n)):
            return values.get(y, default)
        x = tuple(y[i] - m[i] for i in range(n))
        d = _eval_terms(lead, x)
        if d == 0:
            raise ZeroDivisionError(f"leading coefficient vanishes at {x}")
        s = Fraction(0)
        for alpha, t in terms.items():
            s += _eval_terms(t, x) * f(tuple(x[i] + alpha[i] for i in range(n)))
        return -s / d

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 20 * (sum(upto) + 100)))
    try:
        out = {}
        for y in product(*(range(k + 1) for k in upto)):
            v = f(y)
            if v:
                out[y] = v
        return out
    finally:
        sys.setrecursionlimit(limit)


def _crosses(d1, d2, n):
    a, b = d1
    c, d = d2
    if len({a, b, c, d}) < 4:
        return False

    def inside(v):
        # strictly between a and b going around the polygon
        return (v - a) % n < (b - a) % n and v != a

    return inside(c) != inside(d)


def polygon_dissections(n_gon: int) -> int:
    """Number of sets of pairwise non-crossing diagonals of a convex ``n_gon``-gon.

    Exhaustive search: every diagonal is either left out or, if it crosses
    none of those already chosen, taken in; each leaf is one dissection.
    """
    if not 3 <= n_gon <= 10:
        raise ValueError("n_gon must be between 3 and 10")
    diagonals = [
        (a, b) for a in range(n_gon) for b in range(a + 2, n_gon) if not (a == 0 and b == n_gon - 1)
    ]

    def count(i, chosen):
        if i == len(diagonals):
            return 1
        total = count(i + 1, chosen)
        d = diagonals[i]
        if not any(_crosses(d, c, n_gon) for c in chosen):
            total += count(i + 1, chosen + [d])
        return total

    return count(0, [])


def binomial(n: int, k: int) -> Fraction:
    """``C(n, k)`` by the multiplicative formula; zero when ``k > n``."""
    if n < 0 or k < 0:
        raise ValueError("binomial needs n, k >= 0")
    if k > n:
        return Fraction(0)
    acc = Fraction(1)
    for i in range(1, k + 1):
        acc = acc * (n - k + i) / i
    return acc
