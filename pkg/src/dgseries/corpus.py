"""The worked examples as ready-made objects."""

from __future__ import annotations

from .exact import Poly
from .operators import Operator, OperatorTerm
from .recurrence import CauchyProblem, DifferenceEquation, InitialData

t = Poly.var(1)


def tribonacci(phi=(0, 0, 1), ell=1) -> CauchyProblem:
    """``f(x+3) - f(x+2) - f(x+1) - f(x) = 0``."""
    eq = DifferenceEquation((3,), {(3,): 1, (2,): -1, (1,): -1, (0,): -1})
    return CauchyProblem(eq, InitialData({(k,): v for k, v in enumerate(phi)}), (ell,))


def fibonacci(phi=(0, 1), ell=1) -> CauchyProblem:
    eq = DifferenceEquation((2,), {(2,): 1, (1,): -1, (0,): -1})
    return CauchyProblem(eq, InitialData({(k,): v for k, v in enumerate(phi)}), (ell,))


def schroeder_equation() -> DifferenceEquation:
    """``(x+2) f(x+2) - 3(2x+1) f(x+1) + (x-1) f(x) = 0``."""
    return DifferenceEquation((2,), {(2,): t + 2, (1,): -3 * (2 * t + 1), (0,): t - 1})


def schroeder(ell=1) -> CauchyProblem:
    """Polygon dissections, ``f(x)`` counting the ``(x+1)``-gon, ``f(2) = 1``.

    Data at the origin: ``f(1) = 1`` and ``f(0) = -1``, the value that makes
    the equation hold at ``x = 0`` as well.
    """
    return CauchyProblem(schroeder_equation(), InitialData({(0,): -1, (1,): 1}), (ell,))


def schroeder_offset(ell=1) -> CauchyProblem:
    """Same sequence with data ``f(1) = f(2) = 1`` starting at base offset 1."""
    return CauchyProblem(
        schroeder_equation(), InitialData({(1,): 1, (2,): 1}, base_offset=(1,)), (ell,)
    )


def schroeder_operator(ell=1) -> Operator:
    """``theta - 3(2 theta - 1) S + (theta - 1) S^2``."""
    return Operator((ell,), [(1, (0,), t), (1, (1,), -3 * (2 * t - 1)), (1, (2,), t - 1)])


def example3_operator(ell=1) -> Operator:
    """``S^2 theta^3 + S^3 theta``."""
    return Operator((ell,), [OperatorTerm(1, (2,), t ** 3), OperatorTerm(1, (3,), t)])


def pascal_equation() -> DifferenceEquation:
    """``f(x1+1, x2+1) - f(x1, x2+1) - f(x1+1, x2) = 0``."""
    return DifferenceEquation((1, 1), {(1, 1): 1, (0, 1): -1, (1, 0): -1})


def pascal(ell=(1, 1)) -> CauchyProblem:
    """Pascal's rule with ``phi = 1`` on the axes, so ``f(x) = C(x1 + x2, x1)``."""
    return CauchyProblem(pascal_equation(), InitialData({}, default=1), tuple(ell))
