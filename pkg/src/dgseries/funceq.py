"""Right-hand sides of the functional equations and the verification engine.

Each builder works from the initial data alone; the verifier solves the
Cauchy problem, applies the annihilating operator and compares coefficient
tables exactly.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .dfinite import recurrence_to_annihilator
from .exact import Poly, box, format_rational, mi_add, mi_le, mi_sub
from .operators import Operator, OperatorTerm, op_apply, op_apply_counted, shift_weight_apply
from .recurrence import CauchyProblem, InitialData, in_initial_set, solve_cauchy
from .series import Series, combined_projection, truncate

THEOREMS = ("auto", "t1", "t3", "t5")


class Forms(NamedTuple):
    A: Series
    B: Series
    C: Series


@dataclass(frozen=True)
class Mismatch:
    forms: str
    x: tuple
    lhs: Fraction
    rhs: Fraction

    def to_dict(self) -> dict:
        return {
            "forms": self.forms,
            "x": list(self.x),
            "lhs": format_rational(self.lhs),
            "rhs": format_rational(self.rhs),
        }


@dataclass
class VerificationReport:
    theorem: str
    window: tuple
    mismatches: list = field(default_factory=list)
    dropped: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        return "fail" if self.mismatches else "pass"

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "status": self.status,
            "window": list(self.window),
            "mismatches": [m.to_dict() for m in self.mismatches],
            "dropped": dict(sorted(self.dropped.items())),
        }


def _window(window, dim: int) -> tuple:
    window = (window,) if isinstance(window, int) else tuple(window)
    if len(window) != dim:
        raise ValueError(f"dimension mismatch: window {window} for dimension {dim}")
    return window


def _constant_backward(problem: CauchyProblem) -> dict:
    eq = problem.equation
    if not eq.is_constant():
        raise ValueError("this functional equation needs constant coefficients")
    if any(problem.base_offset):
        raise ValueError("constant-coefficient forms assume data starting at the origin")
    return eq.to_backward().constant_coeffs()


def rhs_theorem1(problem: CauchyProblem, window) -> Forms:
    """The three one-dimensional right-hand sides (backward coefficients ``c_k``)."""
    if problem.dim != 1:
        raise ValueError("one-dimensional problem expected")
    c = {k: v for (k,), v in _constant_backward(problem).items()}
    (N,) = window = _window(window, 1)
    (r,) = problem.equation.m
    ell = problem.ell
    if N < r:
        raise ValueError(f"window {N} smaller than the order {r}")
    data = problem.data_series(window)

    # sum_{k<r} c_k S^k F_{r-k-1}
    form_a = Series.zero(ell, window)
    for k in range(r):
        part = truncate(data, (r - k - 1,)).with_window(window)
        form_a = form_a + shift_weight_apply(part, (k,)).series.scale(c.get(k, 0))

    # sum_{x<r} [P(delta^{-1}) phi](x) b_x, zero-extended below 0
    form_b = {}
    for x in range(r):
        form_b[(x,)] = sum(
            (ck * problem.phi((x - k,)) for k, ck in c.items() if x - k >= 0), Fraction(0)
        )
    form_b = Series(ell, window, form_b)

    # sum_{x<r} P_{r-x} phi(x) b_x with the strict truncation P_tau = sum_{k<tau}
    form_c = Series.zero(ell, window)
    for x in range(r):
        trunc = Operator(ell, [OperatorTerm(ck, (k,), Poly.const(1, 1)) for k, ck in c.items() if k < r - x])
        single = Series(ell, window, {(x,): problem.phi((x,))})
        form_c = form_c + op_apply(trunc, single)
    return Forms(form_a, form_b, form_c)


def _not_ge(x: Sequence[int], tau: Sequence[int]) -> bool:
    return any(a < b for a, b in zip(x, tau))


def rhs_theorem3(problem: CauchyProblem, window) -> Forms:
    """The three ``n``-dimensional right-hand sides, truncated to the window."""
    c = _constant_backward(problem)
    n = problem.dim
    window = _window(window, n)
    m, ell = problem.equation.m, problem.ell
    if not mi_le(m, window):
        raise ValueError(f"window {window} does not contain m = {m}")
    points = box((0,) * n, window)
    one = Poly.const(n, 1)

    def Phi(tau):
        return Series(ell, window, {x: problem.phi(x) for x in points if _not_ge(x, tau)})

    # sum_alpha c_alpha S^alpha Phi_{m-alpha}
    form_a = Series.zero(ell, window)
    for alpha, ca in c.items():
        form_a = form_a + shift_weight_apply(Phi(mi_sub(m, alpha)), alpha).series.scale(ca)

    # sum_{x not>= m} [P(delta^{-1}) phi](x) b_x
    form_b = {}
    for x in points:
        if _not_ge(x, m):
            acc = Fraction(0)
            for alpha, ca in c.items():
                y = mi_sub(x, alpha)
                if all(k >= 0 for k in y):
                    acc += ca * problem.phi(y)
            form_b[x] = acc
    form_b = Series(ell, window, form_b)

    # sum_{x not>= m} P_{m-x} phi(x) b_x, P_tau = sum_{alpha not>= tau} c_alpha S^alpha
    form_c = Series.zero(ell, window)
    for x in points:
        if not _not_ge(x, m):
            continue
        v = problem.phi(x)
        if not v:
            continue
        tau = mi_sub(m, x)
        trunc = Operator(ell, [OperatorTerm(ca, alpha, one) for alpha, ca in c.items() if _not_ge(alpha, tau)])
        form_c = form_c + op_apply(trunc, Series(ell, window, {x: v}))
    return Forms(form_a, form_b, form_c)


def rhs_theorem5(problem: CauchyProblem, window) -> Series:
    """``sum_alpha sum_{x not>= m' - alpha} p^b_alpha(x + alpha) phi(x) b_{x+alpha}``.

    ``p^b`` are the backward coefficients and ``m' = m + base_offset``; ``phi``
    is zero-extended below the base offset.
    """
    n = problem.dim
    window = _window(window, n)
    bwd = problem.equation.to_backward()
    top = mi_add(bwd.m, problem.base_offset)
    if not mi_le(top, window):
        raise ValueError(f"window {window} too small to contain m = {top}")
    points = box((0,) * n, window)
    acc: dict = {}
    for alpha, p in bwd.terms.items():
        tau = mi_sub(top, alpha)
        for x in points:
            if not _not_ge(x, tau):
                continue
            y = mi_add(x, alpha)
            if not mi_le(y, window):
                continue
            v = problem.phi(x)
            if v:
                acc[y] = acc.get(y, 0) + p.evaluate(y) * v
    return Series(problem.ell, window, acc)


def _select(problem: CauchyProblem, which: str) -> str:
    if which not in THEOREMS:
        raise ValueError(f"unknown theorem selector {which!r}")
    if which != "auto":
        return which
    if problem.equation.is_constant() and not any(problem.base_offset):
        return "t1" if problem.dim == 1 else "t3"
    return "t5"


def _compare(report: VerificationReport, label: str, lhs: Series, rhs: Series):
    keys = sorted(set(lhs.coeffs) | set(rhs.coeffs), key=lambda x: (sum(x), x))
    for x in keys:
        a, b = lhs[x], rhs[x]
        if a != b:
            report.mismatches.append(Mismatch(label, x, a, b))


def verify_functional_equation(
    problem: CauchyProblem,
    window,
    which: str = "auto",
    forms: Iterable[str] = ("A", "B", "C"),
    rhs_data: InitialData | None = None,
) -> VerificationReport:
    """Solve, apply the annihilator, and compare with the requested right-hand sides.

    ``rhs_data`` substitutes different initial data on the right-hand side only
    (used to demonstrate detection of a wrong equation).
    """
    which = _select(problem, which)
    window = _window(window, problem.dim)
    forms = [f.upper() for f in forms]
    if not forms or any(f not in "ABC" or len(f) != 1 for f in forms):
        raise ValueError(f"forms must be a nonempty subset of A, B, C: {forms}")
    F = solve_cauchy(problem, window)
    op = recurrence_to_annihilator(problem.equation.to_forward(), problem.ell)
    lhs, dropped = op_apply_counted(op, F)
    report = VerificationReport(which, window, dropped={"lhs": dropped})

    rhs_problem = problem
    if rhs_data is not None:
        rhs_problem = dataclasses.replace(problem, data=rhs_data)

    if which == "t5":
        _compare(report, "LHS-RHS", lhs, rhs_theorem5(rhs_problem, window))
        return report

    if which == "t1":
        built = rhs_theorem1(rhs_problem, window)
    else:
        built = rhs_theorem3(rhs_problem, window)
    m = problem.equation.m
    for name in forms:
        rhs = getattr(built, name)
        _compare(report, f"LHS-{name}", lhs, rhs)
        for x, v in rhs.items():
            if not in_initial_set(x, m):
                report.mismatches.append(Mismatch(f"support-{name}", x, Fraction(0), v))
    return report


def theorem4_check(c: Sequence, F: Series, window=None) -> VerificationReport:
    """Projection identity ``Pi[(1 - <c, S>) F] = sum_{x >= I} (1 - <c, delta^{-I}>) f(x) b_x``.

    Also checks the corollary: when the right side vanishes (``f`` solves the
    recurrence on ``x >= I``) the left side is the zero series.
    """
    n = F.dim
    c = [Fraction(v) for v in c]
    if len(c) != n:
        raise ValueError("dimension mismatch between c and the series")
    if any(k < 1 for k in F.ell):
        raise ValueError("projection undefined for ell_j = 0")
    if window is not None:
        F = truncate(F, _window(window, n))
    one = Poly.const(n, 1)
    units = [tuple(int(i == j) for i in range(n)) for j in range(n)]
    op = Operator(F.ell, [OperatorTerm(1, (0,) * n, one)] + [
        OperatorTerm(-cj, e, one) for cj, e in zip(c, units)
    ])
    applied, dropped = op_apply_counted(op, F)
    lhs = combined_projection(applied)

    rhs = {}
    for x in box((1,) * n, F.window) if all(F.window) else []:
        rhs[x] = F[x] - sum((cj * F[mi_sub(x, e)] for cj, e in zip(c, units)), Fraction(0))
    rhs = Series(F.ell, F.window, rhs)

    report = VerificationReport("t4", F.window, dropped={"lhs": dropped})
    _compare(report, "LHS-RHS", lhs, rhs)
    if rhs.is_zero():
        _compare(report, "corollary", lhs, Series.zero(F.ell, F.window))
    return report
