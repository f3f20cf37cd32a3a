"""Recurrences <-> annihilating operators.

A forward equation ``sum_alpha p_alpha(x) f(x + alpha) = 0`` gives the
operator ``sum_alpha S^{m - alpha} o [p_alpha(t - alpha)](theta)``, whose
coefficient at ``y >= m`` is exactly the equation at ``x = y - m``.
Conversely the operator ``sum_beta S^beta o q_beta(theta)`` has coefficient
``sum_beta q_beta(y - beta) f(y - beta)`` at ``y``.
"""

from __future__ import annotations

from typing import Sequence

from .exact import Poly, mi_sub
from .operators import Operator, OperatorTerm, op_apply
from .recurrence import BACKWARD, FORWARD, DifferenceEquation
from .series import Series


def recurrence_to_annihilator(eq: DifferenceEquation, ell: Sequence[int] | None = None) -> Operator:
    if eq.form != FORWARD:
        raise ValueError("expected a forward-form equation; convert it first")
    n = eq.dim
    ell = (1,) * n if ell is None else tuple(ell)
    if len(ell) != n:
        raise ValueError("dimension mismatch between equation and ell")
    terms = []
    for alpha, p in eq.terms.items():
        terms.append(OperatorTerm(1, mi_sub(eq.m, alpha), p.shift(tuple(-a for a in alpha))))
    return Operator(ell, terms)


def operator_relation(op: Operator) -> dict:
    """Backward relation ``{beta: r_beta}`` with ``sum_beta r_beta(y) f(y - beta) = 0``
    holding for ``y >= max shift``; ``r_beta(y) = q_beta(y - beta)``."""
    if op.is_zero():
        raise ValueError("the zero operator carries no recurrence")
    return {t.beta: t.poly.shift(tuple(-b for b in t.beta)) for t in op.terms}


def operator_to_recurrence(op: Operator) -> DifferenceEquation:
    """Recurrence encoded by ``op``, returned in forward form.

    The relation is reindexed by the componentwise minimal shift ``b`` so the
    backward form starts at shift 0; the order is ``max shift - b``.
    """
    rel = operator_relation(op)
    n = op.dim
    low = tuple(min(beta[i] for beta in rel) for i in range(n))
    if low not in rel:
        raise ValueError(f"no term at the minimal shift {low}; the relation has no leading term")
    high = tuple(max(beta[i] for beta in rel) for i in range(n))
    backward = {mi_sub(beta, low): r.shift(low) for beta, r in rel.items()}
    return DifferenceEquation(mi_sub(high, low), backward, BACKWARD).to_forward()


def lemma3_prefactor(rhs, ell: Sequence[int] = (1,)) -> Operator:
    """``prod_x (theta - x)`` over the support of a one-dimensional series.

    Each factor kills the basis term at ``x``, so the product annihilates
    ``rhs``; the empty support gives the identity.  ``rhs`` may also be an
    iterable of indices (a known support bound), with ``ell`` given explicitly.
    """
    if isinstance(rhs, Series):
        if rhs.dim != 1:
            raise NotImplementedError("the theta-prefactor is only available in one dimension")
        ell = rhs.ell
        support = [x for (x,) in rhs.support()]
    else:
        if len(ell) != 1:
            raise NotImplementedError("the theta-prefactor is only available in one dimension")
        support = sorted({x if isinstance(x, int) else x[0] for x in rhs})
    t = Poly.var(1)
    q = Poly.const(1, 1)
    for x in support:
        q = q * (t - x)
    return Operator.from_poly(ell, q)


def annihilating_residual(eq: DifferenceEquation, F: Series) -> Series:
    """``recurrence_to_annihilator(eq)`` applied to ``F``."""
    return op_apply(recurrence_to_annihilator(eq.to_forward(), F.ell), F)


def dfinite_operator(ell: Sequence[int], d: dict) -> Operator:
    """Operator ``sum_j P_j theta^j`` with ``P_j = sum_i d[j][i] S^i`` (one dimension).

    Each ``d_{i,j}`` becomes the term ``(d_{i,j}, i, t^j)``.
    """
    if len(ell) != 1:
        raise NotImplementedError("this constructor is one-dimensional")
    t = Poly.var(1)
    return Operator(ell, [OperatorTerm(c, (i,), t ** j) for j, row in d.items() for i, c in row.items()])
