"""Pure-Python hot kernels.

Reference implementation of the kernels in ``_ckernels.pyx``.  Both modules
expose the same three functions with identical semantics; ``kernels`` picks
one at import time.

Polynomials cross this boundary as tuples of ``(exponent tuple, Fraction)``
pairs and coefficient tables as ``{index tuple: Fraction}`` dicts.
"""

from fractions import Fraction

_ZERO = Fraction(0)


def poly_eval(qterms, point):
    total = _ZERO
    for e, c in qterms:
        term = c
        for xi, k in zip(point, e):
            if k:
                term *= xi ** k
        total += term
    return total


def apply_terms(terms, coeffs, window):
    """Apply ``sum_k coeff_k S^{beta_k} q_k(theta)`` to a coefficient table.

    Returns ``(table, dropped)`` where ``dropped`` counts nonzero contributions
    whose target index fell outside ``window``.
    """
    out = {}
    dropped = 0
    n = len(window)
    for coeff, beta, qterms in terms:
        for x, v in coeffs.items():
            w = coeff * poly_eval(qterms, x) * v
            if not w:
                continue
            y = tuple(x[i] + beta[i] for i in range(n))
            inside = True
            for i in range(n):
                if y[i] > window[i]:
                    inside = False
                    break
            if not inside:
                dropped += 1
                continue
            s = out.get(y)
            out[y] = w if s is None else s + w
    return {y: v for y, v in out.items() if v}, dropped


def recurrence_sweep(table, points, m, lead, others):
    """Fill ``table`` at ``points`` (already in dependency order).

    At each point ``y`` with ``x = y - m``::

        f(y) = -(sum_alpha p_alpha(x) f(x + alpha)) / p_m(x)

    ``others`` lists ``(alpha, qterms)`` for every alpha != m.  Missing table
    entries read as zero.
    """
    n = len(m)
    for y in points:
        x = tuple(y[i] - m[i] for i in range(n))
        d = poly_eval(lead, x)
        if not d:
            raise ZeroDivisionError(f"leading coefficient vanishes at x={x}")
        s = _ZERO
        for alpha, qterms in others:
            v = table.get(tuple(x[i] + alpha[i] for i in range(n)))
            if v:
                s += poly_eval(qterms, x) * v
        if s:
            table[y] = -s / d
    return table
