# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; semantics identical to ``_pykernels``."""

from fractions import Fraction

cdef object _ZERO = Fraction(0)


cpdef object poly_eval(tuple qterms, tuple point):
    cdef Py_ssize_t i, n = len(point)
    cdef long k
    cdef object total = _ZERO
    cdef object term
    cdef tuple e
    for e, c in qterms:
        term = c
        for i in range(n):
            k = e[i]
            if k == 1:
                term = term * point[i]
            elif k:
                term = term * point[i] ** k
        total = total + term
    return total


def apply_terms(list terms, dict coeffs, tuple window):
    cdef dict out = {}
    cdef long dropped = 0
    cdef Py_ssize_t i, n = len(window)
    cdef tuple x, beta, qterms
    cdef list y
    cdef bint inside
    cdef object coeff, v, w, s, key
    for coeff, beta, qterms in terms:
        for x, v in coeffs.items():
            w = coeff * poly_eval(qterms, x) * v
            if not w:
                continue
            inside = True
            y = [0] * n
            for i in range(n):
                y[i] = <long>x[i] + <long>beta[i]
                if <long>y[i] > <long>window[i]:
                    inside = False
                    break
            if not inside:
                dropped += 1
                continue
            key = tuple(y)
            s = out.get(key)
            out[key] = w if s is None else s + w
    return {k: v for k, v in out.items() if v}, dropped


def recurrence_sweep(dict table, list points, tuple m, tuple lead, list others):
    cdef Py_ssize_t i, n = len(m)
    cdef tuple y, x, alpha, qterms
    cdef list buf
    cdef object d, s, v
    for y in points:
        buf = [0] * n
        for i in range(n):
            buf[i] = <long>y[i] - <long>m[i]
        x = tuple(buf)
        d = poly_eval(lead, x)
        if not d:
            raise ZeroDivisionError(f"leading coefficient vanishes at x={x}")
        s = _ZERO
        for alpha, qterms in others:
            for i in range(n):
                buf[i] = <long>x[i] + <long>alpha[i]
            v = table.get(tuple(buf))
            if v:
                s = s + poly_eval(qterms, x) * v
        if s:
            table[y] = -s / d
    return table
