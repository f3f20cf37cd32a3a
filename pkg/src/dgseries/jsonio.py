"""Canonical JSON encodings of series, operators, problems and equations.

Rationals travel as strings ``"p/q"`` (``"p"`` when the denominator is 1).
Coefficient lists are sorted graded-lexicographically by index, operator
terms by shift; :func:`dumps` output is byte-stable.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exact import Poly, format_rational, grlex_key, parse_rational
from .operators import Operator, OperatorTerm
from .recurrence import BACKWARD, FORWARD, CauchyProblem, DifferenceEquation, InitialData
from .series import Series, make_series


class FormatError(ValueError):
    """Malformed or inconsistent JSON input."""


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def _rat(text) -> Fraction:
    if not isinstance(text, str):
        raise FormatError(f"rationals must be strings like \"p/q\", got {text!r}")
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(str(exc)) from exc


def _index(value, dim: int, what: str) -> tuple:
    if not isinstance(value, list) or len(value) != dim:
        raise FormatError(f"{what} must be a list of {dim} integers, got {value!r}")
    if not all(isinstance(k, int) and not isinstance(k, bool) for k in value):
        raise FormatError(f"{what} must contain integers, got {value!r}")
    return tuple(value)


def _field(doc: dict, key: str):
    if not isinstance(doc, dict) or key not in doc:
        raise FormatError(f"missing field {key!r}")
    return doc[key]


def _dim(doc) -> int:
    dim = _field(doc, "dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise FormatError(f"dim must be a positive integer, got {dim!r}")
    return dim


# -- polynomials -----------------------------------------------------------

def poly_to_list(p: Poly) -> list:
    return [{"e": list(e), "c": format_rational(c)} for e, c in p.items()]


def poly_from_list(items, dim: int) -> Poly:
    if not isinstance(items, list):
        raise FormatError("polynomial must be a list of {e, c} entries")
    return Poly(dim, [(_index(_field(it, "e"), dim, "exponent"), _rat(_field(it, "c"))) for it in items])


# -- series ----------------------------------------------------------------

def series_to_dict(F: Series) -> dict:
    return {
        "dim": F.dim,
        "ell": list(F.ell),
        "window": list(F.window),
        "coeffs": [{"x": list(x), "v": format_rational(v)} for x, v in F.items()],
    }


def series_from_dict(doc: dict) -> Series:
    dim = _dim(doc)
    ell = _index(_field(doc, "ell"), dim, "ell")
    window = _index(_field(doc, "window"), dim, "window")
    coeffs = _field(doc, "coeffs")
    if not isinstance(coeffs, list):
        raise FormatError("coeffs must be a list")
    entries = [(_index(_field(c, "x"), dim, "x"), _rat(_field(c, "v"))) for c in coeffs]
    try:
        return make_series(dim, ell, window, entries)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# -- operators -------------------------------------------------------------

def operator_to_dict(op: Operator) -> dict:
    return {
        "dim": op.dim,
        "ell": list(op.ell),
        "terms": [
            {"coeff": format_rational(t.coeff), "beta": list(t.beta), "q": poly_to_list(t.q)}
            for t in op.terms
        ],
    }


def operator_from_dict(doc: dict) -> Operator:
    dim = _dim(doc)
    ell = _index(_field(doc, "ell"), dim, "ell")
    terms = _field(doc, "terms")
    if not isinstance(terms, list):
        raise FormatError("terms must be a list")
    out = []
    for t in terms:
        out.append(
            OperatorTerm(
                _rat(_field(t, "coeff")),
                _index(_field(t, "beta"), dim, "beta"),
                poly_from_list(_field(t, "q"), dim),
            )
        )
    try:
        return Operator(ell, out)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


# -- equations and problems ------------------------------------------------

def equation_to_dict(eq: DifferenceEquation, ell) -> dict:
    return {
        "dim": eq.dim,
        "ell": list(ell),
        "form": eq.form,
        "m": list(eq.m),
        "terms": [{"alpha": list(a), "p": poly_to_list(p)} for a, p in eq.terms.items()],
    }


def problem_to_dict(problem: CauchyProblem) -> dict:
    doc = equation_to_dict(problem.equation, problem.ell)
    data = problem.data
    doc["initial"] = {
        "base_offset": list(problem.base_offset),
        "values": [
            {"x": list(x), "v": format_rational(v)}
            for x, v in sorted(data.values.items(), key=lambda kv: grlex_key(kv[0]))
        ],
        "default": format_rational(data.default),
    }
    return doc


def equation_from_dict(doc: dict) -> tuple:
    """Return ``(equation, ell)``."""
    dim = _dim(doc)
    ell = _index(_field(doc, "ell"), dim, "ell")
    form = _field(doc, "form")
    if form not in (FORWARD, BACKWARD):
        raise FormatError(f"form must be 'forward' or 'backward', got {form!r}")
    m = _index(_field(doc, "m"), dim, "m")
    terms = _field(doc, "terms")
    if not isinstance(terms, list):
        raise FormatError("terms must be a list")
    polys = {}
    for t in terms:
        alpha = _index(_field(t, "alpha"), dim, "alpha")
        p = poly_from_list(_field(t, "p"), dim)
        polys[alpha] = polys.get(alpha, Poly.zero(dim)) + p
    try:
        return DifferenceEquation(m, polys, form), ell
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def problem_from_dict(doc: dict) -> CauchyProblem:
    eq, ell = equation_from_dict(doc)
    dim = eq.dim
    init = doc.get("initial", {})
    if not isinstance(init, dict):
        raise FormatError("initial must be an object")
    offset = init.get("base_offset")
    if offset is not None:
        offset = _index(offset, dim, "base_offset")
    values = {}
    for v in init.get("values", []):
        x = _index(_field(v, "x"), dim, "x")
        values[x] = values.get(x, 0) + _rat(_field(v, "v"))
    default = _rat(init["default"]) if "default" in init else Fraction(0)
    try:
        return CauchyProblem(eq, InitialData(values, default, offset), ell)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc


def load(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc


def kind_of(doc) -> str:
    """Classify a document as ``series``, ``operator`` or ``problem``."""
    if not isinstance(doc, dict):
        raise FormatError("expected a JSON object")
    if "coeffs" in doc:
        return "series"
    if "form" in doc or "m" in doc:
        return "problem"
    if "terms" in doc:
        return "operator"
    raise FormatError("unrecognized document kind")
