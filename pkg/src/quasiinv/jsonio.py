"""Canonical JSON interchange forms.

A polynomial is {"nvars": n, "terms": [{"exp": [...], "num": "...",
"den": "..."}, ...]} with terms in graded-lex descending exponent order;
identical values always serialize to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .exactalg import MultiPoly, PowerSeriesQ
from .quasi import QIWitness
from .structure import HilbertReport
from .tableaux import Tableau


def poly_to_obj(p: MultiPoly) -> dict:
    return {
        "nvars": p.nvars,
        "terms": [
            {"exp": list(exp), "num": str(c.numerator), "den": str(c.denominator)}
            for exp, c in p.sorted_terms()
        ],
    }


def poly_from_obj(obj: dict) -> MultiPoly:
    nvars = int(obj["nvars"])
    terms = {}
    for term in obj.get("terms", []):
        exp = tuple(int(e) for e in term["exp"])
        terms[exp] = Fraction(int(term["num"]), int(term["den"]))
    return MultiPoly(nvars, terms)


def tableau_to_obj(t: Tableau) -> dict:
    return {"shape": list(t.shape.parts), "rows": [list(row) for row in t.rows]}


def tableau_from_obj(obj: dict) -> Tableau:
    return Tableau(obj["rows"])


def series_to_obj(s: PowerSeriesQ) -> dict:
    return {"truncation": s.truncation, "coeffs": list(s.coeffs)}


def witness_to_obj(w: QIWitness, seed: int | None = None) -> dict:
    obj = {
        "n": w.n,
        "m": w.m,
        "degree": w.degree,
        "dimension": w.dimension,
        "basis": [poly_to_obj(p) for p in w.basis],
    }
    if seed is not None:
        obj["seed"] = seed
    return obj


def hilbert_report_to_obj(report: HilbertReport, oracle=None) -> dict:
    obj = {
        "n": report.n,
        "m": report.m,
        "truncation": report.truncation,
        "shapes": [
            {"shape": list(parts), "exponents": list(exps)}
            for parts, exps in report.shape_exponents
        ],
        "per_shape_series": [
            {"shape": list(parts), "coeffs": list(series.coeffs)}
            for parts, series in report.per_shape_series
        ],
        "total": list(report.total.coeffs),
    }
    if oracle is not None:
        obj["oracle"] = oracle
    return obj


def dumps(obj) -> str:
    """Compact deterministic JSON text (trailing newline included)."""
    return json.dumps(obj, separators=(",", ":"), sort_keys=True) + "\n"
