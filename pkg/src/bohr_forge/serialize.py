"""JSON interchange for polynomials and reports, plus CSV/Markdown tables.

Canonical form: Dirichlet terms ascending by frequency, multivariate terms in
lexicographic exponent order, roots of unity as reduced [k, m], floats with 17
significant digits. Identical inputs therefore serialize byte-identically.
"""

from __future__ import annotations

import io
import csv
import json
import math

from .coeffs import Coefficient
from .errors import ConfigError
from .polys import DirichletPolynomial, MultiPolynomial


def coeff_to_obj(c: Coefficient) -> dict:
    if c.root is not None:
        return {"root": [c.root[0], c.root[1]]}
    return {"re": float(c.value.real), "im": float(c.value.imag)}


def coeff_from_obj(obj) -> Coefficient:
    if not isinstance(obj, dict):
        raise ConfigError(f"coefficient must be an object, got {obj!r}")
    if set(obj) == {"root"}:
        k, m = obj["root"]
        return Coefficient.root_of_unity(int(k), int(m))
    if set(obj) == {"re", "im"}:
        return Coefficient.general(complex(float(obj["re"]), float(obj["im"])))
    raise ConfigError(f"coefficient object has unknown keys {sorted(obj)}")


def poly_to_obj(p) -> dict:
    if isinstance(p, DirichletPolynomial):
        return {
            "kind": "dirichlet",
            "terms": [{"n": n, "coeff": coeff_to_obj(c)} for n, c in p.items()],
        }
    if isinstance(p, MultiPolynomial):
        return {
            "kind": "multi",
            "vars": p.var_count,
            "terms": [{"exp": list(a), "coeff": coeff_to_obj(c)} for a, c in p.items()],
        }
    raise ConfigError(f"cannot serialize {type(p).__name__}")


def poly_from_obj(obj):
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ConfigError("polynomial object must have a 'kind' field")
    kind = obj["kind"]
    if kind == "dirichlet":
        _check_keys(obj, {"kind", "terms"})
        terms = [(int(t["n"]), coeff_from_obj(t["coeff"])) for t in _term_list(obj)]
        return DirichletPolynomial(terms)
    if kind == "multi":
        _check_keys(obj, {"kind", "vars", "terms"})
        r = int(obj["vars"])
        terms = [(tuple(int(e) for e in t["exp"]), coeff_from_obj(t["coeff"])) for t in _term_list(obj)]
        return MultiPolynomial(r, terms)
    raise ConfigError(f"unknown polynomial kind {kind!r}")


def _term_list(obj):
    terms = obj.get("terms", [])
    if not isinstance(terms, list):
        raise ConfigError("'terms' must be a list")
    return terms


def _check_keys(obj: dict, allowed: set) -> None:
    extra = set(obj) - allowed
    if extra:
        raise ConfigError(f"unknown fields {sorted(extra)}")


def canonical_json(obj, indent: int = 0) -> str:
    """Deterministic JSON with floats printed to 17 significant digits."""
    out: list[str] = []
    _emit(obj, out)
    text = "".join(out)
    return text


def _fmt_float(v: float) -> str:
    if math.isnan(v) or math.isinf(v):
        raise ConfigError("non-finite float in report")
    return format(v, ".17g")


def _emit(x, out: list[str]) -> None:
    if x is None:
        out.append("null")
    elif isinstance(x, bool):
        out.append("true" if x else "false")
    elif isinstance(x, int):
        out.append(str(x))
    elif isinstance(x, float):
        out.append(_fmt_float(x))
    elif isinstance(x, str):
        out.append(json.dumps(x))
    elif isinstance(x, (list, tuple)):
        out.append("[")
        for i, v in enumerate(x):
            if i:
                out.append(",")
            _emit(v, out)
        out.append("]")
    elif isinstance(x, dict):
        out.append("{")
        for i, (k, v) in enumerate(x.items()):
            if i:
                out.append(",")
            if not isinstance(k, str):
                raise ConfigError(f"JSON keys must be strings, got {k!r}")
            out.append(json.dumps(k))
            out.append(":")
            _emit(v, out)
        out.append("}")
    else:
        # numpy scalars and similar duck-typed numbers
        if hasattr(x, "item"):
            _emit(x.item(), out)
        else:
            raise ConfigError(f"cannot serialize {type(x).__name__}")


def _cell(v) -> str:
    if isinstance(v, float):
        return format(v, ".10g")
    return "" if v is None else str(v)


def csv_table(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(c)) for c in columns])
    return buf.getvalue()


def markdown_table(rows: list[dict], columns: list[str]) -> str:
    cells = [[_cell(row.get(c)) for c in columns] for row in rows]
    widths = [max(len(c), *(len(r[i]) for r in cells)) if cells else len(c) for i, c in enumerate(columns)]
    def line(parts):
        return "| " + " | ".join(p.ljust(w) for p, w in zip(parts, widths)) + " |"
    out = [line(columns), "| " + " | ".join("-" * w for w in widths) + " |"]
    out.extend(line(r) for r in cells)
    return "\n".join(out) + "\n"
