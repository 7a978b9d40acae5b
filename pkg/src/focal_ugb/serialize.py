"""Deterministic JSON encodings for polynomials, focals, facets and reports.

Polynomials serialize as a list of terms, each a sparse exponent map keyed by
variable name with the coefficient as a decimal string; term order follows
the packed monomial value so identical inputs always produce identical bytes.
"""

from __future__ import annotations

import json

from .cameras import Focal
from .poly import MultiPoly, mono_items


def poly_to_json(f: MultiPoly) -> list:
    nv = f.space.nvars
    out = []
    for m in sorted(f.terms):
        exps = {f.space.name(v): e for v, e in mono_items(m, nv)}
        out.append({"exponents": exps, "coeff": f.field.coeff_str(f.terms[m])})
    return out


def poly_from_json(data, space, field) -> MultiPoly:
    terms = []
    for t in data:
        exps = {space.index_of(nm): e for nm, e in t["exponents"].items()}
        from fractions import Fraction
        terms.append((exps, field(Fraction(t["coeff"]))))
    return MultiPoly.from_terms(space, field, terms)


def focal_to_json(f: Focal) -> dict:
    space = f.poly.space
    return {
        "sigma": list(f.sigma),
        "rows": list(f.rows),
        "profile": list(f.profile),
        "spread": [space.name(v) for v in sorted(f.spread)],
        "poly": poly_to_json(f.poly),
    }


def facet_names(mask: int, space) -> list:
    from .complexes import mask_vars
    return [space.name(v) for v in mask_vars(mask)]


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, sort_keys=True, indent=2) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def dump_jsonl(rows, path) -> int:
    count = 0
    with open(path, "w") as fh:
        for row in rows:
            fh.write(json.dumps(row, sort_keys=True,
                                separators=(",", ":")) + "\n")
            count += 1
    return count
