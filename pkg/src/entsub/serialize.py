"""Deterministic JSON for states and decompositions.

Exact values are written as "p/q" strings; floating values as decimal
strings with 17 significant digits, which round-trip IEEE doubles.
"""

import json
from fractions import Fraction

from .decompose import Decomposition
from .embeddings import EmbedSpec, EvaluationPoint
from .errors import EntsubError, ShapeMismatch
from .gaussian import GaussianRational, format_rational, parse_rational
from .states import Ket, NumericKet


class FormatError(EntsubError, ValueError):
    """Malformed state or decomposition file."""


def _float_text(x):
    return format(float(x), ".17g")


def terms_to_list(ket):
    out = []
    for index, value in ket.terms():
        if isinstance(ket, NumericKet):
            re, im = _float_text(value.real), _float_text(value.imag)
        else:
            re, im = format_rational(value.re), format_rational(value.im)
        out.append({"index": list(index), "re": re, "im": im})
    return out


def state_to_dict(ket):
    return {"dims": list(ket.dims), "terms": terms_to_list(ket)}


def _is_exact_text(text):
    return "/" in text


def terms_from_list(dims, terms):
    try:
        pairs = [(tuple(t["index"]), t["re"], t.get("im", "0/1")) for t in terms]
    except (KeyError, TypeError) as exc:
        raise FormatError(f"bad term entry: {exc}") from exc
    try:
        if all(_is_exact_text(str(re)) and _is_exact_text(str(im)) for _, re, im in pairs):
            return Ket(dims, {i: GaussianRational.parse(re, im) for i, re, im in pairs})
        return NumericKet(dims, {i: complex(float(re), float(im)) for i, re, im in pairs})
    except (ValueError, ZeroDivisionError, ShapeMismatch) as exc:
        raise FormatError(f"bad coefficient or index: {exc}") from exc


def state_from_dict(data):
    if not isinstance(data, dict) or "dims" not in data or "terms" not in data:
        raise FormatError("state file needs 'dims' and 'terms'")
    return terms_from_list(tuple(data["dims"]), data["terms"])


def _norm_text(value):
    if isinstance(value, Fraction):
        return format_rational(value)
    return _float_text(value)


def _vector(ket, squared_norm):
    return {"terms": terms_to_list(ket), "squared_norm": _norm_text(squared_norm)}


def decomposition_to_dict(dec, report=None):
    spec = dec.spec
    data = {
        "spec": {"dims": list(spec.dims), "k_sub": spec.k_sub, "family": spec.family.value},
        "scheme": dec.scheme,
        "seed": dec.seed,
        "points": [
            {"x": format_rational(p.x), "free_coords": [format_rational(c) for c in p.free_coords]}
            for p in dec.points
        ],
        "product_part": [_vector(k, k.norm_sq()) for k in dec.product_part],
        "ges_basis": [_vector(k, k.norm_sq()) for k in dec.ges_basis],
        "ces_basis": [_vector(k, nrm) for k, nrm in zip(dec.ces_basis, dec.squared_norms)],
        "ces_blocks": [len(b) for b in dec.ces_blocks],
    }
    if report is not None:
        data["report"] = report.to_dict()
    return data


def _parse_norm(text):
    return parse_rational(text) if _is_exact_text(text) else float(text)


def decomposition_from_dict(data):
    try:
        s = data["spec"]
        spec = EmbedSpec(tuple(s["dims"]), s.get("k_sub"))
        dims = spec.dims
        points = [
            EvaluationPoint(parse_rational(p["x"]), [parse_rational(c) for c in p["free_coords"]])
            for p in data["points"]
        ]

        def vectors(key):
            return [terms_from_list(dims, v["terms"]) for v in data[key]]

        ces = vectors("ces_basis")
        norms = [_parse_norm(v["squared_norm"]) for v in data["ces_basis"]]
        blocks, start = [], 0
        for size in data["ces_blocks"]:
            blocks.append(ces[start : start + size])
            start += size
        return Decomposition(
            spec=spec,
            scheme=data["scheme"],
            seed=int(data["seed"]),
            points=points,
            product_part=vectors("product_part"),
            ges_basis=vectors("ges_basis"),
            ces_basis=ces,
            squared_norms=norms,
            ces_blocks=blocks,
        )
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, EntsubError):
            raise
        raise FormatError(f"bad decomposition file: {exc}") from exc


def dumps(data):
    return json.dumps(data, sort_keys=True, indent=1) + "\n"


def load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: invalid JSON ({exc})") from exc
