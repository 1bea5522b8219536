"""Lossless JSON interchange: fraction strings, parameter files, witnesses.

All exact values travel as decimal-free fraction strings ("p/q" or "p"),
complex values as {"re": ..., "im": ...} objects.  Parsing is strict:
unknown keys, floats, and zero denominators are rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .criteria import WitnessVector
from .errors import ParseError
from .family import CheckerParams, PARAM_LETTERS
from .gaussian import GaussRat
from .matrices import GMat
from .subfamily import BrussPeresParams, COMPLEX_LETTERS, SubfamilyParams

_FRACTION_RE = re.compile(r"^-?\d+(/\d+)?$")

PPT_REAL_KEYS = ("t", "x", "y")
BRUSS_PERES_REAL_KEYS = ("t", "x")
BRUSS_PERES_COMPLEX_KEYS = ("a", "b", "c", "f")


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text) -> Fraction:
    if not isinstance(text, str) or not _FRACTION_RE.match(text):
        raise ParseError(f"bad fraction string {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def gauss_to_obj(z: GaussRat) -> dict:
    return {"re": format_fraction(z.re), "im": format_fraction(z.im)}


def obj_to_gauss(obj) -> GaussRat:
    if not isinstance(obj, dict) or set(obj) != {"re", "im"}:
        raise ParseError(f"complex value must be an object with keys re, im: {obj!r}")
    return GaussRat(parse_fraction(obj["re"]), parse_fraction(obj["im"]))


# ---------------------------------------------------------------------------
# Parameter documents.


def checker_params_to_doc(p: CheckerParams) -> dict:
    return {
        "family": "full",
        "params": {ch: gauss_to_obj(getattr(p, ch)) for ch in PARAM_LETTERS},
    }


def subfamily_params_to_doc(sp: SubfamilyParams) -> dict:
    params = {key: format_fraction(getattr(sp, key)) for key in PPT_REAL_KEYS}
    params.update({ch: gauss_to_obj(getattr(sp, ch)) for ch in COMPLEX_LETTERS})
    return {"family": "ppt", "params": params}


def bruss_peres_params_to_doc(bp: BrussPeresParams) -> dict:
    params = {key: format_fraction(getattr(bp, key)) for key in BRUSS_PERES_REAL_KEYS}
    params.update({ch: gauss_to_obj(getattr(bp, ch)) for ch in BRUSS_PERES_COMPLEX_KEYS})
    return {"family": "bruss-peres", "params": params}


def _require_keys(mapping, expected, what):
    if not isinstance(mapping, dict):
        raise ParseError(f"{what} must be a JSON object")
    got = set(mapping)
    expected = set(expected)
    if got != expected:
        unknown = sorted(got - expected)
        missing = sorted(expected - got)
        parts = []
        if unknown:
            parts.append(f"unknown keys {unknown}")
        if missing:
            parts.append(f"missing keys {missing}")
        raise ParseError(f"{what}: " + "; ".join(parts))


def parse_param_doc(doc) -> tuple:
    """Parse a parameter document; returns ("full", CheckerParams) or ("ppt", SubfamilyParams)."""
    _require_keys(doc, ("family", "params"), "parameter document")
    family = doc["family"]
    params = doc["params"]
    if family == "full":
        _require_keys(params, PARAM_LETTERS, "full-family params")
        return "full", CheckerParams.from_dict(
            {ch: obj_to_gauss(params[ch]) for ch in PARAM_LETTERS}
        )
    if family == "ppt":
        _require_keys(params, PPT_REAL_KEYS + tuple(COMPLEX_LETTERS), "ppt-family params")
        kwargs = {key: parse_fraction(params[key]) for key in PPT_REAL_KEYS}
        kwargs.update({ch: obj_to_gauss(params[ch]) for ch in COMPLEX_LETTERS})
        return "ppt", SubfamilyParams(**kwargs)
    raise ParseError(f"unknown family {family!r} (expected 'full' or 'ppt')")


def parse_bruss_peres_doc(doc) -> BrussPeresParams:
    _require_keys(doc, ("family", "params"), "parameter document")
    if doc["family"] != "bruss-peres":
        raise ParseError(f"expected family 'bruss-peres', got {doc['family']!r}")
    params = doc["params"]
    _require_keys(params, BRUSS_PERES_REAL_KEYS + BRUSS_PERES_COMPLEX_KEYS,
                  "bruss-peres params")
    return BrussPeresParams(
        t=parse_fraction(params["t"]),
        x=parse_fraction(params["x"]),
        a=obj_to_gauss(params["a"]),
        b=obj_to_gauss(params["b"]),
        c=obj_to_gauss(params["c"]),
        f=obj_to_gauss(params["f"]),
    )


# ---------------------------------------------------------------------------
# Witness documents: either 9 components or a list of product pairs.


def parse_witness_doc(doc) -> WitnessVector:
    if not isinstance(doc, dict) or len(doc) != 1:
        raise ParseError("witness document must have exactly one of: components, pairs")
    if "components" in doc:
        comps = doc["components"]
        if not isinstance(comps, list) or len(comps) != 9:
            raise ParseError("witness components must be a list of 9 complex values")
        return WitnessVector.from_components([obj_to_gauss(c) for c in comps])
    if "pairs" in doc:
        pairs = doc["pairs"]
        if not isinstance(pairs, list) or not pairs:
            raise ParseError("witness pairs must be a nonempty list")
        parsed = []
        for pair in pairs:
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError("each witness pair must be [factor_a, factor_b]")
            u, v = pair
            if not (isinstance(u, list) and isinstance(v, list) and len(u) == len(v) == 3):
                raise ParseError("witness factors must be 3-vectors")
            parsed.append(([obj_to_gauss(z) for z in u], [obj_to_gauss(z) for z in v]))
        return WitnessVector.from_pairs(parsed)
    raise ParseError("witness document must have exactly one of: components, pairs")


def witness_to_doc(w: WitnessVector) -> dict:
    return {"components": [gauss_to_obj(z) for z in w.components]}


# ---------------------------------------------------------------------------
# Matrix dumps: nested row-major lists of complex objects.


def matrix_to_obj(m: GMat) -> list:
    return [[gauss_to_obj(m[r, c]) for c in range(m.cols)] for r in range(m.rows)]


def parse_matrix_obj(obj) -> GMat:
    if not isinstance(obj, list) or not obj or not all(isinstance(r, list) for r in obj):
        raise ParseError("matrix must be a nested list of complex values")
    width = len(obj[0])
    if any(len(r) != width for r in obj):
        raise ParseError("matrix rows have unequal lengths")
    return GMat.from_rows([[obj_to_gauss(x) for x in row] for row in obj])
