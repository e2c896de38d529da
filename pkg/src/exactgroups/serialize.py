"""JSON (de)serialization shared by the CLI and the file interfaces.

All numeric payloads are decimal strings ("-12"), rationals as "p/q", so no
consumer can lose precision.  Matrices use the schema
{"rows": n, "cols": m, "entries": [["...", ...], ...]}.
"""

from __future__ import annotations

from fractions import Fraction

from .cocycle import CocycleSpec
from .matrix import Matrix


class InputError(Exception):
    """Malformed input document."""


def scalar_to_str(x):
    if isinstance(x, Fraction) and x.denominator != 1:
        return f"{x.numerator}/{x.denominator}"
    return str(int(x))


def parse_scalar(s):
    try:
        if isinstance(s, str) and "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return int(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar {s!r}") from exc


def vector_to_json(v):
    return [scalar_to_str(x) for x in v]


def parse_vector(doc):
    if not isinstance(doc, list):
        raise InputError("vector must be a JSON array")
    return tuple(parse_scalar(x) for x in doc)


def matrix_to_json(m):
    return {"rows": m.rows, "cols": m.cols,
            "entries": [[scalar_to_str(x) for x in row] for row in m.data]}


def parse_matrix(doc):
    if not isinstance(doc, dict) or "entries" not in doc:
        raise InputError('matrix must be {"rows", "cols", "entries"}')
    entries = doc["entries"]
    try:
        m = Matrix([[parse_scalar(x) for x in row] for row in entries])
    except Exception as exc:
        raise InputError(f"bad matrix entries: {exc}") from exc
    if "rows" in doc and (m.rows, m.cols) != (doc["rows"], doc.get("cols", m.cols)):
        raise InputError("declared shape disagrees with entries")
    return m


def word_to_json(word):
    return {"word": [{"gen": g, "exp": e} for g, e in word.tokens],
            "central": word.central}


def parse_index_word(doc):
    """Word over generator indices: [{"gen": i, "exp": e}, ...]."""
    if not isinstance(doc, list):
        raise InputError("word must be a JSON array")
    out = []
    for tok in doc:
        try:
            out.append((int(tok["gen"]), int(tok["exp"])))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad word token {tok!r}") from exc
    return tuple(out)


def parse_cocycle_spec(doc):
    if not isinstance(doc, dict):
        raise InputError("cocycle spec must be a JSON object")
    try:
        gens = tuple(parse_matrix(m) for m in doc["generators"])
        values = tuple(parse_vector(v) for v in doc["values"])
    except KeyError as exc:
        raise InputError(f"cocycle spec missing key {exc}") from exc
    relators = tuple(parse_index_word(w) for w in doc.get("relators", []))
    return CocycleSpec(generators=gens, values=values, relators=relators)
