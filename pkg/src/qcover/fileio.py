"""Shared complex file formats, canonical serialization, and digests.

Two interchangeable input formats:

* JSON: ``{"facets": [[1,2,3],[2,4], ...]}`` with 1-based vertex labels,
* text: one facet per line, vertices whitespace-separated; blank lines and
  ``#`` comment lines are ignored.

Writers emit facets in canonical order, so parse -> write round-trips any
equivalent input to identical bytes.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path
from typing import Union

from .complexes import SimplicialComplex, new_complex
from .errors import InputFormatError


def parse_facets_json(text: str) -> list[list[int]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or "facets" not in doc:
        raise InputFormatError('JSON input must be an object with a "facets" key')
    facets = doc["facets"]
    if not isinstance(facets, list):
        raise InputFormatError('"facets" must be a list of vertex lists')
    out = []
    for idx, f in enumerate(facets):
        if not isinstance(f, list):
            raise InputFormatError(f'"facets"[{idx}] is not a list')
        for v in f:
            if not isinstance(v, int) or isinstance(v, bool):
                raise InputFormatError(
                    f'"facets"[{idx}] contains {v!r}; labels must be integers'
                )
        out.append(list(f))
    return out


def parse_facets_text(text: str) -> list[list[int]]:
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        row = []
        for tok in stripped.split():
            try:
                row.append(int(tok))
            except ValueError:
                raise InputFormatError(
                    f"line {lineno}: {tok!r} is not an integer vertex label"
                ) from None
        out.append(row)
    return out


def parse_facets(text: str) -> list[list[int]]:
    """Sniff the format: JSON when the first character is '{', text otherwise."""
    stripped = text.lstrip()
    if not stripped:
        raise InputFormatError("empty input")
    if stripped.startswith("{"):
        return parse_facets_json(text)
    return parse_facets_text(text)


def load_complex(path: Union[str, Path]) -> SimplicialComplex:
    text = Path(path).read_text(encoding="utf-8")
    return new_complex(parse_facets(text))


def to_json(cx: SimplicialComplex) -> str:
    doc = {"facets": [sorted(f) for f in cx.facets]}
    return json.dumps(doc, separators=(",", ":")) + "\n"


def to_text(cx: SimplicialComplex) -> str:
    return "".join(" ".join(str(v) for v in sorted(f)) + "\n" for f in cx.facets)


def complex_digest(cx: SimplicialComplex) -> str:
    """SHA-256 of the canonical JSON form; stable across input orderings."""
    return hashlib.sha256(to_json(cx).encode("utf-8")).hexdigest()
