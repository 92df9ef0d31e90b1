"""JSON code/composition specifications and the '|'-separated word syntax.

A code spec is an object with a "kind" key:

    {"kind": "parity",       "rows": ["0101000", ...]}   parity-check rows
    {"kind": "generator",    "rows": ["1000100", ...]}   generator rows
    {"kind": "hamming",      "m": 3}
    {"kind": "repetition",   "n": 6}
    {"kind": "parity_check", "n": 4}
    {"kind": "cyclic",       "n": 7, "g": "1011"}        g has x^i at index i

A composition spec is an object with a "shape" key ("row", "column" or
"grid"); "cells" holds code specs (or names defined in an optional "codes"
table): a list for row/column shapes, a rectangular array of arrays for
grids.  Words are '0'/'1' runs joined by '|'; an absent grid cell is the
single token '·' between separators.
"""

from __future__ import annotations

import json
from typing import Optional, Union

from .families import CyclicSpec, cyclic_from_poly, hamming, parity_check, repetition
from .gf2 import BitMatrix, BitVector, Gf2Error, Gf2Poly
from .grid import MISSING_CELL, GridCode
from .linear import CodeError, LinearCode
from .super_codes import SuperColumnCode, SuperCodeword, SuperRowCode

AnyCode = Union[LinearCode, SuperRowCode, SuperColumnCode, GridCode]


class SpecError(ValueError):
    """Raised on malformed or constraint-violating spec documents."""


def parse_spec(text: str) -> AnyCode:
    """Parse a JSON document into a code or composition."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SpecError("spec document must be a JSON object")
    if "shape" in doc:
        return _parse_composition(doc)
    return _parse_code(doc, "")


def _parse_code(doc, where: str) -> LinearCode:
    if not isinstance(doc, dict) or "kind" not in doc:
        raise SpecError(f"{where or 'spec'}: expected an object with a 'kind' key")
    kind = doc["kind"]
    try:
        if kind == "parity":
            return LinearCode.from_parity(_matrix(doc, "rows", where))
        if kind == "generator":
            return LinearCode.from_generator(_matrix(doc, "rows", where))
        if kind == "hamming":
            return hamming(_integer(doc, "m", where))
        if kind == "repetition":
            return repetition(_integer(doc, "n", where))
        if kind == "parity_check":
            return parity_check(_integer(doc, "n", where))
        if kind == "cyclic":
            n = _integer(doc, "n", where)
            g = doc.get("g")
            if not isinstance(g, str):
                raise SpecError(f"{where or 'spec'}: cyclic kind needs a 'g' bit string")
            return cyclic_from_poly(CyclicSpec(n, Gf2Poly.from_string(g)))
    except (CodeError, Gf2Error) as exc:
        raise SpecError(f"{where or 'spec'}: {exc}") from exc
    raise SpecError(f"{where or 'spec'}: unknown code kind {kind!r}")


def _parse_composition(doc: dict) -> AnyCode:
    shape = doc["shape"]
    if shape not in ("row", "column", "grid"):
        raise SpecError(f"unknown composition shape {shape!r}")
    named = doc.get("codes", {})
    if not isinstance(named, dict):
        raise SpecError("'codes' must map names to code specs")
    table = {name: _parse_code(spec, f"codes[{name!r}]") for name, spec in named.items()}

    def resolve(entry, where: str) -> LinearCode:
        if isinstance(entry, str):
            if entry not in table:
                raise SpecError(f"{where}: unknown code name {entry!r}")
            return table[entry]
        return _parse_code(entry, where)

    cells = doc.get("cells")
    if cells is None:
        raise SpecError("composition spec needs a 'cells' key")
    try:
        if shape == "grid":
            if (not isinstance(cells, list) or not cells
                    or any(not isinstance(r, list) for r in cells)):
                raise SpecError("grid 'cells' must be an array of arrays")
            grid = [[resolve(e, f"cells[{i}][{j}]") for j, e in enumerate(row)]
                    for i, row in enumerate(cells)]
            return GridCode(grid)
        if not isinstance(cells, list) or not cells:
            raise SpecError(f"{shape} 'cells' must be a non-empty array")
        codes = [resolve(e, f"cells[{i}]") for i, e in enumerate(cells)]
        return SuperRowCode(codes) if shape == "row" else SuperColumnCode(codes)
    except CodeError as exc:
        raise SpecError(str(exc)) from exc


def _matrix(doc: dict, key: str, where: str) -> BitMatrix:
    rows = doc.get(key)
    if (not isinstance(rows, list) or not rows
            or any(not isinstance(r, str) for r in rows)):
        raise SpecError(f"{where or 'spec'}: '{key}' must be a non-empty array of bit strings")
    try:
        return BitMatrix.from_strings(rows)
    except Gf2Error as exc:
        raise SpecError(f"{where or 'spec'}: {exc}") from exc


def _integer(doc: dict, key: str, where: str) -> int:
    v = doc.get(key)
    if not isinstance(v, int) or isinstance(v, bool):
        raise SpecError(f"{where or 'spec'}: '{key}' must be an integer")
    return v


# -- word syntax --------------------------------------------------------------


def parse_super_word(text: str) -> list[Optional[BitVector]]:
    """Split a '|'-separated word; the token '·' marks an absent cell."""
    segments: list[Optional[BitVector]] = []
    for token in text.strip().split("|"):
        if token == "":
            raise SpecError("empty segment in super word")
        if token == MISSING_CELL:
            segments.append(None)
            continue
        try:
            segments.append(BitVector.from_string(token))
        except Gf2Error as exc:
            raise SpecError(str(exc)) from exc
    return segments


def format_super_word(segments) -> str:
    return "|".join(MISSING_CELL if s is None else str(s) for s in segments)


def to_super_codeword(segments: list[Optional[BitVector]]) -> SuperCodeword:
    if any(s is None for s in segments):
        raise SpecError("absent cells are only valid inside grid words")
    return SuperCodeword(tuple(segments))  # type: ignore[arg-type]
