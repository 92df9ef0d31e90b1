"""m x n grids of linear codes: per-cell syndromes and decoding, row/column
stream serialization, redundancy voting, chart and mask selection, the
cellwise dot product and orthogonal grids.

Grid constraints: all cells of a column share one length, all cells of a row
share one check-symbol count.  A grid codeword may mark cells as absent
(sender-side empty marker); absent cells serialize as the token MISSING_CELL
and are skipped by syndromes and voting.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from importlib import resources
from typing import Optional, Sequence

from .approx import pseudo_inner
from .gf2 import BitVector
from .linear import CodeError, LinearCode, Syndrome

MISSING_CELL = "·"


class GridError(CodeError):
    """Raised on grid constraint or shape violations."""


Cells = tuple[tuple[Optional[BitVector], ...], ...]


@dataclass(frozen=True, slots=True)
class GridCodeword:
    """An m x n array of cell vectors; None marks an absent cell."""

    cells: Cells

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Optional[BitVector]]]) -> "GridCodeword":
        if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
            raise GridError("cell rows must be non-empty and rectangular")
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def parse_rows(cls, rows: Sequence[Sequence[str]]) -> "GridCodeword":
        return cls.from_rows([[None if t == MISSING_CELL else BitVector.from_string(t)
                               for t in row] for row in rows])

    @property
    def m(self) -> int:
        return len(self.cells)

    @property
    def n(self) -> int:
        return len(self.cells[0])

    def cell(self, i: int, j: int) -> Optional[BitVector]:
        return self.cells[i][j]

    def to_row_stream(self) -> list[str]:
        """Row i as its cells left to right, '|'-joined."""
        return ["|".join(MISSING_CELL if c is None else str(c) for c in row)
                for row in self.cells]

    def to_col_stream(self) -> list[str]:
        """Column j as its cells top to bottom, '|'-joined."""
        return ["|".join(MISSING_CELL if self.cells[i][j] is None else str(self.cells[i][j])
                         for i in range(self.m))
                for j in range(self.n)]


class GridCode:
    """An m x n array of linear codes satisfying the grid constraints."""

    def __init__(self, cells: Sequence[Sequence[LinearCode]]):
        if not cells or not cells[0]:
            raise GridError("a grid needs at least one cell")
        if any(len(row) != len(cells[0]) for row in cells):
            raise GridError("grid rows must all have the same number of cells")
        self.cells: tuple[tuple[LinearCode, ...], ...] = tuple(tuple(r) for r in cells)
        self.m = len(self.cells)
        self.n = len(self.cells[0])
        for j in range(self.n):
            lengths = {self.cells[i][j].n for i in range(self.m)}
            if len(lengths) != 1:
                raise GridError(f"column {j} mixes code lengths {sorted(lengths)}")
        for i in range(self.m):
            checks = {c.n - c.k for c in self.cells[i]}
            if len(checks) != 1:
                raise GridError(f"row {i} mixes check-symbol counts {sorted(checks)}")

    @classmethod
    def uniform(cls, code: LinearCode, m: int, n: int) -> "GridCode":
        if m < 1 or n < 1:
            raise GridError("grid dimensions must be at least 1x1")
        return cls([[code] * n for _ in range(m)])

    def is_uniform(self) -> bool:
        """True when every cell carries the same parity-check matrix."""
        first = self.cells[0][0]
        return all(c is first or c.h == first.h for row in self.cells for c in row)

    def column_lengths(self) -> tuple[int, ...]:
        return tuple(self.cells[0][j].n for j in range(self.n))

    def row_check_counts(self) -> tuple[int, ...]:
        return tuple(self.cells[i][0].n - self.cells[i][0].k for i in range(self.m))

    # -- cellwise operations ------------------------------------------------

    def _check_shape(self, word: GridCodeword) -> None:
        if word.m != self.m or word.n != self.n:
            raise GridError(f"word is {word.m}x{word.n}, grid is {self.m}x{self.n}")
        for i in range(self.m):
            for j in range(self.n):
                c = word.cells[i][j]
                if c is not None and c.length != self.cells[i][j].n:
                    raise GridError(
                        f"cell ({i}, {j}) has length {c.length}, "
                        f"expected {self.cells[i][j].n}")

    def encode(self, messages: Sequence[Sequence[BitVector]]) -> GridCodeword:
        if len(messages) != self.m or any(len(r) != self.n for r in messages):
            raise GridError(f"message grid must be {self.m}x{self.n}")
        return GridCodeword(tuple(
            tuple(self.cells[i][j].encode(messages[i][j]) for j in range(self.n))
            for i in range(self.m)))

    def syndrome(self, word: GridCodeword) -> tuple[tuple[Optional[Syndrome], ...], ...]:
        self._check_shape(word)
        return tuple(
            tuple(None if word.cells[i][j] is None
                  else self.cells[i][j].syndrome(word.cells[i][j])
                  for j in range(self.n))
            for i in range(self.m))

    def is_member(self, word: GridCodeword) -> bool:
        return all(s is None or s.bits == 0 for row in self.syndrome(word) for s in row)

    def decode(self, word: GridCodeword) -> tuple[GridCodeword, GridCodeword]:
        """Per-cell coset decoding; absent cells stay absent."""
        self._check_shape(word)
        decoded = []
        errors = []
        for i in range(self.m):
            drow = []
            erow = []
            for j in range(self.n):
                c = word.cells[i][j]
                if c is None:
                    drow.append(None)
                    erow.append(None)
                else:
                    x, e = self.cells[i][j].decode(c)
                    drow.append(x)
                    erow.append(e)
            decoded.append(tuple(drow))
            errors.append(tuple(erow))
        return GridCodeword(tuple(decoded)), GridCodeword(tuple(errors))

    # -- streams -------------------------------------------------------------

    def from_row_stream(self, lines: Sequence[str]) -> GridCodeword:
        if len(lines) != self.m:
            raise GridError(f"expected {self.m} row lines, got {len(lines)}")
        rows = [_split_segments(line, self.n, f"row {i}") for i, line in enumerate(lines)]
        word = GridCodeword.parse_rows(rows)
        self._check_shape(word)
        return word

    def from_col_stream(self, lines: Sequence[str]) -> GridCodeword:
        if len(lines) != self.n:
            raise GridError(f"expected {self.n} column lines, got {len(lines)}")
        cols = [_split_segments(line, self.m, f"column {j}") for j, line in enumerate(lines)]
        rows = [[cols[j][i] for j in range(self.n)] for i in range(self.m)]
        word = GridCodeword.parse_rows(rows)
        self._check_shape(word)
        return word

    # -- redundancy strategies -------------------------------------------------

    def majority_vote(self, received: GridCodeword) -> BitVector:
        """Most frequent cell value in a uniform grid.

        Ties break toward the smallest total syndrome weight, then the
        lexicographically smallest bit string.  If no value repeats, every
        cell is coset-decoded and the vote reruns on the decoded values.
        """
        if not self.is_uniform():
            raise GridError("majority vote requires a uniform grid")
        self._check_shape(received)
        code = self.cells[0][0]
        values = [c for row in received.cells for c in row if c is not None]
        if not values:
            raise GridError("every cell is absent; nothing to vote on")
        winner, top = self._vote(code, values)
        if top == 1 and len(values) > 1:
            decoded = [code.decode(v)[0] for v in values]
            winner, _ = self._vote(code, decoded)
        return winner

    @staticmethod
    def _vote(code: LinearCode, values: list[BitVector]) -> tuple[BitVector, int]:
        counts = Counter(values)
        top = max(counts.values())
        tied = [v for v, c in counts.items() if c == top]
        tied.sort(key=lambda v: (code.syndrome(v).weight(), str(v)))
        return tied[0], top

    def best_row_select(self, received: GridCodeword, by: str = "syndrome_count") -> int:
        """Index (0-based) of the row with the most zero cell syndromes.

        by="error_weight" instead minimizes the total decoded-error weight.
        """
        self._check_shape(received)
        syn = self.syndrome(received)
        best_idx = 0
        best_score: Optional[tuple] = None
        for i in range(self.m):
            if by == "syndrome_count":
                score = (-sum(1 for s in syn[i] if s is not None and s.bits == 0),)
            elif by == "error_weight":
                weights = [self.cells[i][j].decode(received.cells[i][j])[1].weight()
                           for j in range(self.n) if received.cells[i][j] is not None]
                score = (sum(weights),)
            else:
                raise GridError(f"unknown selection rule {by!r}")
            if best_score is None or score < best_score:
                best_score = score
                best_idx = i
        return best_idx

    def simultaneous_reconcile(self, row_stream: Sequence[str],
                               col_stream: Sequence[str]) -> "ReconcileResult":
        """Merge a row-transmitted and a column-transmitted copy cell by cell.

        Agreeing cells pass through; disagreements take the copy with a zero
        syndrome, else both copies are coset-decoded and the smaller error
        weight wins (tie: the row copy).
        """
        row_word = self.from_row_stream(row_stream)
        col_word = self.from_col_stream(col_stream)
        disagreements: list[tuple[int, int]] = []
        out = []
        for i in range(self.m):
            row = []
            for j in range(self.n):
                a = row_word.cells[i][j]
                b = col_word.cells[i][j]
                if a == b:
                    row.append(a)
                    continue
                disagreements.append((i, j))
                row.append(self._arbitrate(self.cells[i][j], a, b))
            out.append(tuple(row))
        return ReconcileResult(GridCodeword(tuple(out)), tuple(disagreements))

    @staticmethod
    def _arbitrate(code: LinearCode, a: Optional[BitVector],
                   b: Optional[BitVector]) -> Optional[BitVector]:
        if a is None:
            return b
        if b is None:
            return a
        a_ok = code.syndrome(a).bits == 0
        b_ok = code.syndrome(b).bits == 0
        if a_ok or b_ok:
            return a if a_ok else b
        xa, ea = code.decode(a)
        xb, eb = code.decode(b)
        return xb if eb.weight() < ea.weight() else xa

    # -- derived grids -----------------------------------------------------------

    def orthogonal(self) -> "GridCode":
        """The cellwise dual grid."""
        return GridCode([[c.dual() for c in row] for row in self.cells])

    def is_cyclic(self) -> bool:
        return all(c.is_cyclic() for row in self.cells for c in row)


@dataclass(frozen=True, slots=True)
class ReconcileResult:
    word: GridCodeword
    disagreements: tuple[tuple[int, int], ...]


def _split_segments(line: str, count: int, what: str) -> list[str]:
    parts = line.split("|")
    if len(parts) != count:
        raise GridError(f"{what} has {len(parts)} segments, expected {count}")
    if any(p == "" for p in parts):
        raise GridError(f"{what} contains an empty segment")
    return parts


def uniform_grid(code: LinearCode, m: int, n: int) -> GridCode:
    return GridCode.uniform(code, m, n)


def grid_dot(x: GridCodeword, y: GridCodeword) -> tuple[tuple[int, ...], ...]:
    """Cellwise pseudo inner products of two same-order grid words."""
    if x.m != y.m or x.n != y.n:
        raise GridError(f"order mismatch: {x.m}x{x.n} vs {y.m}x{y.n}")
    out = []
    for i in range(x.m):
        row = []
        for j in range(x.n):
            a, b = x.cells[i][j], y.cells[i][j]
            if a is None or b is None:
                raise GridError(f"cell ({i}, {j}) is absent; dot product undefined")
            if a.length != b.length:
                raise GridError(f"cell ({i}, {j}) lengths differ: {a.length} vs {b.length}")
            row.append(pseudo_inner(a, b))
        out.append(tuple(row))
    return tuple(out)


def block_layout(m: int, n: int,
                 blocks: Sequence[tuple[tuple[int, int], tuple[int, int], LinearCode]]) -> GridCode:
    """Tile an m x n grid from (row_span, col_span, code) blocks.

    Spans are half-open (start, stop) ranges; the blocks must cover every
    cell exactly once and the filled grid must satisfy the grid constraints.
    """
    cells: list[list[Optional[LinearCode]]] = [[None] * n for _ in range(m)]
    for (r0, r1), (c0, c1), code in blocks:
        if not (0 <= r0 < r1 <= m and 0 <= c0 < c1 <= n):
            raise GridError(f"block rows {r0}:{r1} cols {c0}:{c1} falls outside the grid")
        for i in range(r0, r1):
            for j in range(c0, c1):
                if cells[i][j] is not None:
                    raise GridError(f"blocks overlap at cell ({i}, {j})")
                cells[i][j] = code
    for i in range(m):
        for j in range(n):
            if cells[i][j] is None:
                raise GridError(f"blocks leave cell ({i}, {j}) uncovered")
    return GridCode(cells)  # type: ignore[arg-type]


@dataclass(frozen=True, slots=True)
class TrueChart:
    """Boolean grid marking which cells carry the real message."""

    marks: tuple[tuple[bool, ...], ...]

    @classmethod
    def from_text(cls, text: str) -> "TrueChart":
        rows = [line for line in text.splitlines() if line.strip()]
        if not rows:
            raise GridError("chart text is empty")
        width = len(rows[0])
        marks = []
        for line in rows:
            if len(line) != width:
                raise GridError("chart rows have differing widths")
            row = []
            for ch in line:
                if ch == "*":
                    row.append(True)
                elif ch == ".":
                    row.append(False)
                else:
                    raise GridError(f"illegal chart character {ch!r}")
            marks.append(tuple(row))
        return cls(tuple(marks))

    def to_text(self) -> str:
        return "\n".join("".join("*" if b else "." for b in row) for row in self.marks)

    @property
    def m(self) -> int:
        return len(self.marks)

    @property
    def n(self) -> int:
        return len(self.marks[0])

    def true_count(self) -> int:
        return sum(1 for row in self.marks for b in row if b)


def apply_chart(word: GridCodeword, chart: TrueChart) -> list[BitVector]:
    """The marked cells in row-major order."""
    if chart.m != word.m or chart.n != word.n:
        raise GridError(f"chart is {chart.m}x{chart.n}, word is {word.m}x{word.n}")
    out = []
    for i in range(word.m):
        for j in range(word.n):
            if chart.marks[i][j]:
                c = word.cells[i][j]
                if c is None:
                    raise GridError(f"chart marks the absent cell ({i}, {j})")
                out.append(c)
    return out


@dataclass(frozen=True, slots=True)
class CellMask:
    """1-based row-major cell indices selecting the meaningful cells."""

    indices: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(i < 1 for i in self.indices):
            raise GridError("mask indices are 1-based and must be positive")
        if len(set(self.indices)) != len(self.indices):
            raise GridError("mask indices must be distinct")

    @classmethod
    def from_pairs(cls, pairs, n_cols: int) -> "CellMask":
        """Build from 0-based (row, col) pairs on a grid with n_cols columns."""
        if n_cols < 1:
            raise GridError("grid needs at least one column")
        indices = []
        for r, c in pairs:
            if r < 0 or not 0 <= c < n_cols:
                raise GridError(f"cell ({r}, {c}) outside a grid {n_cols} columns wide")
            indices.append(r * n_cols + c + 1)
        return cls(tuple(indices))


def mask_from_ap(first: int, diff: int, last: int) -> CellMask:
    """The arithmetic progression first, first+diff, ..., last."""
    if diff < 1:
        raise GridError("common difference must be at least 1")
    if last < first:
        raise GridError("last term must not precede the first")
    return CellMask(tuple(range(first, last + 1, diff)))


def apply_mask(word: GridCodeword, mask: CellMask) -> list[BitVector]:
    """The masked cells, in mask order; indices count row-major from 1."""
    total = word.m * word.n
    out = []
    for idx in mask.indices:
        if idx > total:
            raise GridError(f"mask index {idx} exceeds the {word.m}x{word.n} grid")
        i, j = divmod(idx - 1, word.n)
        c = word.cells[i][j]
        if c is None:
            raise GridError(f"mask selects the absent cell ({i}, {j})")
        out.append(c)
    return out


def load_stencil(name: str) -> CellMask:
    """A shipped letter/symbol stencil ('t', 'k' or 'cross') as a CellMask."""
    try:
        text = resources.files("gridfec.stencils").joinpath(f"{name}.txt").read_text()
    except FileNotFoundError:
        raise GridError(f"unknown stencil {name!r}") from None
    indices = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            indices.append(int(line))
    return CellMask(tuple(indices))
