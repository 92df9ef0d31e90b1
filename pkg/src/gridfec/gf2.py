"""Dense GF(2) vectors, matrices, polynomials and partitioned supermatrices.

Bits are packed into Python ints.  Index 0 is always the leftmost symbol as
printed ("1011" has bit 0 = 1, bit 3 = 1); polynomial index i is the
coefficient of x**i, so x^3 + x^2 + 1 prints as "1011".
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


class Gf2Error(ValueError):
    """Raised on dimension mismatches and other GF(2) value errors."""


def _parity(x: int) -> int:
    return x.bit_count() & 1


@dataclass(frozen=True, slots=True)
class BitVector:
    """An immutable vector over GF(2); bit i sits at 1 << i of `bits`."""

    length: int
    bits: int

    def __post_init__(self) -> None:
        if self.length < 0:
            raise Gf2Error("vector length must be non-negative")
        if not 0 <= self.bits < (1 << self.length):
            raise Gf2Error("bit pattern does not fit the stated length")

    @classmethod
    def from_string(cls, text: str) -> "BitVector":
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise Gf2Error(f"illegal character {ch!r} in bit string")
        return cls(len(text), bits)

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BitVector":
        bits = 0
        n = 0
        for v in values:
            if v not in (0, 1):
                raise Gf2Error(f"bit values must be 0 or 1, got {v!r}")
            bits |= v << n
            n += 1
        return cls(n, bits)

    @classmethod
    def zeros(cls, n: int) -> "BitVector":
        return cls(n, 0)

    @classmethod
    def ones(cls, n: int) -> "BitVector":
        return cls(n, (1 << n) - 1)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(f"bit index {i} out of range for length {self.length}")
        return (self.bits >> i) & 1

    def __iter__(self) -> Iterator[int]:
        return ((self.bits >> i) & 1 for i in range(self.length))

    def __xor__(self, other: "BitVector") -> "BitVector":
        if self.length != other.length:
            raise Gf2Error(f"length mismatch: {self.length} vs {other.length}")
        return BitVector(self.length, self.bits ^ other.bits)

    def __str__(self) -> str:
        return "".join("1" if (self.bits >> i) & 1 else "0" for i in range(self.length))

    def __repr__(self) -> str:
        return f"BitVector({str(self)!r})"

    def weight(self) -> int:
        return self.bits.bit_count()

    def with_flipped(self, positions: Iterable[int]) -> "BitVector":
        bits = self.bits
        for p in positions:
            if not 0 <= p < self.length:
                raise Gf2Error(f"position {p} out of range for length {self.length}")
            bits ^= 1 << p
        return BitVector(self.length, bits)

    def shift_right(self) -> "BitVector":
        """Right cyclic shift: (a0 .. a_{n-1}) -> (a_{n-1}, a0, .., a_{n-2})."""
        n = self.length
        if n <= 1:
            return self
        mask = (1 << n) - 1
        return BitVector(n, ((self.bits << 1) | (self.bits >> (n - 1))) & mask)

    def concat(self, other: "BitVector") -> "BitVector":
        return BitVector(self.length + other.length, self.bits | (other.bits << self.length))

    def slice(self, start: int, stop: int) -> "BitVector":
        if not 0 <= start <= stop <= self.length:
            raise Gf2Error(f"slice [{start}:{stop}] out of range for length {self.length}")
        width = stop - start
        return BitVector(width, (self.bits >> start) & ((1 << width) - 1))


def weight(x: BitVector) -> int:
    return x.weight()


def distance(x: BitVector, y: BitVector) -> int:
    """Hamming distance: popcount of the XOR."""
    if x.length != y.length:
        raise Gf2Error(f"length mismatch: {x.length} vs {y.length}")
    return (x.bits ^ y.bits).bit_count()


@dataclass(frozen=True, slots=True)
class BitMatrix:
    """An immutable row-major GF(2) matrix; each row packed as an int."""

    rows: int
    cols: int
    row_words: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise Gf2Error("matrix dimensions must be non-negative")
        if len(self.row_words) != self.rows:
            raise Gf2Error("row count does not match stored rows")
        limit = 1 << self.cols
        if any(not 0 <= w < limit for w in self.row_words):
            raise Gf2Error("row data wider than stated column count")

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        vecs = [BitVector.from_string(r) for r in rows]
        if not vecs:
            return cls(0, 0, ())
        cols = vecs[0].length
        if any(v.length != cols for v in vecs):
            raise Gf2Error("rows have differing lengths")
        return cls(len(vecs), cols, tuple(v.bits for v in vecs))

    @classmethod
    def from_rows(cls, rows: Sequence[BitVector]) -> "BitMatrix":
        if not rows:
            return cls(0, 0, ())
        cols = rows[0].length
        if any(v.length != cols for v in rows):
            raise Gf2Error("rows have differing lengths")
        return cls(len(rows), cols, tuple(v.bits for v in rows))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.row_words[i])

    def column(self, j: int) -> BitVector:
        if not 0 <= j < self.cols:
            raise IndexError(f"column {j} out of range")
        bits = 0
        for i, w in enumerate(self.row_words):
            bits |= ((w >> j) & 1) << i
        return BitVector(self.rows, bits)

    def entry(self, i: int, j: int) -> int:
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"entry ({i}, {j}) out of range")
        return (self.row_words[i] >> j) & 1

    def is_zero(self) -> bool:
        return all(w == 0 for w in self.row_words)

    def __str__(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.rows))

    def __repr__(self) -> str:
        return f"BitMatrix({[str(self.row(i)) for i in range(self.rows)]})"


def transpose(a: BitMatrix) -> BitMatrix:
    words = [0] * a.cols
    for i, w in enumerate(a.row_words):
        while w:
            j = (w & -w).bit_length() - 1
            words[j] |= 1 << i
            w &= w - 1
    return BitMatrix(a.cols, a.rows, tuple(words))


def mat_mul(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """GF(2) matrix product: XOR-accumulated AND."""
    if a.cols != b.rows:
        raise Gf2Error(f"dimension mismatch: {a.rows}x{a.cols} times {b.rows}x{b.cols}")
    out = []
    for w in a.row_words:
        acc = 0
        ww = w
        while ww:
            k = (ww & -ww).bit_length() - 1
            acc ^= b.row_words[k]
            ww &= ww - 1
        out.append(acc)
    return BitMatrix(a.rows, b.cols, tuple(out))


def mat_vec(a: BitMatrix, x: BitVector) -> BitVector:
    if a.cols != x.length:
        raise Gf2Error(f"dimension mismatch: {a.rows}x{a.cols} times length-{x.length} vector")
    bits = 0
    for i, w in enumerate(a.row_words):
        bits |= _parity(w & x.bits) << i
    return BitVector(a.rows, bits)


def rank(a: BitMatrix) -> int:
    words = list(a.row_words)
    r = 0
    for j in range(a.cols):
        pivot = next((i for i in range(r, len(words)) if (words[i] >> j) & 1), None)
        if pivot is None:
            continue
        words[r], words[pivot] = words[pivot], words[r]
        for i in range(len(words)):
            if i != r and (words[i] >> j) & 1:
                words[i] ^= words[r]
        r += 1
    return r


def row_reduce(a: BitMatrix) -> tuple[BitMatrix, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    words = list(a.row_words)
    pivots: list[int] = []
    r = 0
    for j in range(a.cols):
        pivot = next((i for i in range(r, len(words)) if (words[i] >> j) & 1), None)
        if pivot is None:
            continue
        words[r], words[pivot] = words[pivot], words[r]
        for i in range(len(words)):
            if i != r and (words[i] >> j) & 1:
                words[i] ^= words[r]
        pivots.append(j)
        r += 1
    return BitMatrix(a.rows, a.cols, tuple(words)), pivots


def null_space_basis(a: BitMatrix) -> list[BitVector]:
    """A basis of {x : a @ x = 0}, one vector per free column."""
    rref, pivots = row_reduce(a)
    pivot_set = set(pivots)
    basis = []
    for f in range(a.cols):
        if f in pivot_set:
            continue
        bits = 1 << f
        for r, p in enumerate(pivots):
            if (rref.row_words[r] >> f) & 1:
                bits |= 1 << p
        basis.append(BitVector(a.cols, bits))
    return basis


def row_space_basis(a: BitMatrix) -> list[BitVector]:
    rref, pivots = row_reduce(a)
    return [rref.row(i) for i in range(len(pivots))]


@dataclass(frozen=True, slots=True)
class Gf2Poly:
    """Polynomial over GF(2); bit i of `coeffs` is the coefficient of x**i.

    The zero polynomial is coeffs == 0; its degree is undefined, query
    is_zero() instead.
    """

    coeffs: int

    def __post_init__(self) -> None:
        if self.coeffs < 0:
            raise Gf2Error("polynomial bits must be non-negative")

    @classmethod
    def from_string(cls, text: str) -> "Gf2Poly":
        bits = 0
        for i, ch in enumerate(text):
            if ch == "1":
                bits |= 1 << i
            elif ch != "0":
                raise Gf2Error(f"illegal character {ch!r} in polynomial string")
        return cls(bits)

    @classmethod
    def one(cls) -> "Gf2Poly":
        return cls(1)

    @classmethod
    def x_pow_plus_one(cls, n: int) -> "Gf2Poly":
        """x**n - 1, which over GF(2) is x**n + 1."""
        if n < 1:
            raise Gf2Error("exponent must be at least 1")
        return cls((1 << n) | 1)

    def is_zero(self) -> bool:
        return self.coeffs == 0

    def degree(self) -> int:
        if self.coeffs == 0:
            raise Gf2Error("degree of the zero polynomial is undefined")
        return self.coeffs.bit_length() - 1

    def coefficient(self, i: int) -> int:
        return (self.coeffs >> i) & 1

    def __add__(self, other: "Gf2Poly") -> "Gf2Poly":
        return Gf2Poly(self.coeffs ^ other.coeffs)

    def __mul__(self, other: "Gf2Poly") -> "Gf2Poly":
        a, b = self.coeffs, other.coeffs
        acc = 0
        while a:
            i = (a & -a).bit_length() - 1
            acc ^= b << i
            a &= a - 1
        return Gf2Poly(acc)

    def __str__(self) -> str:
        if self.coeffs == 0:
            return "0"
        return "".join("1" if (self.coeffs >> i) & 1 else "0" for i in range(self.coeffs.bit_length()))

    def __repr__(self) -> str:
        return f"Gf2Poly({str(self)!r})"


def poly_divide(num: Gf2Poly, den: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    """Long division over GF(2): num = quotient*den + remainder."""
    if den.is_zero():
        raise Gf2Error("division by the zero polynomial")
    n, d = num.coeffs, den.coeffs
    dd = d.bit_length()
    q = 0
    while n.bit_length() >= dd:
        shift = n.bit_length() - dd
        q |= 1 << shift
        n ^= d << shift
    return Gf2Poly(q), Gf2Poly(n)


@dataclass(frozen=True, slots=True)
class SuperMatrix:
    """A BitMatrix with interior partition lines between rows and columns."""

    body: BitMatrix
    row_cuts: tuple[int, ...] = ()
    col_cuts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        _check_cuts(self.row_cuts, self.body.rows, "row")
        _check_cuts(self.col_cuts, self.body.cols, "column")

    def block_row_spans(self) -> list[tuple[int, int]]:
        return _spans(self.row_cuts, self.body.rows)

    def block_col_spans(self) -> list[tuple[int, int]]:
        return _spans(self.col_cuts, self.body.cols)

    def __str__(self) -> str:
        col_cut_set = set(self.col_cuts)
        row_cut_set = set(self.row_cuts)
        lines = []
        width = None
        for i in range(self.body.rows):
            if i in row_cut_set:
                lines.append("—" * width if width else "—")
            parts = []
            for j in range(self.body.cols):
                if j in col_cut_set:
                    parts.append("|")
                parts.append(str(self.body.entry(i, j)))
            line = " ".join(parts)
            width = len(line)
            lines.append(line)
        return "\n".join(lines)


def _check_cuts(cuts: tuple[int, ...], dim: int, what: str) -> None:
    if list(cuts) != sorted(set(cuts)):
        raise Gf2Error(f"{what} cuts must be strictly increasing")
    if any(not 0 < c < dim for c in cuts):
        raise Gf2Error(f"{what} cuts must lie strictly inside the matrix")


def _spans(cuts: tuple[int, ...], dim: int) -> list[tuple[int, int]]:
    edges = [0, *cuts, dim]
    return list(zip(edges, edges[1:]))


def super_transpose(m: SuperMatrix) -> SuperMatrix:
    """Transpose the body and swap the two cut lists."""
    return SuperMatrix(transpose(m.body), row_cuts=m.col_cuts, col_cuts=m.row_cuts)


def super_equal(a: SuperMatrix, b: SuperMatrix, structural: bool = False) -> bool:
    """Body equality; with structural=True the cut lists must match too."""
    if a.body != b.body:
        return False
    if structural:
        return a.row_cuts == b.row_cuts and a.col_cuts == b.col_cuts
    return True
