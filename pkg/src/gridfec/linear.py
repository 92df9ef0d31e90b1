"""Binary (n, k) linear block codes: construction, syndromes, coset decoding.

A code is the null space of its parity-check matrix H.  Every value here is
immutable after construction; expensive derivations (codeword set, coset
table) are computed once and cached.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Optional

from .gf2 import (
    BitMatrix,
    BitVector,
    mat_mul,
    mat_vec,
    null_space_basis,
    rank,
    row_space_basis,
    transpose,
)

# A syndrome is just a BitVector of length n - k.
Syndrome = BitVector

# Enumeration guards; every instance in scope sits far below these.
MAX_MESSAGE_BITS = 24
MAX_CHECK_BITS = 20


class CodeError(ValueError):
    """Raised on invalid code constructions or decode inputs."""


class CapacityError(CodeError):
    """Raised when an enumeration guard (2^k codewords, 2^(n-k) cosets) is exceeded."""


class CosetTable:
    """Map from syndrome to its minimum-weight coset leader.

    Ties between minimum-weight vectors are broken toward the smallest
    support (earliest flipped positions), matching the worked coset tables.
    """

    def __init__(self, leaders: dict[BitVector, BitVector]):
        self._leaders = dict(leaders)

    def leader(self, syndrome: BitVector) -> BitVector:
        return self._leaders[syndrome]

    def __len__(self) -> int:
        return len(self._leaders)

    def items(self):
        return self._leaders.items()


class LinearCode:
    """An (n, k) binary linear code defined by a parity-check matrix."""

    def __init__(self, h: BitMatrix, g: Optional[BitMatrix] = None):
        if h.rows == 0 or h.cols == 0:
            raise CodeError("parity-check matrix must be non-empty")
        if h.cols < h.rows:
            raise CodeError("parity-check matrix needs at least as many columns as rows")
        self.h = h
        self.n = h.cols
        self.k = h.cols - rank(h)
        if g is not None:
            if g.cols != self.n:
                raise CodeError(f"generator width {g.cols} does not match length {self.n}")
            if rank(g) != g.rows:
                raise CodeError("generator matrix has dependent rows")
            if g.rows != self.k:
                raise CodeError(f"generator has {g.rows} rows but the code has dimension {self.k}")
            if not mat_mul(g, transpose(h)).is_zero():
                raise CodeError("generator and parity-check matrices are not orthogonal")
        self._g = g
        self._derived_g: Optional[BitMatrix] = None

    @classmethod
    def from_parity(cls, h: BitMatrix) -> "LinearCode":
        return cls(h)

    @classmethod
    def from_generator(cls, g: BitMatrix) -> "LinearCode":
        """Build the row-space code of g; derives a parity-check matrix."""
        if g.rows == 0 or g.cols == 0:
            raise CodeError("generator matrix must be non-empty")
        if rank(g) != g.rows:
            raise CodeError("generator matrix has dependent rows")
        h = _standard_parity_from_generator(g)
        if h is None:
            dual_rows = null_space_basis(g)
            # The full space has an empty dual; a single zero row keeps H non-empty.
            h = BitMatrix.from_rows(dual_rows) if dual_rows else BitMatrix(1, g.cols, (0,))
        return cls(h, g)

    # -- basic parameters ------------------------------------------------

    def transmission_rate(self) -> Fraction:
        return Fraction(self.k, self.n)

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k})"

    # -- encoding / membership -------------------------------------------

    def generator(self) -> BitMatrix:
        """The generator matrix: as given, else derived by standardization."""
        if self._g is not None:
            return self._g
        if self._derived_g is None:
            _, self._derived_g = self.standardize()
        return self._derived_g

    def encode(self, a: BitVector) -> BitVector:
        g = self.generator()
        if a.length != self.k:
            raise CodeError(f"message length {a.length} does not match k={self.k}")
        acc = 0
        bits = a.bits
        while bits:
            i = (bits & -bits).bit_length() - 1
            acc ^= g.row_words[i]
            bits &= bits - 1
        return BitVector(self.n, acc)

    def syndrome(self, y: BitVector) -> Syndrome:
        if y.length != self.n:
            raise CodeError(f"word length {y.length} does not match n={self.n}")
        return mat_vec(self.h, y)

    def is_member(self, y: BitVector) -> bool:
        return self.syndrome(y).bits == 0

    @cached_property
    def codewords(self) -> frozenset[BitVector]:
        """All 2^k codewords (guarded by MAX_MESSAGE_BITS)."""
        if self.k > MAX_MESSAGE_BITS:
            raise CapacityError(f"k={self.k} exceeds the enumeration guard of {MAX_MESSAGE_BITS}")
        basis = [self._g.row(i) for i in range(self._g.rows)] if self._g is not None \
            else null_space_basis(self.h)
        words = {BitVector.zeros(self.n)}
        for v in basis:
            words |= {w ^ v for w in words}
        return frozenset(words)

    # -- standard form ----------------------------------------------------

    def standardize(self) -> tuple[BitMatrix, BitMatrix]:
        """Row-reduce H to (A, I_{n-k}) and pair it with G = (I_k, A^T).

        Column permutations are refused: coordinate order is load-bearing
        for the super compositions, so a non-systematic layout is an error.
        """
        m = self.n - self.k
        words = list(self.h.row_words)
        r = 0
        for j in range(self.k, self.n):
            pivot = next((i for i in range(r, len(words)) if (words[i] >> j) & 1), None)
            if pivot is None:
                raise CodeError(
                    f"column {j} admits no pivot: H is not row-reducible to (A, I) "
                    "without column swaps")
            words[r], words[pivot] = words[pivot], words[r]
            for i in range(len(words)):
                if i != r and (words[i] >> j) & 1:
                    words[i] ^= words[r]
            r += 1
        if any(w != 0 for w in words[m:]):
            raise CodeError("parity-check rows are inconsistent with rank")
        h_std = BitMatrix(m, self.n, tuple(words[:m]))
        a = BitMatrix(m, self.k, tuple(w & ((1 << self.k) - 1) for w in words[:m]))
        at = transpose(a)
        g_words = tuple((1 << i) | (at.row_words[i] << self.k) for i in range(self.k))
        g_std = BitMatrix(self.k, self.n, g_words)
        return h_std, g_std

    # -- distances ---------------------------------------------------------

    def min_distance(self) -> int:
        if self.k < 1:
            raise CodeError("the zero code has no nonzero codeword")
        return min(w.weight() for w in self.codewords if w.bits != 0)

    def error_capability(self) -> int:
        """t = floor((d - 1) / 2)."""
        return (self.min_distance() - 1) // 2

    def can_correct_and_detect(self, t: int, s: int) -> bool:
        """Whether t errors are correctable while detecting up to t + s.

        Uses the bound 2t + s + 1 <= d_min.
        """
        if t < 0 or s < 0:
            raise CodeError("error counts must be non-negative")
        return 2 * t + s + 1 <= self.min_distance()

    # -- coset decoding ----------------------------------------------------

    @cached_property
    def coset_table(self) -> CosetTable:
        m = self.n - self.k
        if m > MAX_CHECK_BITS:
            raise CapacityError(f"n-k={m} exceeds the coset guard of {MAX_CHECK_BITS}")
        total = 1 << m
        leaders: dict[BitVector, BitVector] = {}
        zero = BitVector.zeros(self.n)
        leaders[self.syndrome(zero)] = zero
        for w in range(1, self.n + 1):
            if len(leaders) == total:
                break
            # combinations() yields supports in ascending lexicographic order,
            # so the first vector seen per syndrome has the smallest support.
            for support in combinations(range(self.n), w):
                e = zero.with_flipped(support)
                s = self.syndrome(e)
                if s not in leaders:
                    leaders[s] = e
                    if len(leaders) == total:
                        break
        return CosetTable(leaders)

    def decode(self, y: BitVector) -> tuple[BitVector, BitVector]:
        """Coset-leader decoding: returns (codeword, presumed error)."""
        s = self.syndrome(y)
        e = self.coset_table.leader(s)
        return y ^ e, e

    # -- derived codes -----------------------------------------------------

    def dual(self) -> "LinearCode":
        """The orthogonal code: generator and parity-check roles swap."""
        h_rows = row_space_basis(self.h)
        code_basis = [self._g.row(i) for i in range(self._g.rows)] if self._g is not None \
            else null_space_basis(self.h)
        if not code_basis:
            # Dual of the zero code is the full space.
            return LinearCode(BitMatrix.from_rows([BitVector.zeros(self.n)]),
                              BitMatrix.identity(self.n))
        g_dual = BitMatrix.from_rows(h_rows) if h_rows else None
        return LinearCode(BitMatrix.from_rows(code_basis), g_dual)

    def is_cyclic(self) -> bool:
        """True iff the right cyclic shift of every codeword is a codeword."""
        words = self.codewords
        return all(w.shift_right() in words for w in words)


def _standard_parity_from_generator(g: BitMatrix) -> Optional[BitMatrix]:
    """For g = (I_k, A'), return (A, I_{n-k}) with A = transpose(A')."""
    k, n = g.rows, g.cols
    if k == n:
        return None
    ident = BitMatrix.identity(k)
    if tuple(w & ((1 << k) - 1) for w in g.row_words) != ident.row_words:
        return None
    a_prime = BitMatrix(k, n - k, tuple(w >> k for w in g.row_words))
    a = transpose(a_prime)
    words = tuple(a.row_words[i] | (1 << (k + i)) for i in range(n - k))
    return BitMatrix(n - k, n, words)
