"""Constructors for the classical code families: repetition, parity-check,
Hamming, and cyclic codes built from a generator polynomial."""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitMatrix, Gf2Poly, poly_divide
from .linear import CodeError, LinearCode


def repetition(n: int) -> LinearCode:
    """The (n, 1) code {0^n, 1^n}; H is an all-ones column beside I_{n-1}."""
    if n < 2:
        raise CodeError("repetition code needs length at least 2")
    words = tuple(1 | (1 << (i + 1)) for i in range(n - 1))
    h = BitMatrix(n - 1, n, words)
    g = BitMatrix(1, n, ((1 << n) - 1,))
    return LinearCode(h, g)


def parity_check(n: int) -> LinearCode:
    """The (n, n-1) code of all even-weight words; H is a single row of ones."""
    if n < 2:
        raise CodeError("parity-check code needs length at least 2")
    h = BitMatrix(1, n, ((1 << n) - 1,))
    return LinearCode(h)


def hamming(m: int) -> LinearCode:
    """The (2^m - 1, 2^m - 1 - m) Hamming code.

    Canonical column order: column j (1-indexed) is the m-bit binary
    representation of j with the most significant bit in the top row.
    """
    if m < 2:
        raise CodeError("Hamming code needs m >= 2")
    n = (1 << m) - 1
    words = []
    for r in range(m):
        bits = 0
        for j in range(1, n + 1):
            if (j >> (m - 1 - r)) & 1:
                bits |= 1 << (j - 1)
        words.append(bits)
    return LinearCode(BitMatrix(m, n, tuple(words)))


@dataclass(frozen=True, slots=True)
class CyclicSpec:
    """Length n together with a generator polynomial dividing x^n - 1."""

    n: int
    g: Gf2Poly

    def __post_init__(self) -> None:
        if self.g.is_zero():
            raise CodeError("generator polynomial must be nonzero")
        if self.g.degree() >= self.n:
            raise CodeError(f"deg(g)={self.g.degree()} must be below n={self.n}")
        _, rem = poly_divide(Gf2Poly.x_pow_plus_one(self.n), self.g)
        if not rem.is_zero():
            raise CodeError(f"{self.g} does not divide x^{self.n} - 1")

    @property
    def k(self) -> int:
        return self.n - self.g.degree()


def cyclic_from_poly(spec: CyclicSpec) -> LinearCode:
    """The cyclic code with generator rows g, xg, ..., x^(k-1) g."""
    k = spec.k
    if k < 1:
        raise CodeError("the generator polynomial leaves no message symbols")
    g_bits = spec.g.coeffs
    rows = tuple(g_bits << i for i in range(k))
    gen = BitMatrix(k, spec.n, rows)
    if spec.g.degree() == 0:
        # g = 1 generates the full space; a zero row is its parity check.
        return LinearCode(BitMatrix(1, spec.n, (0,)), gen)
    h = parity_matrix_from_h(spec.n, parity_poly(spec))
    return LinearCode(h, gen)


def parity_poly(spec: CyclicSpec) -> Gf2Poly:
    """h = (x^n - 1) / g."""
    quot, rem = poly_divide(Gf2Poly.x_pow_plus_one(spec.n), spec.g)
    if not rem.is_zero():
        raise CodeError(f"{spec.g} does not divide x^{spec.n} - 1")
    return quot


def parity_matrix_from_h(n: int, h: Gf2Poly) -> BitMatrix:
    """The staircase parity-check matrix built from reversed h coefficients.

    Row i carries h_k ... h_1 h_0 right-aligned for the bottom row and
    stepped one column left per row above it.
    """
    if h.is_zero():
        raise CodeError("parity polynomial must be nonzero")
    k = h.degree()
    if not 0 < k < n:
        raise CodeError(f"deg(h)={k} must lie strictly between 0 and n={n}")
    m = n - k
    reversed_bits = 0
    for i in range(k + 1):
        if h.coefficient(i):
            reversed_bits |= 1 << (k - i)
    rows = tuple(reversed_bits << (m - 1 - i) for i in range(m))
    return BitMatrix(m, n, rows)
