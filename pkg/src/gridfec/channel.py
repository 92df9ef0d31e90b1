"""Deterministic binary-symmetric-channel simulation and strategy trials.

Randomness comes from an xorshift64* generator (shifts 12/25/27, multiplier
0x2545F4914F6CDD1D) seeded through the splitmix64 finalizer, so corrupted
outputs are bit-identical across runs and platforms.  Per-cell streams are
derived by mixing (trial, row, col, copy) into the master seed, which makes
trial order irrelevant and trials safely parallelizable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .gf2 import BitVector, Gf2Error, distance
from .grid import GridCode, GridCodeword

_M64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

STRATEGIES = ("per_cell_decode", "majority_vote", "simultaneous")


class ChannelError(ValueError):
    """Raised on invalid channel configuration or simulation input."""


@dataclass(frozen=True, slots=True)
class ChannelConfig:
    """A BSC flip probability and a 64-bit master seed."""

    flip_probability: float
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0.0 <= self.flip_probability <= 1.0:
            raise ChannelError(f"flip probability {self.flip_probability} not in [0, 1]")
        if not 0 <= self.seed <= _M64:
            raise ChannelError("seed must fit in 64 bits")


@dataclass(frozen=True, slots=True)
class TrialReport:
    trials: int
    decode_success: int
    undetected_error: int
    residual_bit_errors: int

    @property
    def failures(self) -> int:
        return self.trials - self.decode_success


def _mix64(z: int) -> int:
    """splitmix64 finalizer."""
    z &= _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return z ^ (z >> 31)


def derive_seed(master: int, *indices: int) -> int:
    """Fold trial/cell indices into the master seed, one mix step each."""
    state = master & _M64
    for v in indices:
        state = _mix64((state + _GAMMA + v) & _M64)
    return state


def _xorshift_next(state: int) -> tuple[int, int]:
    state ^= state >> 12
    state = (state ^ (state << 25)) & _M64
    state ^= state >> 27
    return state, (state * 0x2545F4914F6CDD1D) & _M64


def bsc_corrupt(cfg: ChannelConfig, x: BitVector) -> BitVector:
    """Flip each bit independently with probability p; fully seed-determined."""
    threshold = int(cfg.flip_probability * (1 << 64))
    state = _mix64(cfg.seed) or _GAMMA
    bits = x.bits
    for i in range(x.length):
        state, draw = _xorshift_next(state)
        if draw < threshold:
            bits ^= 1 << i
    return BitVector(x.length, bits)


def inject_errors(x: BitVector, positions: Iterable[int]) -> BitVector:
    """Flip exactly the given distinct positions."""
    seen = set()
    for p in positions:
        if p in seen:
            raise Gf2Error(f"duplicate error position {p}")
        seen.add(p)
    return x.with_flipped(seen)


def run_trial(grid: GridCode, sent: GridCodeword, strategy: str,
              cfg: ChannelConfig, trials: int) -> TrialReport:
    """Corrupt every cell per trial, apply the strategy, tally recoveries.

    decode_success counts exact recoveries; undetected_error counts trials
    where some received cell was a valid codeword other than the sent one;
    residual_bit_errors sums the bit errors left after decoding.
    """
    if strategy not in STRATEGIES:
        raise ChannelError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if trials < 1:
        raise ChannelError("need at least one trial")
    if not grid.is_member(sent):
        raise ChannelError("the sent word is not a member of the grid code")
    if any(c is None for row in sent.cells for c in row):
        raise ChannelError("simulation requires every cell present")
    if strategy == "majority_vote":
        if not grid.is_uniform():
            raise ChannelError("majority_vote requires a uniform grid")
        first = sent.cells[0][0]
        if any(c != first for row in sent.cells for c in row):
            raise ChannelError("majority_vote expects the same codeword in every cell")

    successes = 0
    undetected = 0
    residual = 0
    copies = 2 if strategy == "simultaneous" else 1
    for t in range(trials):
        received = []
        for copy in range(copies):
            cells = []
            for i in range(grid.m):
                row = []
                for j in range(grid.n):
                    seed = derive_seed(cfg.seed, t, i, j, copy)
                    row.append(bsc_corrupt(ChannelConfig(cfg.flip_probability, seed),
                                           sent.cells[i][j]))
                cells.append(tuple(row))
            received.append(GridCodeword(tuple(cells)))

        if any(grid.cells[i][j].is_member(word.cells[i][j])
               and word.cells[i][j] != sent.cells[i][j]
               for word in received
               for i in range(grid.m) for j in range(grid.n)):
            undetected += 1

        if strategy == "per_cell_decode":
            decoded, _ = grid.decode(received[0])
            ok = decoded == sent
            residual += _grid_bit_errors(decoded, sent)
        elif strategy == "majority_vote":
            winner = grid.majority_vote(received[0])
            ok = winner == sent.cells[0][0]
            residual += distance(winner, sent.cells[0][0])
        else:
            result = grid.simultaneous_reconcile(received[0].to_row_stream(),
                                                 received[1].to_col_stream())
            ok = result.word == sent
            residual += _grid_bit_errors(result.word, sent)
        if ok:
            successes += 1
    return TrialReport(trials, successes, undetected, residual)


def _grid_bit_errors(a: GridCodeword, b: GridCodeword) -> int:
    return sum(distance(a.cells[i][j], b.cells[i][j])
               for i in range(a.m) for j in range(a.n))
