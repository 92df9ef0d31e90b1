import random
from fractions import Fraction
from itertools import combinations

import pytest

from gridfec.gf2 import BitMatrix, BitVector, mat_mul, mat_vec, transpose
from gridfec.linear import CapacityError, CodeError, LinearCode

BV = BitVector.from_string
BM = BitMatrix.from_strings

H_121 = BM(["0101000", "1010100", "0010010", "0010001"])
G_124 = BM(["1000100", "0101000", "0010111"])
WORDS_124 = {
    "0000000", "1000100", "0101000", "0010111",
    "1101100", "1010011", "0111111", "1111011",
}
H_126 = BM(["10110", "11001"])
WORDS_126 = {"00000", "10011", "01001", "00110", "11010", "10101", "01111", "11100"}
G_128 = BM(["1110100", "0111010", "0011101"])
H_125 = BM(["1001000", "0010100", "1100010", "1010001"])


def random_code(rng: random.Random, max_n: int = 10) -> LinearCode:
    while True:
        n = rng.randint(2, max_n)
        m = rng.randint(1, n - 1)
        words = tuple(rng.getrandbits(n) for _ in range(m))
        if any(words):
            h = BitMatrix(m, n, words)
            code = LinearCode.from_parity(h)
            if 1 <= code.k < n:
                return code


class TestFromParity:
    def test_worked_seven_three(self):
        c = LinearCode.from_parity(H_121)
        assert (c.n, c.k) == (7, 3)
        assert {str(w) for w in c.codewords} == WORDS_124
        assert BV("1101100") in c.codewords
        assert BV("1111011") in c.codewords

    def test_identity_gives_zero_code(self):
        c = LinearCode.from_parity(BitMatrix.identity(4))
        assert c.k == 0
        assert c.codewords == frozenset({BitVector.zeros(4)})

    def test_worked_five_three(self):
        c = LinearCode.from_parity(H_126)
        assert {str(w) for w in c.codewords} == WORDS_126

    def test_empty_rejected(self):
        with pytest.raises(CodeError):
            LinearCode.from_parity(BitMatrix(0, 0, ()))


class TestFromGenerator:
    def test_same_codewords_as_parity_construction(self):
        c = LinearCode.from_generator(G_124)
        assert {str(w) for w in c.codewords} == WORDS_124

    def test_identity_generator_full_space(self):
        c = LinearCode.from_generator(BitMatrix.identity(3))
        assert c.k == 3
        assert len(c.codewords) == 8

    def test_cyclic_generator(self):
        c = LinearCode.from_generator(G_128)
        assert BV("1110100") in c.codewords
        assert len(c.codewords) == 8

    def test_dependent_rows_rejected(self):
        with pytest.raises(CodeError):
            LinearCode.from_generator(BM(["101", "101"]))

    def test_gh_orthogonal(self):
        c = LinearCode.from_generator(G_128)
        assert mat_mul(c.generator(), transpose(c.h)).is_zero()


class TestStandardize:
    def test_recovers_canonical_generator(self):
        h_std, g_std = LinearCode.from_parity(H_121).standardize()
        assert g_std == G_124
        assert h_std == H_121

    def test_already_standard_is_fixed_point(self):
        h = BM(["1110", "0101"])  # (A, I_2) with A = [[1,1],[0,1]]
        h_std, g_std = LinearCode.from_parity(h).standardize()
        assert h_std == h
        assert mat_mul(g_std, transpose(h_std)).is_zero()

    def test_super_row_component(self):
        # (8, 4) component whose printed generator pairs with its H block.
        h2 = BM(["11001000", "00110100", "10010010", "11110001"])
        g2 = BM(["10001011", "01001001", "00100101", "00010111"])
        _, g_std = LinearCode.from_parity(h2).standardize()
        assert g_std == g2

    def test_column_swap_needed_is_refused(self):
        # Null space of (1 1 0) needs a coordinate swap to reach (A, I) form.
        with pytest.raises(CodeError):
            LinearCode.from_parity(BM(["110"])).standardize()


class TestEncode:
    def test_worked_messages(self):
        c = LinearCode(H_121, G_124)
        assert str(c.encode(BV("110"))) == "1101100"
        assert str(c.encode(BV("101"))) == "1010011"

    def test_zero_message(self):
        c = LinearCode(H_121, G_124)
        assert c.encode(BV("000")) == BitVector.zeros(7)

    def test_length_mismatch(self):
        with pytest.raises(CodeError):
            LinearCode(H_121, G_124).encode(BV("11"))

    def test_all_messages_give_all_codewords(self):
        c = LinearCode(H_121, G_124)
        encoded = {str(c.encode(BitVector(3, m))) for m in range(8)}
        assert encoded == WORDS_124


class TestSyndrome:
    def test_codeword_zero(self):
        c = LinearCode.from_parity(H_121)
        for w in c.codewords:
            assert c.syndrome(w).bits == 0

    def test_worked_nonzero(self):
        c = LinearCode.from_parity(BM(["1010", "1101"]))
        assert str(c.syndrome(BV("1111"))) == "01"

    def test_direct_evaluation(self):
        c = LinearCode.from_parity(H_121)
        y = BV("1111110")
        assert c.syndrome(y) == mat_vec(H_121, y)

    def test_length_mismatch(self):
        with pytest.raises(CodeError):
            LinearCode.from_parity(H_121).syndrome(BV("101"))


class TestMinDistance:
    def test_worked_codes(self):
        assert LinearCode.from_parity(H_121).min_distance() == 2

    def test_brute_force_pairwise_oracle(self):
        rng = random.Random(41)
        for _ in range(10):
            c = random_code(rng, max_n=9)
            words = sorted(c.codewords, key=lambda w: w.bits)
            pairwise = min((a.bits ^ b.bits).bit_count()
                           for a, b in combinations(words, 2))
            assert c.min_distance() == pairwise

    def test_zero_code_rejected(self):
        with pytest.raises(CodeError):
            LinearCode.from_parity(BitMatrix.identity(3)).min_distance()

    def test_error_capability(self):
        assert LinearCode.from_parity(H_126).error_capability() == 0  # d = 2


class TestCosetDecoding:
    def test_worked_decode(self):
        c = LinearCode.from_parity(H_126)
        word, err = c.decode(BV("11110"))
        assert str(word) == "11010"
        assert str(err) == "00100"

    def test_worked_leaders(self):
        c = LinearCode.from_parity(H_126)
        leaders = {str(l) for _, l in c.coset_table.items()}
        assert leaders == {"00000", "10000", "01000", "00100"}

    def test_zero_syndrome_maps_to_zero(self):
        c = LinearCode.from_parity(H_126)
        assert c.coset_table.leader(BitVector.zeros(2)) == BitVector.zeros(5)

    def test_member_decodes_to_itself(self):
        c = LinearCode.from_parity(H_126)
        for w in c.codewords:
            word, err = c.decode(w)
            assert word == w and err.bits == 0

    def test_hamming_leaders_are_unit_vectors(self):
        from gridfec.families import hamming
        code = hamming(3)
        leaders = {l for _, l in code.coset_table.items()}
        expected = {BitVector.zeros(7)} | {BitVector(7, 1 << i) for i in range(7)}
        assert leaders == expected

    def test_leader_weight_minimal_in_coset(self):
        rng = random.Random(7)
        for _ in range(5):
            c = random_code(rng, max_n=8)
            for syndrome, leader in c.coset_table.items():
                coset = [BitVector(c.n, v) for v in range(1 << c.n)
                         if c.syndrome(BitVector(c.n, v)) == syndrome]
                assert leader.weight() == min(v.weight() for v in coset)

    def test_capacity_guard(self):
        h = BitMatrix(21, 42, tuple(1 << i | 1 << (41 - i) for i in range(21)))
        code = LinearCode.from_parity(h)
        with pytest.raises(CapacityError):
            code.coset_table


class TestDual:
    def test_worked_seven_three_dual(self):
        c = LinearCode.from_parity(H_125)
        d = c.dual()
        assert (d.n, d.k) == (7, 4)
        assert BV("1101111") in d.codewords
        assert BV("0100111") in d.codewords

    def test_dual_of_full_space_is_zero_code(self):
        full = LinearCode.from_generator(BitMatrix.identity(3))
        d = full.dual()
        assert d.k == 0
        assert d.codewords == frozenset({BitVector.zeros(3)})

    def test_double_dual_identity(self):
        rng = random.Random(4)
        for _ in range(10):
            c = random_code(rng)
            assert c.dual().dual().codewords == c.codewords

    def test_orthogonality_and_dimension(self):
        rng = random.Random(6)
        for _ in range(10):
            c = random_code(rng)
            d = c.dual()
            assert c.k + d.k == c.n
            for u in c.codewords:
                for v in d.codewords:
                    assert (u.bits & v.bits).bit_count() % 2 == 0


class TestIsCyclic:
    def test_worked_cyclic_code(self):
        assert LinearCode.from_generator(G_128).is_cyclic()

    def test_zero_code(self):
        assert LinearCode.from_parity(BitMatrix.identity(4)).is_cyclic()

    def test_non_cyclic(self):
        # The right shift of 1000100 is 0100010, which is not a codeword.
        c = LinearCode.from_parity(H_121)
        assert BV("0100010") not in c.codewords
        assert not c.is_cyclic()


class TestRate:
    def test_worked(self):
        assert LinearCode.from_parity(H_121).transmission_rate() == Fraction(3, 7)

    def test_repetition_like(self):
        from gridfec.families import repetition
        assert repetition(6).transmission_rate() == Fraction(1, 6)

    def test_hamming(self):
        from gridfec.families import hamming
        assert hamming(3).transmission_rate() == Fraction(4, 7)


class TestInvariants:
    def test_codeword_count_matches_rank(self):
        rng = random.Random(9)
        for _ in range(15):
            c = random_code(rng)
            assert len(c.codewords) == 1 << c.k
            # Exhaustively confirm the zero-syndrome set is the codeword set.
            if c.n <= 14:
                members = {BitVector(c.n, v) for v in range(1 << c.n)
                           if c.syndrome(BitVector(c.n, v)).bits == 0}
                assert members == set(c.codewords)

    def test_decode_corrects_within_capability(self):
        rng = random.Random(10)
        for _ in range(8):
            c = random_code(rng, max_n=8)
            t = c.error_capability()
            for w in c.codewords:
                for wt in range(1, t + 1):
                    for support in combinations(range(c.n), wt):
                        word, _ = c.decode(w.with_flipped(support))
                        assert word == w


class TestDetectCorrectTradeoff:
    def test_distance_three_cases(self):
        code = hamming3()
        assert code.can_correct_and_detect(1, 0)
        assert code.can_correct_and_detect(0, 2)
        assert not code.can_correct_and_detect(1, 1)

    def test_distance_five(self):
        from gridfec.families import repetition
        code = repetition(5)
        assert code.can_correct_and_detect(2, 0)
        assert code.can_correct_and_detect(1, 2)
        assert not code.can_correct_and_detect(2, 1)

    def test_negative_rejected(self):
        with pytest.raises(CodeError):
            hamming3().can_correct_and_detect(-1, 0)


def hamming3():
    from gridfec.families import hamming
    return hamming(3)
