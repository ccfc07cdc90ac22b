import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from longhop import codes
from longhop.codes import GeneratorMatrix

from conftest import HAMMING_ROWS, random_full_rank_generator, random_invertible


def all_codewords(g):
    return [codes.encode(g, x) for x in range(1 << g.k)]


class TestEncode:
    def test_hamming_reference_word(self, hamming):
        msg = codes.vector_from_text("0011")
        assert codes.vector_to_text(codes.encode(hamming, msg), 7) == "0100011"

    def test_zero_message(self, hamming):
        assert codes.encode(hamming, 0) == 0

    def test_single_row_selection(self, hamming):
        msg = codes.vector_from_text("1000")
        assert codes.vector_to_text(codes.encode(hamming, msg), 7) == "1101000"

    def test_message_length_checked(self, hamming):
        with pytest.raises(ValueError):
            codes.encode(hamming, 1 << 4)

    @given(st.integers(0, 15), st.integers(0, 15))
    def test_linearity(self, hamming, x1, x2):
        lhs = codes.encode(hamming, x1) ^ codes.encode(hamming, x2)
        assert lhs == codes.encode(hamming, x1 ^ x2)

    def test_linearity_random_sizes(self):
        rng = random.Random(11)
        for _ in range(50):
            k = rng.randint(1, 12)
            n = rng.randint(k, 24)
            g = random_full_rank_generator(rng, k, n)
            x1, x2 = rng.getrandbits(k), rng.getrandbits(k)
            assert codes.encode(g, x1) ^ codes.encode(g, x2) == codes.encode(g, x1 ^ x2)


class TestMinDistance:
    def test_hamming(self, hamming):
        assert codes.min_distance(hamming) == 3

    def test_repetition(self):
        for n in (1, 3, 8):
            g = GeneratorMatrix(k=1, n=n, rows=((1 << n) - 1,))
            assert codes.min_distance(g) == n

    def test_identity(self):
        g = GeneratorMatrix(k=5, n=5, rows=tuple(1 << i for i in range(5)))
        assert codes.min_distance(g) == 1

    def test_refuses_beyond_limit(self):
        g = GeneratorMatrix(k=5, n=5, rows=tuple(1 << i for i in range(5)))
        with pytest.raises(ValueError, match="refus"):
            codes.min_distance(g, limit=4)

    @pytest.mark.parametrize("k,n", [(4, 9), (6, 14), (8, 17), (10, 20)])
    def test_equals_min_pairwise_distance(self, k, n):
        rng = random.Random(100 * k + n)
        g = random_full_rank_generator(rng, k, n)
        words = all_codewords(g)
        pairwise = min(
            (a ^ b).bit_count() for a, b in itertools.combinations(words, 2)
        )
        assert codes.min_distance(g) == pairwise


class TestChangeBasis:
    def test_invariance_randomized(self):
        rng = random.Random(7)
        for _ in range(40):
            k = rng.randint(2, 10)
            n = rng.randint(k, 20)
            g = random_full_rank_generator(rng, k, n)
            r = random_invertible(rng, k)
            g2 = codes.change_basis(g, r)
            # same code: identical codeword sets, identical distance
            assert set(all_codewords(g)) == set(all_codewords(g2))
            assert codes.min_distance(g) == codes.min_distance(g2)

    def test_rejects_singular_transform(self, hamming):
        with pytest.raises(ValueError, match="singular"):
            codes.change_basis(hamming, [1, 1, 4, 8])


class TestGeneratorMatrixValidation:
    def test_rejects_dependent_rows(self):
        with pytest.raises(ValueError, match="dependent"):
            GeneratorMatrix(k=2, n=3, rows=(0b101, 0b101))

    def test_rejects_bad_shape(self):
        with pytest.raises(ValueError):
            GeneratorMatrix(k=3, n=2, rows=(1, 2, 3))
        with pytest.raises(ValueError):
            GeneratorMatrix(k=2, n=4, rows=(1, 2, 3))

    def test_rejects_wide_rows(self):
        with pytest.raises(ValueError):
            GeneratorMatrix(k=1, n=2, rows=(0b100,))


class TestFiles:
    def test_parse_reference_file(self, hamming):
        text = "# a comment\n" + "\n".join(HAMMING_ROWS) + "\n"
        g = codes.parse_generator(text)
        assert (g.k, g.n) == (4, 7)
        assert g == hamming

    def test_round_trip(self, hamming):
        assert codes.parse_generator(codes.emit_generator(hamming)) == hamming

    def test_ragged_rows_report_line(self):
        with pytest.raises(ValueError, match="line 3"):
            codes.parse_generator("101\n110\n10\n")

    def test_non_binary_reports_line(self):
        with pytest.raises(ValueError, match="line 2"):
            codes.parse_generator("101\n1x1\n")

    def test_duplicate_rows_rank_error(self):
        with pytest.raises(ValueError, match="dependent"):
            codes.parse_generator("101\n101\n")

    def test_empty_rejected(self):
        with pytest.raises(ValueError, match="no matrix rows"):
            codes.parse_generator("# nothing here\n")


class TestVectorText:
    def test_position_one_is_leftmost(self):
        assert codes.vector_from_text("0100011") == 0b1100010
        assert codes.vector_to_text(0b1100010, 7) == "0100011"

    @given(st.integers(0, 2**12 - 1))
    def test_round_trip(self, v):
        assert codes.vector_from_text(codes.vector_to_text(v, 12)) == v
