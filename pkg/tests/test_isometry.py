import pytest

from src.borders import BorderEntry, naive_border_scan
from src.errors import CodeOutOfRange, EmptyWord, UnsupportedAlphabetSize
from src.isometry import is_hamming_isometric, is_isometric, is_lee_isometric
from src.metric import Metric, SuffixArrayMethod
from src.words import Alphabet, Word, reverse


class TestHammingIsometric:
    """Tests for is_hamming_isometric."""

    @pytest.mark.parametrize("text", ["11", "1", "1111", "10", "110"])
    def test_isometric_words(self, word, text):
        """Test words without a 2-error border."""
        verdict = is_hamming_isometric(word(text))
        assert verdict.isometric
        assert verdict.witness is None
        assert verdict.metric is Metric.hamming

    def test_1010011(self, word):
        """Test that the longest 2-error border is the witness."""
        verdict = is_hamming_isometric(word("1010011"))
        assert not verdict.isometric
        assert verdict.witness == BorderEntry(4, (0, 3), 2)

    def test_1100(self, word):
        """Test the suffix 00 against the prefix 11."""
        verdict = is_hamming_isometric(word("1100"))
        assert not verdict.isometric
        assert verdict.witness.length == 2

    def test_empty_word(self, word):
        """Test that the empty word is rejected."""
        with pytest.raises(EmptyWord):
            is_hamming_isometric(word(""))

    def test_methods_agree(self, all_words, binary):
        """Test that both suffix array constructions give the same verdicts."""
        for u in all_words(binary, 8):
            a = is_hamming_isometric(u, SuffixArrayMethod.doubling)
            b = is_hamming_isometric(u, SuffixArrayMethod.sais)
            assert a == b

    def test_matches_naive_scan(self, all_words, binary):
        """Test the verdict against the quadratic scan."""
        for u in all_words(binary, 10):
            assert is_hamming_isometric(u).isometric == (not naive_border_scan(u, 2))

    def test_symbol_permutation(self, all_words):
        """Test that renaming letters does not change the verdict."""
        alphabet = Alphabet.cyclic(3)
        swap = bytes([2, 0, 1])
        for u in all_words(alphabet, 6):
            renamed = Word(bytes(swap[c] for c in u.codes), alphabet)
            assert is_hamming_isometric(u).isometric == is_hamming_isometric(renamed).isometric

    def test_reversal(self, all_words, binary):
        """Test that a word and its reverse get the same verdict."""
        for alphabet, max_length in ((binary, 10), (Alphabet.cyclic(3), 6)):
            for u in all_words(alphabet, max_length):
                expected = is_hamming_isometric(u).isometric
                assert is_hamming_isometric(reverse(u)).isometric == expected, u.text

    def test_json_shape(self, word):
        """Test the report dictionary."""
        f = word("1100")
        assert is_hamming_isometric(f).to_dict(f) == {
            "word": "1100",
            "metric": "hamming",
            "isometric": False,
            "witness": {"length": 2, "positions": [0, 1], "distance": 2},
        }
        assert "witness" not in is_hamming_isometric(word("11")).to_dict(word("11"))


class TestLeeIsometric:
    """Tests for is_lee_isometric."""

    def test_0301(self, word, z4):
        """Test the non-Lee-isometric word 0301 over Z_4."""
        verdict = is_lee_isometric(word("0301", z4), 4)
        assert not verdict.isometric
        assert verdict.metric is Metric.lee
        assert verdict.witness.length == 2

    def test_binary_isometric(self, word):
        """Test that 11 over Z_2 is Lee-isometric."""
        assert is_lee_isometric(word("11"), 2).isometric

    def test_d_defaults_to_alphabet_size(self, word, z4):
        """Test that d is taken from the word's alphabet when omitted."""
        assert not is_lee_isometric(word("0301", z4)).isometric

    def test_unsupported_alphabet(self, word, z4):
        """Test that d >= 5 has no characterization."""
        with pytest.raises(UnsupportedAlphabetSize):
            is_lee_isometric(word("0301", z4), 5)

    def test_code_out_of_range(self, word, z4):
        """Test that a letter outside Z_d is rejected."""
        with pytest.raises(CodeOutOfRange):
            is_lee_isometric(word("0301", z4), 3)

    @pytest.mark.parametrize("d, max_length", [(2, 12), (3, 7)])
    def test_small_alphabets_coincide_with_hamming(self, all_words, d, max_length):
        """Test that for d <= 3 the Lee verdict is the Hamming verdict."""
        for u in all_words(Alphabet.cyclic(d), max_length):
            lee = is_lee_isometric(u, d)
            hamming = is_hamming_isometric(u)
            assert lee.isometric == hamming.isometric
            assert lee.witness == hamming.witness

    def test_z4_differs_from_hamming(self, word, z4):
        """Test a Z_4 word whose Lee and Hamming verdicts differ."""
        u = word("02", z4)
        assert is_hamming_isometric(u).isometric
        assert not is_lee_isometric(u, 4).isometric

    def test_dispatch(self, word, z4):
        """Test is_isometric on both metrics."""
        u = word("0301", z4)
        assert is_isometric(u, Metric.lee, 4).metric is Metric.lee
        assert is_isometric(u, "hamming").metric is Metric.hamming
