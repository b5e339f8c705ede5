import itertools

import pytest

from src.borders import (
    BorderEntry,
    ScanStats,
    find_k_error_borders,
    find_k_lee_error_borders,
    has_k_error_border,
    has_k_lee_error_border,
    naive_border_scan,
    naive_lee_border_scan,
)
from src.errors import CodeOutOfRange, EmptyWord, IndexMismatch
from src.lce import build_index
from src.metric import Metric
from src.words import Alphabet, Word, hamming_distance, lee_distance_words, reverse


def hamming_report(u, k, stats=None):
    return find_k_error_borders(u, k, build_index(u), stats)


def lee_report(u, k, d, stats=None):
    return find_k_lee_error_borders(u, k, d, build_index(u), stats)


class TestHammingBorders:
    """Tests for the k-error border detector."""

    def test_worked_examples(self, word):
        """Test the words with and without a 2-error border."""
        cases = [("1010011", True), ("101011", True), ("1111", False), ("1100", True)]
        for text, expected in cases:
            u = word(text)
            assert has_k_error_border(u, 2, build_index(u)) is expected, text

    def test_report_1010011(self, word):
        """Test the full report: lengths 4 then 3 with their mismatch positions."""
        report = hamming_report(word("1010011"), 2)
        assert report.lengths == [4, 3]
        assert report.kind is Metric.hamming
        assert report.borders[0] == BorderEntry(4, (0, 3), 2)
        assert report.borders[1] == BorderEntry(3, (0, 1), 2)

    def test_exact_borders(self, word):
        """Test that k = 0 lists the exact borders."""
        assert hamming_report(word("1111"), 0).lengths == [3, 2, 1]
        assert hamming_report(word("1001"), 0).lengths == [1]

    def test_short_words(self, word):
        """Test words too short for two mismatches."""
        assert not hamming_report(word("01"), 2)
        assert not hamming_report(word("0"), 1)
        assert hamming_report(word("01"), 1).lengths == [1]

    def test_kangaroo_trace(self, word):
        """Test the lce values returned for start 3 of 101011."""
        stats = ScanStats(watch=frozenset({3}))
        report = hamming_report(word("101011"), 2, stats)
        assert 3 in report.lengths
        assert stats.trace[3] == [0, 0, 1]

    def test_entries_are_consistent(self, word):
        """Test that each entry's prefix and suffix differ exactly at its positions."""
        u = word("0110100110010110")
        for k in range(5):
            for entry in hamming_report(u, k).borders:
                prefix = u.factor(0, entry.length)
                suffix = u.factor(len(u) - entry.length, len(u))
                assert hamming_distance(prefix, suffix) == k
                assert len(entry.positions) == k
                assert list(entry.positions) == sorted(entry.positions)
                assert all(prefix[p] != suffix[p] for p in entry.positions)

    def test_query_budget(self, word, rng):
        """Test that no start spends more than k + 1 queries."""
        for _ in range(200):
            u = word("".join(rng.choice("01") for _ in range(rng.randrange(2, 80))))
            for k in range(4):
                stats = ScanStats()
                hamming_report(u, k, stats)
                n = len(u)
                assert stats.lce_queries <= (k + 1) * (n - 1)
                assert int(stats.per_start.max()) <= k + 1

    def test_rejects_bad_input(self, word):
        """Test the error cases."""
        u = word("1010")
        with pytest.raises(EmptyWord):
            find_k_error_borders(word(""), 2, build_index(u))
        with pytest.raises(ValueError):
            find_k_error_borders(u, -1, build_index(u))
        with pytest.raises(IndexMismatch):
            find_k_error_borders(u, 2, build_index(word("1011")))

    def test_matches_naive_scan(self, all_words, binary):
        """Test the detector against the quadratic scan on all binary words up to length 12."""
        for u in all_words(binary, 12):
            index = build_index(u)
            for k in range(4):
                assert find_k_error_borders(u, k, index) == naive_border_scan(u, k), u.text

    def test_ternary_matches_naive_scan(self, all_words):
        """Test ternary words up to length 6."""
        for u in all_words(Alphabet.cyclic(3), 6):
            for k in range(4):
                assert hamming_report(u, k) == naive_border_scan(u, k), u.text

    @pytest.mark.slow
    def test_ternary_matches_naive_scan_exhaustive(self, all_words):
        """Test ternary words up to length 9."""
        for u in all_words(Alphabet.cyclic(3), 9):
            index = build_index(u)
            for k in range(4):
                expected = naive_border_scan(u, k)
                assert find_k_error_borders(u, k, index) == expected, u.text
                assert has_k_error_border(u, k, index) is bool(expected), u.text

    def test_reversal_keeps_lengths(self, all_words, binary):
        """Test that a word and its reverse have the same k-error border lengths."""
        for u in all_words(binary, 9):
            assert hamming_report(u, 2).lengths == hamming_report(reverse(u), 2).lengths

    def test_reversal_on_random_words(self, word, rng):
        """Test reversal on random ternary words for k up to 3."""
        ternary = Alphabet.cyclic(3)
        for _ in range(300):
            u = word("".join(rng.choice("012") for _ in range(rng.randrange(1, 60))), ternary)
            for k in range(4):
                assert hamming_report(u, k).lengths == hamming_report(reverse(u), k).lengths

    def test_symbol_permutation(self, all_words):
        """Test that every renaming of the three letters keeps has_k_error_border."""
        alphabet = Alphabet.cyclic(3)
        for u in all_words(alphabet, 6):
            expected = [has_k_error_border(u, k, build_index(u)) for k in range(4)]
            for perm in itertools.permutations(range(3)):
                renamed = Word(bytes(perm[c] for c in u.codes), alphabet)
                index = build_index(renamed)
                got = [has_k_error_border(renamed, k, index) for k in range(4)]
                assert got == expected, (u.text, perm)


class TestLeeBorders:
    """Tests for the k-Lee-error border detector."""

    def test_worked_examples(self, word, z4):
        """Test the Z_4 examples."""
        for text, expected in [("0301", True), ("02", True), ("0000", False)]:
            u = word(text, z4)
            assert has_k_lee_error_border(u, 2, 4, build_index(u)) is expected, text

    def test_report_0301(self, word, z4):
        """Test lengths and positions of 0301 for k = 2 and k = 1."""
        u = word("0301", z4)
        report = lee_report(u, 2, 4)
        assert report.kind is Metric.lee
        assert report.borders == (BorderEntry(2, (1,), 2),)
        assert lee_report(u, 1, 4).lengths == [1]

    def test_overshoot(self, word, z4):
        """Test that a letter at distance 2 skips straight past k = 1."""
        u = word("0220", z4)
        assert lee_report(u, 1, 4).lengths == []
        assert lee_report(u, 4, 4).lengths == [3, 2]

    def test_unary(self, word, z4):
        """Test that a unary word has no Lee-error border for k >= 1."""
        assert not lee_report(word("3333", z4), 1, 4)
        assert lee_report(word("3333", z4), 0, 4).lengths == [3, 2, 1]

    def test_naive_030001(self, word, z4):
        """Test that the length-1 border of 030001 has Lee distance 1."""
        report = naive_lee_border_scan(word("030001", z4), 2, 4)
        assert 1 not in report.lengths
        assert naive_lee_border_scan(word("030001", z4), 1, 4).lengths[-1] == 1

    def test_entries_are_consistent(self, word, z4):
        """Test that each entry's prefix and suffix are at Lee distance exactly k."""
        u = word("0123012230210313", z4)
        for k in range(6):
            for entry in lee_report(u, k, 4).borders:
                prefix = u.factor(0, entry.length)
                suffix = u.factor(len(u) - entry.length, len(u))
                assert lee_distance_words(prefix, suffix, 4) == k

    def test_query_budget(self, word, z4, rng):
        """Test the (k + 1)(n - 1) query bound."""
        for _ in range(200):
            u = word("".join(rng.choice("0123") for _ in range(rng.randrange(2, 80))), z4)
            for k in range(4):
                stats = ScanStats()
                lee_report(u, k, 4, stats)
                assert stats.lce_queries <= (k + 1) * (len(u) - 1)

    def test_code_out_of_range(self, word, z4):
        """Test that a code outside Z_d is rejected."""
        u = word("0301", z4)
        with pytest.raises(CodeOutOfRange):
            lee_report(u, 2, 3)

    def test_matches_naive_scan(self, all_words, z4):
        """Test the detector against the quadratic scan on all Z_4 words up to length 7."""
        for u in all_words(z4, 7):
            index = build_index(u)
            for k in range(4):
                expected = naive_lee_border_scan(u, k, 4)
                assert find_k_lee_error_borders(u, k, 4, index) == expected, u.text

    def test_z5_matches_naive_scan(self, all_words):
        """Test Z_5 words up to length 5, where letters reach distance 2 both ways."""
        for u in all_words(Alphabet.cyclic(5), 5):
            for k in range(4):
                assert lee_report(u, k, 5) == naive_lee_border_scan(u, k, 5), u.text

    @pytest.mark.slow
    def test_binary_lee_equals_hamming(self, all_words, binary):
        """Test that over Z_2 the two detectors agree on every word up to length 12."""
        for u in all_words(binary, 12):
            index = build_index(u)
            for k in range(4):
                assert has_k_lee_error_border(u, k, 2, index) is has_k_error_border(u, k, index)
                lee = find_k_lee_error_borders(u, k, 2, index)
                assert lee.lengths == find_k_error_borders(u, k, index).lengths, u.text

    def test_reversal(self, all_words, z4):
        """Test that a Z_4 word and its reverse have the same k-Lee-error border lengths."""
        for u in all_words(z4, 5):
            for k in range(4):
                assert lee_report(u, k, 4).lengths == lee_report(reverse(u), k, 4).lengths

    def test_reversal_on_random_words(self, word, z4, rng):
        """Test reversal on random Z_4 words."""
        for _ in range(300):
            u = word("".join(rng.choice("0123") for _ in range(rng.randrange(1, 60))), z4)
            for k in range(4):
                assert lee_report(u, k, 4).lengths == lee_report(reverse(u), k, 4).lengths

    @pytest.mark.parametrize(
        "shift, sign",
        [(1, 1), (2, 1), (3, 1), (0, -1), (1, -1)],
        ids=["rotate1", "rotate2", "rotate3", "reflect", "reflect-rotate1"],
    )
    def test_rotation_and_reflection(self, all_words, z4, shift, sign):
        """Test that a -> sign * a + shift mod 4 keeps every k-Lee-error border."""
        for u in all_words(z4, 5):
            moved = Word(bytes((sign * c + shift) % 4 for c in u.codes), z4)
            for k in range(4):
                assert lee_report(moved, k, 4).borders == lee_report(u, k, 4).borders, u.text
