"""Longest-common-extension index over the suffixes of one word.

The index is a suffix array with its inverse (rank), the LCP array of
lexicographically adjacent suffixes and a sparse table over the LCP array.
``lce(i, j)`` is then the minimum of the LCP values between the ranks of the
two suffixes, read from two overlapping sparse-table cells.

Two suffix array constructions are available behind ``build_index``:

- ``doubling``: prefix doubling with numpy sorts, O(n log n). The rank arrays of
  every round are kept long enough to derive the LCP array by binary lifting.
- ``sais``: induced sorting (SA-IS), O(n), followed by Kasai's LCP.

The sparse table takes O(n log n) space; queries are O(1).
"""

import logging
import time
from dataclasses import dataclass

import numpy as np

from src import settings
from src.errors import EmptyWord, PositionOutOfRange
from src.metric import SuffixArrayMethod
from src.words import Word

logger = logging.getLogger(__name__)

_S_TYPE = 1
_L_TYPE = 0


@dataclass(frozen=True, eq=False)
class LceIndex:
    word: Word
    suffix_array: np.ndarray
    rank: np.ndarray
    lcp: np.ndarray
    sparse: np.ndarray  # sparse[j, t] = min(lcp[t : t + 2**j])
    log2: np.ndarray
    method: SuffixArrayMethod

    @property
    def n(self) -> int:
        return len(self.word)

    def rmq(self, lo: int, hi: int) -> int:
        """Minimum of ``lcp[lo..hi]``, both ends inclusive."""
        if not 0 <= lo <= hi < len(self.lcp):
            raise PositionOutOfRange(hi if lo <= hi else lo, len(self.lcp))
        j = int(self.log2[hi - lo + 1])
        row = self.sparse[j]
        return int(min(row[lo], row[hi - (1 << j) + 1]))

    def lce(self, i: int, j: int) -> int:
        n = self.n
        for position in (i, j):
            if not 0 <= position <= n:
                raise PositionOutOfRange(position, n)
        if i == n or j == n:
            return 0
        if i == j:
            return n - i
        a, b = int(self.rank[i]), int(self.rank[j])
        if a > b:
            a, b = b, a
        return self.rmq(a, b - 1)

    def lce_many(self, i: np.ndarray, j: np.ndarray) -> np.ndarray:
        """Vectorized ``lce`` over two equal-length arrays of positions."""
        n = self.n
        i = np.asarray(i, dtype=np.int64)
        j = np.asarray(j, dtype=np.int64)
        if i.size and (i.min() < 0 or j.min() < 0 or i.max() > n or j.max() > n):
            bad = next(p for p in np.concatenate([i, j]).tolist() if not 0 <= p <= n)
            raise PositionOutOfRange(bad, n)
        out = np.zeros(i.shape, dtype=np.int64)
        same = (i == j) & (i < n)
        out[same] = n - i[same]
        live = (i != j) & (i < n) & (j < n)
        if not live.any():
            return out
        ri = self.rank[i[live]]
        rj = self.rank[j[live]]
        lo = np.minimum(ri, rj)
        hi = np.maximum(ri, rj) - 1
        level = self.log2[hi - lo + 1].astype(np.int64)
        left = self.sparse[level, lo]
        right = self.sparse[level, hi - (np.int64(1) << level) + 1]
        out[live] = np.minimum(left, right)
        return out


def build_index(u: Word, method: SuffixArrayMethod | str | None = None) -> LceIndex:
    if len(u) == 0:
        raise EmptyWord()
    method = SuffixArrayMethod(method) if method is not None else settings.SUFFIX_ARRAY_METHOD

    started = time.perf_counter()
    codes = u.array.astype(np.int64)
    if method is SuffixArrayMethod.doubling:
        suffix_array, lcp = _doubling(codes)
        rank = _inverse(suffix_array)
    else:
        suffix_array = np.asarray(sais(list(u.codes), u.d), dtype=np.int64)
        rank = _inverse(suffix_array)
        lcp = kasai(u.codes, suffix_array, rank)
    sparse, log2 = _sparse_table(lcp)

    for array in (suffix_array, rank, lcp, sparse, log2):
        array.flags.writeable = False
    logger.debug(
        "built %s index over n=%d in %.1f ms",
        method.value,
        len(u),
        (time.perf_counter() - started) * 1000,
    )
    return LceIndex(u, suffix_array, rank, lcp, sparse, log2, method)


def _inverse(permutation: np.ndarray) -> np.ndarray:
    inverse = np.empty_like(permutation)
    inverse[permutation] = np.arange(len(permutation), dtype=permutation.dtype)
    return inverse


def _dense_ranks(keys: np.ndarray, order: np.ndarray) -> np.ndarray:
    sorted_keys = keys[order]
    ranks = np.empty(len(keys), dtype=np.int64)
    ranks[order] = np.concatenate(([0], np.cumsum(sorted_keys[1:] != sorted_keys[:-1])))
    return ranks


def _doubling(codes: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    n = len(codes)
    order = np.argsort(codes, kind="stable")
    rank = _dense_ranks(codes, order)
    rounds = [rank]  # rounds[h] ranks the suffixes by their first 2**h symbols
    width = 1
    while rank[order[-1]] < n - 1:
        second = np.full(n, -1, dtype=np.int64)
        second[: n - width] = rank[width:]
        keys = rank * (n + 1) + (second + 1)
        order = np.argsort(keys, kind="stable")
        rank = _dense_ranks(keys, order)
        rounds.append(rank)
        width *= 2

    # Adjacent-suffix LCP by binary lifting over the round ranks.
    left = order[:-1].copy()
    right = order[1:].copy()
    lcp = np.zeros(n - 1, dtype=np.int64)
    for h in range(len(rounds) - 1, -1, -1):
        step = 1 << h
        fits = (left + step <= n) & (right + step <= n)
        ranks = rounds[h]
        agree = fits & (ranks[np.minimum(left, n - 1)] == ranks[np.minimum(right, n - 1)])
        lcp[agree] += step
        left[agree] += step
        right[agree] += step
    return order.astype(np.int64), lcp


def _sparse_table(lcp: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    m = len(lcp)
    levels = max(1, m.bit_length())
    sparse = np.full((levels, max(m, 1)), np.iinfo(np.int32).max, dtype=np.int32)
    sparse[0, :m] = lcp
    for j in range(1, levels):
        half = 1 << (j - 1)
        span = m - (1 << j) + 1
        if span <= 0:
            break
        sparse[j, :span] = np.minimum(sparse[j - 1, :span], sparse[j - 1, half : half + span])

    log2 = np.zeros(m + 2, dtype=np.int8)
    for j in range(1, levels):
        log2[1 << j :] += 1
    return sparse, log2


def kasai(codes, suffix_array: np.ndarray, rank: np.ndarray) -> np.ndarray:
    n = len(codes)
    sa = suffix_array.tolist()
    rk = rank.tolist()
    lcp = [0] * max(n - 1, 0)
    h = 0
    for i in range(n):
        r = rk[i]
        if r == n - 1:
            h = 0
            continue
        j = sa[r + 1]
        while i + h < n and j + h < n and codes[i + h] == codes[j + h]:
            h += 1
        lcp[r] = h
        if h:
            h -= 1
    return np.asarray(lcp, dtype=np.int64)


def sais(text: list[int], alphabet_size: int) -> list[int]:
    """Suffix array of ``text`` (codes in ``[0, alphabet_size)``) by induced sorting."""
    return _induced_sort(text, alphabet_size)[1:]


def _classify(text: list[int]) -> bytearray:
    n = len(text)
    types = bytearray(n + 1)
    types[n] = _S_TYPE
    if n == 0:
        return types
    types[n - 1] = _L_TYPE
    for i in range(n - 2, -1, -1):
        if text[i] < text[i + 1] or (text[i] == text[i + 1] and types[i + 1] == _S_TYPE):
            types[i] = _S_TYPE
    return types


def _is_lms(types: bytearray, i: int) -> bool:
    return i > 0 and types[i] == _S_TYPE and types[i - 1] == _L_TYPE


def _bucket_bounds(text: list[int], alphabet_size: int) -> tuple[list[int], list[int]]:
    counts = [0] * alphabet_size
    for c in text:
        counts[c] += 1
    heads, tails = [], []
    offset = 1  # slot 0 holds the empty suffix
    for count in counts:
        heads.append(offset)
        offset += count
        tails.append(offset - 1)
    return heads, tails


def _induce(text: list[int], sa: list[int], types: bytearray, alphabet_size: int):
    heads, tails = _bucket_bounds(text, alphabet_size)
    for t in range(len(sa)):
        j = sa[t] - 1
        if sa[t] > 0 and types[j] == _L_TYPE:
            sa[heads[text[j]]] = j
            heads[text[j]] += 1
    for t in range(len(sa) - 1, -1, -1):
        j = sa[t] - 1
        if sa[t] > 0 and types[j] == _S_TYPE:
            sa[tails[text[j]]] = j
            tails[text[j]] -= 1


def _lms_equal(text: list[int], types: bytearray, a: int, b: int) -> bool:
    n = len(text)
    if a == n or b == n:
        return False
    k = 0
    while True:
        a_lms = _is_lms(types, a + k)
        b_lms = _is_lms(types, b + k)
        if k > 0 and a_lms and b_lms:
            return True
        if a_lms != b_lms or text[a + k] != text[b + k]:
            return False
        k += 1


def _induced_sort(text: list[int], alphabet_size: int) -> list[int]:
    n = len(text)
    types = _classify(text)
    lms_positions = [i for i in range(1, n) if _is_lms(types, i)]

    sa = [-1] * (n + 1)
    sa[0] = n
    _, tails = _bucket_bounds(text, alphabet_size)
    for i in lms_positions:
        sa[tails[text[i]]] = i
        tails[text[i]] -= 1
    _induce(text, sa, types, alphabet_size)

    # Name the LMS substrings in their induced order.
    names = [-1] * (n + 1)
    names[n] = 0
    current, previous = 0, n
    for position in sa[1:]:
        if not _is_lms(types, position):
            continue
        if not _lms_equal(text, types, previous, position):
            current += 1
        names[position] = current
        previous = position
    summary_offsets = [i for i in range(n + 1) if names[i] >= 0]
    summary = [names[i] for i in summary_offsets]

    if current + 1 == len(summary):
        summary_sa = [0] * len(summary)
        for x, name in enumerate(summary):
            summary_sa[name] = x
    else:
        summary_sa = _induced_sort(summary[:-1], current + 1)
        summary_sa[0] = len(summary) - 1

    sa = [-1] * (n + 1)
    sa[0] = n
    _, tails = _bucket_bounds(text, alphabet_size)
    for t in range(len(summary_sa) - 1, 0, -1):
        i = summary_offsets[summary_sa[t]]
        sa[tails[text[i]]] = i
        tails[text[i]] -= 1
    _induce(text, sa, types, alphabet_size)
    return sa
