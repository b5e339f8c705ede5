"""k-error and k-Lee-error border detection.

A border of length ``l`` pairs the prefix ``u[0:l]`` with the suffix
``u[n-l:n]``; it is a k-error border when the two are at Hamming distance
exactly ``k`` and a k-Lee-error border when their Lee distance is ``k``.

The detectors use the kangaroo method: for a start index ``i`` (border length
``n - i``) they extend the current match with one longest-common-extension
query, then jump over the mismatch, so at most ``k + 1`` queries are spent on
each start. All starts ``1 .. n-1`` advance together, one batched query per
round, which keeps the per-start query sequence identical to running the loop
start by start in increasing order.
"""

import logging
from dataclasses import dataclass, field

import numpy as np

from src.errors import CodeOutOfRange, EmptyWord, IndexMismatch
from src.lce import LceIndex
from src.metric import Metric
from src.words import Word, lee_distance_letters

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BorderEntry:
    length: int
    positions: tuple[int, ...]
    distance: int

    def to_dict(self) -> dict:
        return {"length": self.length, "positions": list(self.positions), "distance": self.distance}


@dataclass(frozen=True)
class BorderReport:
    k: int
    kind: Metric
    borders: tuple[BorderEntry, ...] = ()

    @property
    def lengths(self) -> list[int]:
        return [entry.length for entry in self.borders]

    def __bool__(self) -> bool:
        return bool(self.borders)


@dataclass
class ScanStats:
    """Query accounting for one detector run.

    ``per_start[i]`` counts the lce queries spent on start index ``i``; starts
    listed in ``watch`` also get the returned lce values recorded in ``trace``.
    """

    watch: frozenset[int] = frozenset()
    lce_queries: int = 0
    rounds: int = 0
    per_start: np.ndarray | None = None
    trace: dict[int, list[int]] = field(default_factory=dict)


def has_k_error_border(
    u: Word, k: int, index: LceIndex, stats: ScanStats | None = None
) -> bool:
    return bool(_kangaroo(u, k, index, None, stats)[0].size)


def find_k_error_borders(
    u: Word, k: int, index: LceIndex, stats: ScanStats | None = None
) -> BorderReport:
    hits, positions = _kangaroo(u, k, index, None, stats)
    return _report(u, k, Metric.hamming, hits, positions)


def has_k_lee_error_border(
    u: Word, k: int, d: int, index: LceIndex, stats: ScanStats | None = None
) -> bool:
    return bool(_kangaroo(u, k, index, d, stats)[0].size)


def find_k_lee_error_borders(
    u: Word, k: int, d: int, index: LceIndex, stats: ScanStats | None = None
) -> BorderReport:
    hits, positions = _kangaroo(u, k, index, d, stats)
    return _report(u, k, Metric.lee, hits, positions)


def naive_border_scan(u: Word, k: int) -> BorderReport:
    _check_scan_input(u, k)
    n = len(u)
    codes = u.codes
    entries = []
    for i in range(1, n):
        length = n - i
        mismatches = tuple(p for p in range(length) if codes[p] != codes[i + p])
        if len(mismatches) == k:
            entries.append(BorderEntry(length, mismatches, k))
    return BorderReport(k, Metric.hamming, tuple(entries))


def naive_lee_border_scan(u: Word, k: int, d: int) -> BorderReport:
    _check_scan_input(u, k)
    _check_codes(u, d)
    n = len(u)
    codes = u.codes
    entries = []
    for i in range(1, n):
        length = n - i
        mismatches = tuple(p for p in range(length) if codes[p] != codes[i + p])
        distance = sum(lee_distance_letters(codes[p], codes[i + p], d) for p in mismatches)
        if distance == k:
            entries.append(BorderEntry(length, mismatches, k))
    return BorderReport(k, Metric.lee, tuple(entries))


def _check_scan_input(u: Word, k: int):
    if len(u) == 0:
        raise EmptyWord()
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")


def _check_codes(u: Word, d: int):
    if u.codes and max(u.codes) >= d:
        raise CodeOutOfRange(max(u.codes), d)


def _report(
    u: Word, k: int, kind: Metric, hits: np.ndarray, positions: dict[int, list[int]]
) -> BorderReport:
    n = len(u)
    entries = tuple(
        BorderEntry(n - i, tuple(positions.get(i, ())), k) for i in hits.tolist()
    )
    return BorderReport(k, kind, entries)


def _kangaroo(
    u: Word, k: int, index: LceIndex, lee_d: int | None, stats: ScanStats | None
) -> tuple[np.ndarray, dict[int, list[int]]]:
    """Run the kangaroo loop for every start index.

    Returns the start indices whose border reaches distance exactly ``k``
    (ascending, i.e. longest border first) and, for those starts, the
    mismatch positions within the border.
    """
    _check_scan_input(u, k)
    if index.word.codes != u.codes:
        raise IndexMismatch()
    if lee_d is not None:
        _check_codes(u, lee_d)

    n = len(u)
    codes = u.array.astype(np.int16)
    starts = np.arange(1, n, dtype=np.int64)
    ell = np.zeros(n - 1, dtype=np.int64)
    dist = np.zeros(n - 1, dtype=np.int64)
    hits: list[np.ndarray] = []
    jumps: list[tuple[np.ndarray, np.ndarray]] = []
    if stats is not None:
        stats.per_start = np.zeros(n, dtype=np.int64)
        stats.trace = {i: [] for i in stats.watch if 1 <= i < n}

    while starts.size:
        ext = index.lce_many(ell, starts + ell)
        if stats is not None:
            _record(stats, starts, ext)
        ell += ext
        at_end = ell == n - starts
        hits.append(starts[at_end & (dist == k)])

        # Lanes still short of both the border end and the target distance jump
        # over their mismatch; every other lane is finished.
        go = ~at_end & (dist < k)
        starts, ell, dist = starts[go], ell[go], dist[go]
        a = codes[ell]
        b = codes[starts + ell]
        if lee_d is None:
            dist += 1
        else:
            gap = np.abs(a - b)
            dist += np.minimum(gap, lee_d - gap)
        jumps.append((starts, ell.copy()))
        ell += 1

        keep = dist <= k
        starts, ell, dist = starts[keep], ell[keep], dist[keep]

    found = np.sort(np.concatenate(hits)) if hits else np.zeros(0, dtype=np.int64)
    positions: dict[int, list[int]] = {i: [] for i in found.tolist()}
    if positions:
        for jumped, at in jumps:
            mask = np.isin(jumped, found)
            for i, p in zip(jumped[mask].tolist(), at[mask].tolist()):
                positions[i].append(p)
    if stats is not None:
        logger.debug(
            "kangaroo scan n=%d k=%d: %d rounds, %d lce queries, %d borders",
            n, k, stats.rounds, stats.lce_queries, found.size,
        )
    return found, positions


def _record(stats: ScanStats, starts: np.ndarray, ext: np.ndarray):
    stats.rounds += 1
    stats.lce_queries += int(starts.size)
    stats.per_start[starts] += 1
    for i in stats.trace:
        where = np.flatnonzero(starts == i)
        if where.size:
            stats.trace[i].append(int(ext[where[0]]))
