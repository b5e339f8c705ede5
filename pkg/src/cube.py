"""Brute-force ground truth on the d-ary n-cube.

The host graph has the d**n words of length n over Z_d as vertices. Two edge
sets are supported and always chosen explicitly:

- ``Metric.hamming``: words differing at one position by any substitution
  (graph distance = Hamming distance);
- ``Metric.lee``: words differing at one position by +1 or -1 mod d
  (graph distance = Lee distance).

Q_n^d(f) is the subgraph induced by the f-free words. Vertices are indexed by
their base-d value, so index order is lexicographic order.

An induced subgraph H of the host is isometric iff every ordered pair (u, v)
of distinct vertices of H has a neighbour of u in H one host step closer to v.
``check_isometric_embedding`` evaluates that test for all v at once per source
u; a pair that fails it is a witness, and its subgraph distance is then
measured by BFS.
"""

import logging
import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from src import settings
from src.errors import BudgetExceeded, CodeOutOfRange, EmptyWord, LengthMismatch, NotFFree
from src.metric import Metric
from src.words import (
    Alphabet,
    Word,
    contains_factor,
    hamming_distance,
    lee_distance_words,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Witness:
    u: Word
    v: Word
    host_distance: int
    subgraph_distance: float  # math.inf when v is unreachable from u

    def to_dict(self) -> dict:
        subgraph = None if math.isinf(self.subgraph_distance) else int(self.subgraph_distance)
        return {
            "u": self.u.text,
            "v": self.v.text,
            "host_distance": self.host_distance,
            "subgraph_distance": subgraph,
        }


@dataclass(frozen=True)
class CubeCheckResult:
    isometric: bool
    n: int
    d: int
    metric: Metric
    witness: Witness | None = None
    vertices: int = 0

    def to_dict(self) -> dict:
        data = {"n": self.n, "isometric": self.isometric, "vertices": self.vertices}
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data


@dataclass(frozen=True)
class SweepResult:
    f: Word
    d: int
    metric: Metric
    results: tuple[CubeCheckResult, ...] = field(default_factory=tuple)

    @property
    def first_failure(self) -> int | None:
        return next((r.n for r in self.results if not r.isometric), None)


class FFreeCube:
    """The host cube of one (f, n, d) together with its f-free vertex mask."""

    def __init__(self, f: Word, n: int, d: int, budget: int | None = None):
        if len(f) == 0:
            raise EmptyWord()
        if n < 0:
            raise ValueError(f"n must be non-negative, got {n}")
        if max(f.codes) >= d:
            raise CodeOutOfRange(max(f.codes), d)
        budget = settings.VERTEX_BUDGET if budget is None else budget
        size = d**n
        if size > budget:
            raise BudgetExceeded(size, budget)

        self.f = f
        self.n = n
        self.d = d
        self.size = size
        self.alphabet = f.alphabet if f.alphabet.size == d else Alphabet.cyclic(d)
        self.weights = np.array([d ** (n - 1 - i) for i in range(n)], dtype=np.int64)
        if n:
            self.digits = np.indices((d,) * n, dtype=np.uint8).reshape(n, -1).T
        else:
            self.digits = np.zeros((1, 0), dtype=np.uint8)
        self.columns = [np.ascontiguousarray(self.digits[:, i]) for i in range(n)]
        self.free = self._free_mask(np.frombuffer(f.codes, dtype=np.uint8))

    def _free_mask(self, pattern: np.ndarray) -> np.ndarray:
        m = len(pattern)
        contains = np.zeros(self.size, dtype=bool)
        for start in range(self.n - m + 1):
            contains |= np.all(self.digits[:, start : start + m] == pattern, axis=1)
        return ~contains

    def word(self, index: int) -> Word:
        return Word(self.digits[index].tobytes(), self.alphabet)

    def index_of(self, w: Word) -> int:
        return int(np.dot(np.frombuffer(w.codes, dtype=np.uint8), self.weights)) if self.n else 0

    def closer_neighbour_table(self, u: int, metric: Metric) -> np.ndarray:
        """``table[i, c]``: u has an f-free neighbour one step closer, at
        coordinate i, to any vertex whose coordinate i holds symbol c."""
        d = self.d
        cu = self.digits[u].astype(np.int64)
        symbols = np.arange(d, dtype=np.int64)
        if metric is Metric.hamming:
            targets = u + (symbols[None, :] - cu[:, None]) * self.weights[:, None]
            table = self.free[targets]
            table[np.arange(self.n), cu] = False
            return table

        plus = self.free[u + ((cu + 1) % d - cu) * self.weights]
        minus = self.free[u + ((cu - 1) % d - cu) * self.weights]
        delta = (symbols[None, :] - cu[:, None]) % d
        back = d - delta
        forward = (delta > 0) & (delta < back)
        backward = (delta > 0) & (delta > back)
        tie = (delta > 0) & (delta == back)
        return (
            (forward & plus[:, None])
            | (backward & minus[:, None])
            | (tie & (plus | minus)[:, None])
        )

    def critical_targets(self, u: int, metric: Metric) -> np.ndarray:
        """f-free vertices v != u such that no f-free neighbour of u is closer to v."""
        table = self.closer_neighbour_table(u, metric)
        reachable = np.zeros(self.size, dtype=bool)
        for i, column in enumerate(self.columns):
            reachable |= table[i][column]
        bad = self.free & ~reachable
        bad[u] = False
        return np.flatnonzero(bad)

    def bfs(self, source: int, metric: Metric) -> np.ndarray:
        """Subgraph distances from ``source``; -1 marks unreachable vertices."""
        shape = (self.d,) * self.n
        free = self.free.reshape(shape)
        dist = np.full(shape, -1, dtype=np.int64)
        frontier = np.zeros(shape, dtype=bool)
        frontier.flat[source] = True
        dist.flat[source] = 0
        level = 0
        while frontier.any():
            level += 1
            reach = np.zeros(shape, dtype=bool)
            for axis in range(self.n):
                if metric is Metric.lee:
                    reach |= np.roll(frontier, 1, axis=axis)
                    reach |= np.roll(frontier, -1, axis=axis)
                else:
                    reach |= frontier.any(axis=axis, keepdims=True)
            frontier = reach & free & (dist < 0)
            dist[frontier] = level
        return dist.reshape(-1)

    def host_distance(self, u: Word, v: Word, metric: Metric) -> int:
        if metric is Metric.lee:
            return lee_distance_words(u, v, self.d)
        return hamming_distance(u, v)


def enumerate_f_free(f: Word, n: int, d: int, budget: int | None = None) -> list[Word]:
    cube = FFreeCube(f, n, d, budget)
    return [cube.word(i) for i in np.flatnonzero(cube.free).tolist()]


def check_isometric_embedding(
    f: Word, n: int, d: int, metric: Metric, budget: int | None = None
) -> CubeCheckResult:
    metric = Metric(metric)
    cube = FFreeCube(f, n, d, budget)
    free_indices = np.flatnonzero(cube.free)
    vertices = int(free_indices.size)

    for u in free_indices.tolist():
        targets = cube.critical_targets(u, metric)
        if not targets.size:
            continue
        v = int(targets[0])
        distances = cube.bfs(u, metric)
        reached = int(distances[v])
        uw, vw = cube.word(u), cube.word(v)
        witness = Witness(
            uw,
            vw,
            cube.host_distance(uw, vw, metric),
            math.inf if reached < 0 else reached,
        )
        logger.debug("Q_%d^%d(%s) %s: witness %s -> %s", n, d, f.text, metric.value, uw, vw)
        return CubeCheckResult(False, n, d, metric, witness, vertices)

    logger.debug("Q_%d^%d(%s) %s: isometric (%d vertices)", n, d, f.text, metric.value, vertices)
    return CubeCheckResult(True, n, d, metric, None, vertices)


def subgraph_distances(
    f: Word, n: int, d: int, metric: Metric, source: Word, budget: int | None = None
) -> dict[str, int]:
    metric = Metric(metric)
    if len(source) != n:
        raise LengthMismatch(len(source), n)
    if contains_factor(source, f):
        raise NotFFree(source.text)
    cube = FFreeCube(f, n, d, budget)
    distances = cube.bfs(cube.index_of(source), metric)
    return {cube.word(i).text: int(distances[i]) for i in np.flatnonzero(distances >= 0).tolist()}


def sweep_embedding(
    f: Word, d: int, metric: Metric, n_values, budget: int | None = None
) -> SweepResult:
    results = []
    for n in n_values:
        result = check_isometric_embedding(f, n, d, metric, budget)
        logger.debug("sweep %s n=%d: %s", f.text, n, "ok" if result.isometric else "failure")
        results.append(result)
    return SweepResult(f, d, Metric(metric), tuple(results))


def f_free_transformation_exists(u: Word, v: Word, f: Word, metric: Metric, d: int) -> bool:
    """Whether a shortest host path from u to v stays inside the f-free words."""
    metric = Metric(metric)
    if len(u) != len(v):
        raise LengthMismatch(len(u), len(v))
    for w in (u, v):
        if w.codes and max(w.codes) >= d:
            raise CodeOutOfRange(max(w.codes), d)
        if contains_factor(w, f):
            raise NotFFree(w.text)

    alphabet = u.alphabet if u.alphabet.size >= d else Alphabet.cyclic(d)
    if metric is Metric.hamming:
        return _hamming_transformation(u, v, f, alphabet)
    return _lee_transformation(u, v, f, d, alphabet)


def _hamming_transformation(u: Word, v: Word, f: Word, alphabet: Alphabet) -> bool:
    # State = set of mismatch positions already switched to v's letter.
    mismatches = [p for p in range(len(u)) if u[p] != v[p]]
    m = len(mismatches)
    reachable = bytearray(1 << m)
    reachable[0] = 1
    for mask in range(1 << m):
        if not reachable[mask]:
            continue
        for bit, p in enumerate(mismatches):
            nxt = mask | (1 << bit)
            if nxt == mask or reachable[nxt]:
                continue
            codes = bytearray(u.codes)
            for b, q in enumerate(mismatches):
                if nxt >> b & 1:
                    codes[q] = v[q]
            if not contains_factor(Word(bytes(codes), alphabet), f):
                reachable[nxt] = 1
    return bool(reachable[(1 << m) - 1])


def _lee_steps(a: int, b: int, d: int) -> tuple[int, ...]:
    delta = (b - a) % d
    if delta == 0:
        return ()
    if delta < d - delta:
        return (1,)
    if delta > d - delta:
        return (-1,)
    return (1, -1)


def _lee_transformation(u: Word, v: Word, f: Word, d: int, alphabet: Alphabet) -> bool:
    seen = {u.codes}
    queue = deque([u.codes])
    while queue:
        codes = queue.popleft()
        if codes == v.codes:
            return True
        for p in range(len(codes)):
            for step in _lee_steps(codes[p], v[p], d):
                nxt = bytearray(codes)
                nxt[p] = (codes[p] + step) % d
                nxt = bytes(nxt)
                if nxt in seen:
                    continue
                seen.add(nxt)
                if not contains_factor(Word(nxt, alphabet), f):
                    queue.append(nxt)
    return False
