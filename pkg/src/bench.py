import logging
import statistics
import time
from dataclasses import asdict, dataclass

import numpy as np

from src.borders import ScanStats, has_k_error_border
from src.lce import build_index
from src.metric import SuffixArrayMethod
from src.words import Alphabet, Word

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BenchRow:
    n: int
    build_ms: float
    scan_ms: float
    lce_queries: int

    def to_dict(self) -> dict:
        return asdict(self)


def random_word(n: int, d: int, rng: np.random.Generator) -> Word:
    codes = rng.integers(0, d, size=n, dtype=np.uint8)
    return Word(codes.tobytes(), Alphabet.cyclic(d))


def run_benchmark(
    sizes: list[int],
    k: int = 2,
    seed: int = 0,
    repeat: int = 5,
    method: SuffixArrayMethod | str | None = None,
    d: int = 2,
) -> list[BenchRow]:
    """Median build and scan times over ``repeat`` runs for one random word per size.

    Words come from numpy's PCG64 generator seeded with ``seed``, drawn in the
    order of ``sizes``.
    """
    rng = np.random.default_rng(seed)
    rows = []
    for n in sizes:
        u = random_word(n, d, rng)
        build_times, scan_times = [], []
        queries = 0
        for _ in range(repeat):
            started = time.perf_counter()
            index = build_index(u, method)
            built = time.perf_counter()
            stats = ScanStats()
            has_k_error_border(u, k, index, stats)
            scanned = time.perf_counter()
            build_times.append(built - started)
            scan_times.append(scanned - built)
            queries = stats.lce_queries
        row = BenchRow(
            n,
            round(statistics.median(build_times) * 1000, 3),
            round(statistics.median(scan_times) * 1000, 3),
            queries,
        )
        logger.debug("bench %s", row)
        rows.append(row)
    return rows


def scan_ratios(rows: list[BenchRow]) -> list[float]:
    """Scan-time ratio between each row and the previous one."""
    return [
        cur.scan_ms / prev.scan_ms if prev.scan_ms else float("inf")
        for prev, cur in zip(rows, rows[1:])
    ]
