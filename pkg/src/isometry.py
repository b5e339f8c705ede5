"""Hamming- and Lee-isometricity decisions.

A word is not Hamming-isometric exactly when it has a 2-error border; over an
alphabet of size 4 it is not Lee-isometric exactly when it has a 2-Lee-error
border. On alphabets of size at most 3 the two notions coincide.
"""

from dataclasses import dataclass, replace

from src.borders import BorderEntry, find_k_error_borders, find_k_lee_error_borders
from src.errors import CodeOutOfRange, EmptyWord, UnsupportedAlphabetSize
from src.lce import build_index
from src.metric import Metric, SuffixArrayMethod
from src.words import Word

ISOMETRY_ERRORS = 2
MAX_LEE_ALPHABET = 4


@dataclass(frozen=True)
class IsometryVerdict:
    isometric: bool
    metric: Metric
    witness: BorderEntry | None = None

    def to_dict(self, f: Word) -> dict:
        data = {"word": f.text, "metric": self.metric.value, "isometric": self.isometric}
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        return data


def is_hamming_isometric(
    f: Word, method: SuffixArrayMethod | str | None = None
) -> IsometryVerdict:
    if len(f) == 0:
        raise EmptyWord()
    report = find_k_error_borders(f, ISOMETRY_ERRORS, build_index(f, method))
    witness = report.borders[0] if report else None
    return IsometryVerdict(witness is None, Metric.hamming, witness)


def is_lee_isometric(
    f: Word, d: int | None = None, method: SuffixArrayMethod | str | None = None
) -> IsometryVerdict:
    d = f.d if d is None else d
    if len(f) == 0:
        raise EmptyWord()
    if d > MAX_LEE_ALPHABET:
        raise UnsupportedAlphabetSize(d)
    if max(f.codes) >= d:
        raise CodeOutOfRange(max(f.codes), d)

    if d <= 3:
        return replace(is_hamming_isometric(f, method), metric=Metric.lee)

    report = find_k_lee_error_borders(f, ISOMETRY_ERRORS, d, build_index(f, method))
    witness = report.borders[0] if report else None
    return IsometryVerdict(witness is None, Metric.lee, witness)


def is_isometric(
    f: Word, metric: Metric, d: int | None = None, method: SuffixArrayMethod | str | None = None
) -> IsometryVerdict:
    if Metric(metric) is Metric.lee:
        return is_lee_isometric(f, d, method)
    return is_hamming_isometric(f, method)
