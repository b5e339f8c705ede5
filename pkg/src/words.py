"""Alphabets, words and the Hamming/Lee distance primitives.

Symbols are stored as dense one-byte codes: the symbol at position ``i`` of the
alphabet has code ``i``. Everything downstream works on codes over Z_d.
"""

import string
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from src.errors import CodeOutOfRange, InvalidAlphabet, LengthMismatch, UnknownSymbol
from src.metric import MAX_ALPHABET_SIZE

_CANONICAL_SYMBOLS = string.digits + string.ascii_letters


@dataclass(frozen=True)
class Alphabet:
    symbols: str

    def __post_init__(self):
        if not self.symbols:
            raise InvalidAlphabet("alphabet must contain at least one symbol")
        if len(self.symbols) > MAX_ALPHABET_SIZE:
            raise InvalidAlphabet(
                f"alphabet has {len(self.symbols)} symbols, at most {MAX_ALPHABET_SIZE} allowed"
            )
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidAlphabet(f"alphabet {self.symbols!r} repeats a symbol")

    @classmethod
    def parse(cls, symbols: str) -> "Alphabet":
        return cls(symbols)

    @classmethod
    def cyclic(cls, d: int) -> "Alphabet":
        """Canonical alphabet of Z_d: ``cyclic(4).symbols == "0123"``."""
        if not 1 <= d <= MAX_ALPHABET_SIZE:
            raise InvalidAlphabet(f"alphabet size {d} outside [1, {MAX_ALPHABET_SIZE}]")
        extra = "".join(chr(0x100 + i) for i in range(len(_CANONICAL_SYMBOLS), d))
        return cls((_CANONICAL_SYMBOLS + extra)[:d])

    @property
    def size(self) -> int:
        return len(self.symbols)

    @cached_property
    def codes(self) -> dict[str, int]:
        return {ch: i for i, ch in enumerate(self.symbols)}


@dataclass(frozen=True)
class Word:
    codes: bytes
    alphabet: Alphabet

    def __post_init__(self):
        if self.codes and max(self.codes) >= self.alphabet.size:
            raise CodeOutOfRange(max(self.codes), self.alphabet.size)

    def __len__(self) -> int:
        return len(self.codes)

    def __getitem__(self, i: int) -> int:
        return self.codes[i]

    def __str__(self) -> str:
        return self.text

    @property
    def n(self) -> int:
        return len(self.codes)

    @property
    def d(self) -> int:
        return self.alphabet.size

    @cached_property
    def text(self) -> str:
        symbols = self.alphabet.symbols
        return "".join(symbols[c] for c in self.codes)

    @cached_property
    def array(self) -> np.ndarray:
        return np.frombuffer(self.codes, dtype=np.uint8)

    def factor(self, start: int, stop: int) -> "Word":
        return Word(self.codes[start:stop], self.alphabet)


def make_word(text: str, alphabet: Alphabet) -> Word:
    table = alphabet.codes
    codes = bytearray()
    for position, ch in enumerate(text):
        code = table.get(ch)
        if code is None:
            raise UnknownSymbol(position, ch)
        codes.append(code)
    return Word(bytes(codes), alphabet)


def word_from_codes(codes, alphabet: Alphabet) -> Word:
    codes = list(codes)
    for c in codes:
        if not 0 <= c < alphabet.size:
            raise CodeOutOfRange(c, alphabet.size)
    return Word(bytes(codes), alphabet)


def reverse(u: Word) -> Word:
    return Word(u.codes[::-1], u.alphabet)


def contains_factor(u: Word, f: Word) -> bool:
    m = len(f)
    if m > len(u):
        return False
    codes, pattern = u.codes, f.codes
    return any(codes[i : i + m] == pattern for i in range(len(u) - m + 1))


def _check_lengths(u: Word, v: Word):
    if len(u) != len(v):
        raise LengthMismatch(len(u), len(v))


def _check_codes(u: Word, d: int):
    if u.codes and max(u.codes) >= d:
        raise CodeOutOfRange(max(u.codes), d)


def hamming_distance(u: Word, v: Word) -> int:
    _check_lengths(u, v)
    return int(np.count_nonzero(u.array != v.array))


def lee_distance_letters(a: int, b: int, d: int) -> int:
    for code in (a, b):
        if not 0 <= code < d:
            raise CodeOutOfRange(code, d)
    diff = abs(a - b)
    return min(diff, d - diff)


def lee_distance_words(u: Word, v: Word, d: int) -> int:
    _check_lengths(u, v)
    _check_codes(u, d)
    _check_codes(v, d)
    diff = np.abs(u.array.astype(np.int16) - v.array.astype(np.int16))
    return int(np.minimum(diff, d - diff).sum())
