import itertools
import random

import pytest

from src.words import Alphabet, Word, make_word


@pytest.fixture
def binary():
    """Binary alphabet "01"."""
    return Alphabet.parse("01")


@pytest.fixture
def z4():
    """Alphabet of Z_4 in code order."""
    return Alphabet.parse("0123")


@pytest.fixture
def word(binary):
    """Build a word from text, binary unless another alphabet is given."""

    def build(text: str, alphabet: Alphabet | None = None) -> Word:
        return make_word(text, alphabet or binary)

    return build


@pytest.fixture
def rng():
    """Seeded stdlib generator for randomized comparisons."""
    return random.Random(20240613)


@pytest.fixture
def all_words():
    """Generator of every word over an alphabet with length in [min_length, max_length]."""

    def generate(alphabet: Alphabet, max_length: int, min_length: int = 1):
        for length in range(min_length, max_length + 1):
            for codes in itertools.product(range(alphabet.size), repeat=length):
                yield Word(bytes(codes), alphabet)

    return generate
