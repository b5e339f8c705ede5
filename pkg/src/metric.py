from enum import Enum, IntEnum


class Metric(str, Enum):
    hamming = "hamming"
    lee = "lee"


class SuffixArrayMethod(str, Enum):
    doubling = "doubling"
    sais = "sais"


class ExitCode(IntEnum):
    ok = 0
    negative = 1
    error = 2


MAX_ALPHABET_SIZE = 256
DEFAULT_VERTEX_BUDGET = 1 << 22  # vertices of the host cube
