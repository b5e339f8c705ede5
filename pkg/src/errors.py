class IsowordError(Exception):
    """Base class for every error raised by the library."""


class InvalidAlphabet(IsowordError):
    pass


class UnknownSymbol(IsowordError):
    def __init__(self, position: int, character: str):
        self.position = position
        self.character = character
        super().__init__(f"unknown symbol {character!r} at position {position}")


class LengthMismatch(IsowordError):
    def __init__(self, left: int, right: int):
        self.left = left
        self.right = right
        super().__init__(f"words have different lengths ({left} and {right})")


class CodeOutOfRange(IsowordError):
    def __init__(self, code: int, d: int):
        self.code = code
        self.d = d
        super().__init__(f"symbol code {code} is outside Z_{d}")


class EmptyWord(IsowordError):
    def __init__(self):
        super().__init__("operation requires a non-empty word")


class PositionOutOfRange(IsowordError):
    def __init__(self, position: int, n: int):
        self.position = position
        self.n = n
        super().__init__(f"position {position} is outside [0, {n}]")


class IndexMismatch(IsowordError):
    def __init__(self):
        super().__init__("index was built over a different word")


class UnsupportedAlphabetSize(IsowordError):
    def __init__(self, d: int):
        self.d = d
        super().__init__(f"no Lee-isometry characterization for alphabet size {d} (need d <= 4)")


class BudgetExceeded(IsowordError):
    def __init__(self, vertices: int, budget: int):
        self.vertices = vertices
        self.budget = budget
        super().__init__(f"cube has {vertices} vertices, budget is {budget}")


class NotFFree(IsowordError):
    def __init__(self, word: str):
        self.word = word
        super().__init__(f"word {word!r} contains the forbidden factor")


class UsageError(IsowordError):
    """Inconsistent command-line arguments."""
