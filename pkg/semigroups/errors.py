# semigroups/errors.py
# Exception hierarchy for semigroup construction and the code-table layers


class SemigroupError(Exception):
    """Base class for every error raised by the toolkit"""


class EmptyGeneratorsError(SemigroupError):
    """No generators were supplied"""


class InvalidGeneratorError(SemigroupError):
    """A generator is not a positive integer"""


class GcdNotOneError(SemigroupError):
    """Generators share a common factor, so the complement is infinite"""

    def __init__(self, generators, gcd: int):
        self.generators = list(generators)
        self.gcd = gcd
        super().__init__(f"gcd of generators {self.generators} is {gcd}, expected 1")


class SemigroupTooLargeError(SemigroupError):
    """Materializing the membership table would exceed the configured bound"""


class FullSemigroupError(SemigroupError):
    """Operation undefined for the full semigroup <1> (genus 0)"""


class NotAnElementError(SemigroupError):
    """Value is a gap of the semigroup"""

    def __init__(self, value: int):
        self.value = value
        super().__init__(f"{value} is not an element of the semigroup")


class InvalidFieldSizeError(SemigroupError):
    """Field size is not of the form q = 2 * 4^s with s >= 1"""

    def __init__(self, q: int):
        self.q = q
        super().__init__(f"q must be 2*4^s with s >= 1 (8, 32, 128, 512, ...), got {q}")


class UnknownFormatError(SemigroupError):
    """Requested output format is not csv, markdown or json"""


class CodeLengthError(SemigroupError):
    """Code length does not exceed every compared index, so some n - l would not be positive"""

    def __init__(self, length: int, scan_limit: int):
        self.length = length
        self.scan_limit = scan_limit
        super().__init__(f"code length {length} must exceed the scanned index range 1..{scan_limit}")
