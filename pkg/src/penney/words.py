"""Binary words over {H, T} and their correlation structure.

The correlation vector of a pair of words records which suffix/prefix
overlaps exist between them; read as a binary number (first bit most
significant) it gives the Conway leading number, the integer that drives
every wait-time and odds computation in this package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .errors import LengthMismatchError, WordError

ALPHABET = "HT"
MAX_WORD_LENGTH = 30

_FLIP = {"H": "T", "T": "H"}


@dataclass(frozen=True, order=True)
class Word:
    """An immutable sequence of coin-flip outcomes, e.g. Word("HHT")."""

    text: str

    def __post_init__(self) -> None:
        if not isinstance(self.text, str) or not self.text:
            raise WordError("a word must be a nonempty string of H and T")
        if len(self.text) > MAX_WORD_LENGTH:
            raise WordError(
                f"word {self.text[:8]}... is longer than {MAX_WORD_LENGTH} characters"
            )
        bad = set(self.text) - set(ALPHABET)
        if bad:
            raise WordError(
                f"word {self.text!r} contains characters outside H/T: {sorted(bad)}"
            )

    @classmethod
    def parse(cls, s: str) -> "Word":
        """Parse user input case-insensitively ("hht" means "HHT")."""
        return cls(s.strip().upper())

    def __str__(self) -> str:
        return self.text

    def __len__(self) -> int:
        return len(self.text)

    def __iter__(self):
        return iter(self.text)

    def __getitem__(self, i: int) -> str:
        return self.text[i]

    def complement(self) -> "Word":
        """Flip every character (H <-> T)."""
        return Word("".join(_FLIP[c] for c in self.text))

    def reverse(self) -> "Word":
        """Reverse the character order."""
        return Word(self.text[::-1])


def all_words(n: int) -> list[Word]:
    """All 2**n words of length n in lexicographic order (H < T)."""
    if n < 1 or n > MAX_WORD_LENGTH:
        raise WordError(f"word length must be between 1 and {MAX_WORD_LENGTH}")
    return [Word("".join(p)) for p in itertools.product(ALPHABET, repeat=n)]


@dataclass(frozen=True)
class CorrelationVector:
    """Overlap indicator bits (c_0, ..., c_{n-1}) for a pair of words.

    Bit c_i is 1 exactly when the length-(n-i) prefix of the second word
    equals the length-(n-i) suffix of the first.  For a word against
    itself (the autocorrelation) c_0 is always 1.
    """

    bits: tuple[int, ...]

    @property
    def bit_string(self) -> str:
        return "".join(str(b) for b in self.bits)


def correlation(w1: Word, w2: Word) -> CorrelationVector:
    """Correlation vector of w1 against w2 (asymmetric in general)."""
    n = len(w1)
    if len(w2) != n:
        raise LengthMismatchError(
            f"correlation needs equal lengths, got {len(w1)} and {len(w2)}"
        )
    return CorrelationVector(
        tuple(1 if w2.text[: n - i] == w1.text[i:] else 0 for i in range(n))
    )


def autocorrelation(w: Word) -> CorrelationVector:
    """Correlation of a word with itself; bit 0 is always 1."""
    return correlation(w, w)


def conway_leading_number(v: CorrelationVector) -> int:
    """The correlation bits read as a binary integer, c_0 most significant.

    Twice this number is the expected wait time in the single-word case.
    """
    value = 0
    for b in v.bits:
        value = (value << 1) | b
    return value


def correlation_polynomial_eval(v: CorrelationVector, z) -> Fraction:
    """Evaluate c_0 + c_1*z + ... + c_{n-1}*z^(n-1) exactly at a rational z."""
    z = Fraction(z)
    total = Fraction(0)
    power = Fraction(1)
    for b in v.bits:
        if b:
            total += power
        power *= z
    return total


def is_self_overlapping(w: Word) -> bool:
    """True when some proper prefix of w equals a suffix of w."""
    return any(autocorrelation(w).bits[1:])
