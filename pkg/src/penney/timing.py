"""First-occurrence counts, generating functions, and expected wait times.

A length-i string is a "first-timer" for a word w when its only
occurrence of w is as its suffix.  The counts a_1, a_2, ... determine
the distribution of the first occurrence time: the probability that w
first appears at flip i is a_i / 2^i.  The same counts fall out of the
power series of z^k / (z^k + (1 - 2z) c_w(z)), which this module expands
by exact long division as an independent route to the same integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import build_prefix_automaton
from .errors import DomainError
from .words import Word, autocorrelation, conway_leading_number, correlation_polynomial_eval


@dataclass(frozen=True)
class FirstTimerSequence:
    """Counts a_1..a_m of first-timer strings for one word, by length."""

    word: Word
    terms: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.terms)

    def term(self, i: int) -> int:
        """a_i with 1-based indexing."""
        return self.terms[i - 1]


def first_timer_sequence(word: Word, m: int) -> FirstTimerSequence:
    """First m first-timer counts, by dynamic programming on the prefix automaton.

    The accept state is treated as absorbing, so a string is counted at
    the length where the word first appears and never again.
    """
    n = len(word)
    if m < n:
        raise DomainError(f"need at least {n} terms for a length-{n} word, got {m}")
    aut = build_prefix_automaton(word)
    counts = [0] * n
    counts[0] = 1
    terms = []
    for _ in range(m):
        nxt = [0] * n
        hits = 0
        for state in range(n):
            c = counts[state]
            if not c:
                continue
            for bit in (0, 1):
                t = aut.delta[state][bit]
                if t == n:
                    hits += c
                else:
                    nxt[t] += c
        terms.append(hits)
        counts = nxt
    return FirstTimerSequence(word, tuple(terms))


def first_occurrence_probability(word: Word, i: int) -> Fraction:
    """Exact probability that the word first appears at flip i."""
    if i < 1:
        raise DomainError("flip index must be at least 1")
    if i < len(word):
        return Fraction(0)
    seq = first_timer_sequence(word, i)
    return Fraction(seq.term(i), 2**i)


def generating_function_coefficients(word: Word, m: int) -> list[int]:
    """Coefficients of z^1..z^m of z^k / (z^k + (1 - 2z) c_w(z)).

    Computed by exact long division; the constant denominator term is 1,
    so every coefficient is an integer.  Must equal the first-timer
    counts term by term.
    """
    if m < 1:
        raise DomainError("need at least one coefficient")
    k = len(word)
    c = autocorrelation(word).bits
    den = [0] * (k + 2)
    for j, cj in enumerate(c):
        den[j] += cj
        den[j + 1] -= 2 * cj
    den[k] += 1
    g = [0] * (m + 1)
    for j in range(m + 1):
        s = 1 if j == k else 0
        for lag in range(1, min(j, k + 1) + 1):
            if den[lag]:
                s -= den[lag] * g[j - lag]
        g[j] = s
    return g[1:]


def generating_function_at(word: Word, z) -> Fraction:
    """Exact value of z^k / (z^k + (1 - 2z) c_w(z)); equals 1 at z = 1/2."""
    z = Fraction(z)
    k = len(word)
    cz = correlation_polynomial_eval(autocorrelation(word), z)
    return z**k / (z**k + (1 - 2 * z) * cz)


def expected_wait_time(word: Word) -> int:
    """Expected number of fair flips until the word first appears.

    Equals twice the Conway leading number, so it is always an even
    integer between 2^n (non-self-overlapping words) and 2^(n+1) - 2
    (single-character words).
    """
    return 2 * conway_leading_number(autocorrelation(word))


@dataclass(frozen=True)
class RecurrenceSpec:
    """A linear recurrence a_n = sum(coeff * a_(n-lag)) with OEIS metadata."""

    oeis_id: str
    name: str | None
    terms: tuple[tuple[int, int], ...]  # (lag, coefficient), lags >= 1

    @property
    def order(self) -> int:
        return max(lag for lag, _ in self.terms)

    @property
    def first_index(self) -> int:
        """First 1-based index at which the recurrence is asserted."""
        return self.order + 1

    def formula(self) -> str:
        parts = []
        for lag, coeff in self.terms:
            term = f"a(n-{lag})"
            if abs(coeff) != 1:
                term = f"{abs(coeff)}{term}"
            if not parts:
                parts.append(term if coeff > 0 else f"-{term}")
            else:
                parts.append(f"{'+' if coeff > 0 else '-'} {term}")
        return "a(n) = " + " ".join(parts)


def verify_recurrence(seq: FirstTimerSequence, spec: RecurrenceSpec) -> bool:
    """Check the recurrence at every testable index past the initial segment."""
    m = len(seq.terms)
    start = spec.first_index
    if m < start:
        raise DomainError(f"sequence has {m} terms; need at least {start} to test")
    for i in range(start, m + 1):
        expect = sum(coeff * seq.term(i - lag) for lag, coeff in spec.terms)
        if seq.term(i) != expect:
            return False
    return True


# Static OEIS metadata keyed by autocorrelation bit string, for words of
# length up to 4 whose sequences have a catalogued recurrence.
KNOWN_SEQUENCES: dict[str, RecurrenceSpec] = {
    "1": RecurrenceSpec("A000012", "all ones", ((1, 1),)),
    "11": RecurrenceSpec("A000045", "Fibonacci numbers", ((1, 1), (2, 1))),
    "10": RecurrenceSpec("A001477", "whole numbers", ((1, 2), (2, -1))),
    "111": RecurrenceSpec("A000073", "tribonacci numbers", ((1, 1), (2, 1), (3, 1))),
    "100": RecurrenceSpec("A000071", "Fibonacci numbers minus 1", ((1, 2), (3, -1))),
    "101": RecurrenceSpec("A005314", None, ((1, 1), (2, 1), (4, 1))),
    "1111": RecurrenceSpec(
        "A000078", "tetranacci numbers", ((1, 1), (2, 1), (3, 1), (4, 1))
    ),
    "1000": RecurrenceSpec(
        "A008937", "partial sums of tribonacci numbers", ((1, 2), (4, -1))
    ),
}


def recurrence_for(word: Word) -> RecurrenceSpec | None:
    """Catalogued recurrence for the word's autocorrelation class, if any."""
    return KNOWN_SEQUENCES.get(autocorrelation(word).bit_string)
