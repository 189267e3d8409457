from fractions import Fraction

import pytest

from oracles import brute_force_first_timers
from paperdata import CLASS_MEMBERS, FIRST_TIMER_ROWS, OEIS_IDS
from penney.errors import DomainError
from penney.timing import (
    KNOWN_SEQUENCES,
    RecurrenceSpec,
    expected_wait_time,
    first_occurrence_probability,
    first_timer_sequence,
    generating_function_at,
    generating_function_coefficients,
    recurrence_for,
    verify_recurrence,
)
from penney.words import Word, all_words, is_self_overlapping


def test_ht_counts_are_whole_numbers():
    seq = first_timer_sequence(Word("HT"), 12)
    assert seq.terms == tuple(i - 1 for i in range(1, 13))


def test_published_class_rows():
    for label, members in CLASS_MEMBERS.items():
        for text in members:
            if len(text) != len(label):
                continue  # the catalogue row prints a stray short word
            seq = first_timer_sequence(Word(text), 9)
            assert seq.terms == FIRST_TIMER_ROWS[label], text


def test_first_occurrence_probabilities():
    assert first_occurrence_probability(Word("HT"), 4) == Fraction(3, 16)
    assert first_occurrence_probability(Word("HHT"), 2) == 0
    # Frozen from the brute-force count of length-5 strings below.
    assert first_occurrence_probability(Word("HHH"), 5) == Fraction(1, 16)
    assert brute_force_first_timers("HHH", 5)[4] == 2


def test_generating_function_matches_counts():
    for n in range(1, 7):
        for w in all_words(n):
            assert tuple(generating_function_coefficients(w, 14)) == first_timer_sequence(w, 14).terms


def test_hht_generating_function_closed_form():
    # x^2 / ((1 - x - x^2)(1 - x)) expanded from index 0 equals the
    # HHT counts read from index 1.
    den = [1, -2, 0, 1]  # (1 - x - x^2)(1 - x)
    series = []
    for j in range(9):
        s = 1 if j == 2 else 0
        for lag in range(1, min(j, 3) + 1):
            s -= den[lag] * series[j - lag]
        series.append(s)
    assert series == [0, 0, 1, 2, 4, 7, 12, 20, 33][:9]
    assert generating_function_coefficients(Word("HHT"), 9) == [0, 0, 1, 2, 4, 7, 12, 20, 33]


def test_generating_function_total_probability():
    for w in [Word("HT"), Word("HHT"), Word("THH"), Word("HTHH")]:
        assert generating_function_at(w, Fraction(1, 2)) == 1


def test_wait_times():
    assert expected_wait_time(Word("HHH")) == 14
    assert expected_wait_time(Word("HTH")) == 10
    assert expected_wait_time(Word("HHT")) == 8
    assert expected_wait_time(Word("HTT")) == 8
    assert expected_wait_time(Word("HT")) == 4
    assert expected_wait_time(Word("HH")) == 6
    for n in range(1, 8):
        assert expected_wait_time(Word("H" * n)) == 2 ** (n + 1) - 2
    for n in range(1, 7):
        for w in all_words(n):
            if not is_self_overlapping(w):
                assert expected_wait_time(w) == 2**n


def test_partial_sums_stay_below_one_and_increase():
    for w in [Word("HH"), Word("HTH"), Word("HHTT")]:
        seq = first_timer_sequence(w, 16)
        running = Fraction(0)
        for i, a in enumerate(seq.terms, start=1):
            nxt = running + Fraction(a, 2**i)
            assert running <= nxt < 1
            running = nxt


def test_catalogued_recurrences_verify():
    for label, members in CLASS_MEMBERS.items():
        spec = KNOWN_SEQUENCES[label]
        assert spec.oeis_id == OEIS_IDS[label]
        word = Word(members[0])
        assert verify_recurrence(first_timer_sequence(word, 16), spec)


def test_wrong_recurrence_fails():
    fib = KNOWN_SEQUENCES["11"]
    assert not verify_recurrence(first_timer_sequence(Word("HT"), 12), fib)


def test_recurrence_needs_enough_terms():
    with pytest.raises(DomainError):
        verify_recurrence(first_timer_sequence(Word("HTH"), 4), KNOWN_SEQUENCES["101"])


def test_recurrence_formula_rendering():
    assert KNOWN_SEQUENCES["100"].formula() == "a(n) = 2a(n-1) - a(n-3)"
    assert KNOWN_SEQUENCES["11"].formula() == "a(n) = a(n-1) + a(n-2)"


def test_recurrence_lookup_only_covers_catalogued_classes():
    assert recurrence_for(Word("HHT")).oeis_id == "A000071"
    assert recurrence_for(Word("HHTH")) is None  # class 1001 has no row


def test_uniform_words_satisfy_n_step_recurrence():
    for n in range(1, 6):
        spec = RecurrenceSpec("", None, tuple((lag, 1) for lag in range(1, n + 1)))
        assert verify_recurrence(first_timer_sequence(Word("H" * n), 16), spec)


def test_non_overlapping_counts_are_partial_sums():
    # For a non-self-overlapping word of length n, a_i equals the sum of
    # the first i-1 counts of the all-heads word of length n-1.
    for n in range(2, 6):
        base = first_timer_sequence(Word("H" * (n - 1)), 15).terms
        for w in all_words(n):
            if is_self_overlapping(w):
                continue
            seq = first_timer_sequence(w, 16).terms
            for i in range(1, 17):
                assert seq[i - 1] == sum(base[: i - 1]), (w, i)


def test_brute_force_agreement_small():
    for n in range(1, 4):
        for w in all_words(n):
            assert list(first_timer_sequence(w, 10).terms) == brute_force_first_timers(w.text, 10)


def test_sequence_requires_enough_terms():
    with pytest.raises(DomainError):
        first_timer_sequence(Word("HHTT"), 3)
