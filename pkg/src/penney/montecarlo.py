"""Seeded Monte Carlo play of the randomized variants.

Each variant is simulated from its playing rules on raw bit streams
(pattern windows over the flip sequence), independently of the chain
engine, so agreement between empirical frequencies and the exact
distributions is a genuine cross-check.

Randomness comes from numpy's Philox counter-based generator.  Trials
are partitioned into worker chunks and worker w draws from
Philox(seed + w), so a report is a pure function of
(variant, words, trials, seed, workers).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError
from .variants import GameVariant, evaluate
from .words import Word

OUTCOME_KEYS = ("alice_win", "bob_win", "tie")

DEFAULT_FLIP_CAP = 10**6

_BLOCK = 1 << 16


def _word_int(word: Word) -> int:
    value = 0
    for ch in word:
        value = (value << 1) | (1 if ch == "H" else 0)
    return value


class _BitSource:
    """Buffered fair bits from one generator; consumption order is fixed."""

    def __init__(self, rng: np.random.Generator):
        self.rng = rng
        self.buf: list[int] = []
        self.pos = 0

    def refill(self) -> None:
        self.buf = self.rng.integers(0, 2, size=_BLOCK, dtype=np.uint8).tolist()
        self.pos = 0


def _run_stream(rng, trials, n, mask_a, mask_b, k, head_start, post_rule, cap):
    """Single shared flip sequence: classic, head_start, post, kth."""
    alice = bob = tie = aborted = 0
    wmask = (1 << n) - 1
    a_bits = [(mask_a >> (n - 1 - i)) & 1 for i in range(n)]
    src = _BitSource(rng)
    buf, pos = src.buf, src.pos
    for _ in range(trials):
        if head_start:
            opened = True
            for i in range(n):
                if pos == len(buf):
                    src.refill()
                    buf, pos = src.buf, 0
                bit = buf[pos]
                pos += 1
                if bit != a_bits[i]:
                    opened = False
                    break
            if opened:
                alice += 1
                continue
        window = 0
        flips = 0
        ca = cb = 0
        res = -1
        while flips < cap:
            if pos == len(buf):
                src.refill()
                buf, pos = src.buf, 0
            window = ((window << 1) | buf[pos]) & wmask
            pos += 1
            flips += 1
            if flips < n:
                continue
            if window == mask_a:
                ca += 1
                if ca == k:
                    res = 0
                    break
            elif window == mask_b:
                cb += 1
                if cb == k:
                    if post_rule:
                        if pos == len(buf):
                            src.refill()
                            buf, pos = src.buf, 0
                        last = ((window << 1) | buf[pos]) & wmask
                        pos += 1
                        res = 2 if last == mask_a else 1
                    else:
                        res = 1
                    break
        if res == 0:
            alice += 1
        elif res == 1:
            bob += 1
        elif res == 2:
            tie += 1
        else:
            aborted += 1
    return alice, bob, tie, aborted


def _run_two_coin(rng, trials, n, mask_a, mask_b, cap):
    """Two independent flip sequences; Alice's bit is drawn first each step."""
    alice = bob = tie = aborted = 0
    wmask = (1 << n) - 1
    src = _BitSource(rng)
    buf, pos = src.buf, src.pos
    for _ in range(trials):
        wa = wb = 0
        steps = 0
        res = -1
        while steps < cap:
            if pos + 1 >= len(buf):
                leftover = buf[pos:]
                src.refill()
                buf, pos = leftover + src.buf, 0
            wa = ((wa << 1) | buf[pos]) & wmask
            wb = ((wb << 1) | buf[pos + 1]) & wmask
            pos += 2
            steps += 1
            if steps < n:
                continue
            done_a = wa == mask_a
            done_b = wb == mask_b
            if done_a or done_b:
                res = 2 if (done_a and done_b) else (0 if done_a else 1)
                break
        if res == 0:
            alice += 1
        elif res == 1:
            bob += 1
        elif res == 2:
            tie += 1
        else:
            aborted += 1
    return alice, bob, tie, aborted


def _progress_table(word_int: int, n: int) -> list[int]:
    """Longest matched prefix as a function of the last n-1 emitted bits."""
    size = 1 << (n - 1) if n > 1 else 1
    return [_suffix_progress(w, n - 1, word_int, n) for w in range(size)]


def _suffix_progress(window: int, avail: int, word_int: int, n: int) -> int:
    for i in range(min(avail, n - 1), -1, -1):
        if (window & ((1 << i) - 1)) == (word_int >> (n - i)):
            return i
    return 0


def _run_blended(rng, trials, n, mask_a, mask_b, cap):
    """Wanted bits from each player's progress; flip only on disagreement."""
    alice = bob = tie = aborted = 0
    wmask = (1 << n) - 1
    pmask = (1 << (n - 1)) - 1 if n > 1 else 0
    prog_a = _progress_table(mask_a, n)
    prog_b = _progress_table(mask_b, n)
    src = _BitSource(rng)
    buf, pos = src.buf, src.pos
    for _ in range(trials):
        window = 0
        flips = 0
        res = -1
        while flips < cap:
            if flips >= n - 1:
                pa = prog_a[window & pmask]
                pb = prog_b[window & pmask]
            else:
                pa = _suffix_progress(window, flips, mask_a, n)
                pb = _suffix_progress(window, flips, mask_b, n)
            want_a = (mask_a >> (n - 1 - pa)) & 1
            want_b = (mask_b >> (n - 1 - pb)) & 1
            if want_a == want_b:
                bit = want_a
            else:
                if pos == len(buf):
                    src.refill()
                    buf, pos = src.buf, 0
                bit = buf[pos]
                pos += 1
            window = ((window << 1) | bit) & wmask
            flips += 1
            if flips >= n:
                if window == mask_a:
                    res = 0
                    break
                if window == mask_b:
                    res = 1
                    break
        if res == 0:
            alice += 1
        elif res == 1:
            bob += 1
        else:
            aborted += 1
    return alice, bob, tie, aborted


@dataclass(frozen=True)
class SimulationReport:
    """Empirical counts against the exact reference distribution."""

    variant: GameVariant
    alice: Word
    bob: Word
    trials: int
    seed: int
    workers: int
    flip_cap: int
    counts: dict[str, int]
    aborted: int
    frequencies: dict[str, float]
    exact: dict[str, Fraction]
    z_scores: dict[str, float | None]


def _z_score(count: int, trials: int, exact: Fraction) -> float | None:
    p = float(exact)
    if p <= 0.0 or p >= 1.0:
        return None
    emp = count / trials
    return (emp - p) / math.sqrt(p * (1.0 - p) / trials)


def simulate(
    variant: GameVariant,
    alice: Word,
    bob: Word,
    trials: int,
    seed: int,
    workers: int = 1,
    flip_cap: int = DEFAULT_FLIP_CAP,
) -> SimulationReport:
    """Play one pair for the given trials and compare with the exact law."""
    if not variant.is_randomized:
        raise DomainError(
            "no_flippancy is deterministic; use no_flippancy_play instead of simulation"
        )
    if trials < 1:
        raise DomainError("need at least one trial")
    if workers < 1:
        raise DomainError("need at least one worker")
    if len(alice) != len(bob) or (alice == bob and variant.tag != "two_coin"):
        # Re-raise through the evaluator so the error text matches the exact path.
        evaluate(variant, alice, bob)
    exact_dist = evaluate(variant, alice, bob)

    n = len(alice)
    mask_a, mask_b = _word_int(alice), _word_int(bob)
    tag = variant.tag
    totals = [0, 0, 0, 0]
    base, extra = divmod(trials, workers)
    for w in range(workers):
        chunk = base + (1 if w < extra else 0)
        if chunk == 0:
            continue
        rng = np.random.Generator(np.random.Philox(key=seed + w))
        if tag == "two_coin":
            part = _run_two_coin(rng, chunk, n, mask_a, mask_b, flip_cap)
        elif tag == "blended":
            part = _run_blended(rng, chunk, n, mask_a, mask_b, flip_cap)
        else:
            part = _run_stream(
                rng,
                chunk,
                n,
                mask_a,
                mask_b,
                variant.k,
                tag == "head_start",
                tag == "post_a_bobalyptic",
                flip_cap,
            )
        totals = [t + p for t, p in zip(totals, part)]

    counts = dict(zip(OUTCOME_KEYS, totals[:3]))
    aborted = totals[3]
    exact = {
        "alice_win": exact_dist.alice_win,
        "bob_win": exact_dist.bob_win,
        "tie": exact_dist.tie,
    }
    frequencies = {key: counts[key] / trials for key in OUTCOME_KEYS}
    z_scores = {key: _z_score(counts[key], trials, exact[key]) for key in OUTCOME_KEYS}
    return SimulationReport(
        variant=variant,
        alice=alice,
        bob=bob,
        trials=trials,
        seed=seed,
        workers=workers,
        flip_cap=flip_cap,
        counts=counts,
        aborted=aborted,
        frequencies=frequencies,
        exact=exact,
        z_scores=z_scores,
    )
