"""Exact absorbing-chain engine built on prefix automata.

Every game evaluator reduces to a finite absorbing Markov chain whose
transition probabilities are exact rationals.  States are discovered
lazily by forward reachability from the start state, and absorption
probabilities come from solving (I - Q) x = b with Fraction arithmetic,
so repeated solves of the same chain give identical lowest-term results.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Hashable, Iterable

from .errors import ChainError, DomainError, LengthMismatchError
from .words import Word

ALICE_WIN = "alice_win"
BOB_WIN = "bob_win"
TIE = "tie"
OUTCOMES = (ALICE_WIN, BOB_WIN, TIE)

SHARED_SEQUENCE = "shared-sequence"
INDEPENDENT_COINS = "independent-coins"

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
ONE = Fraction(1)

# Absorbing successors are outcome strings; transient successors are the
# caller's hashable state objects.  Internally absorbing targets get
# negative codes so a transition row is just ((target, probability), ...).
_ABSORB_CODE = {ALICE_WIN: -1, BOB_WIN: -2, TIE: -3}
_CODE_OUTCOME = {v: k for k, v in _ABSORB_CODE.items()}


@dataclass(frozen=True)
class PrefixAutomaton:
    """Longest-overlap matcher for one word.

    State i means "the longest suffix of the emitted text that is a
    prefix of the word has length i".  State n is the accept state; its
    outgoing transitions continue through the longest proper border, so
    overlapping occurrences are counted.
    """

    word: Word
    delta: tuple[tuple[int, int], ...]  # delta[state] = (on H, on T)

    @property
    def accept(self) -> int:
        return len(self.word)

    def step(self, state: int, ch: str) -> int:
        return self.delta[state][0 if ch == "H" else 1]


def build_prefix_automaton(word: Word) -> PrefixAutomaton:
    n = len(word)
    border = [0] * (n + 1)  # border[i] = longest proper border of word[:i]
    k = 0
    for i in range(1, n):
        while k and word[i] != word[k]:
            k = border[k]
        if word[i] == word[k]:
            k += 1
        border[i + 1] = k
    delta = []
    for state in range(n + 1):
        row = []
        for ch in "HT":
            s = state
            while True:
                if s < n and word[s] == ch:
                    row.append(s + 1)
                    break
                if s == 0:
                    row.append(0)
                    break
                s = border[s]
        delta.append((row[0], row[1]))
    return PrefixAutomaton(word, tuple(delta))


@dataclass(frozen=True)
class AbsorbingChain:
    """Transient states with exact out-transitions and labeled absorption.

    transitions[i] lists (target, probability) pairs for transient state
    i, where target >= 0 indexes another transient state and negative
    targets are outcome codes.  Probabilities out of every state sum to 1.
    """

    states: tuple
    transitions: tuple[tuple[tuple[int, Fraction], ...], ...]
    start: int = 0


def build_chain(
    start: Hashable,
    expand: Callable[[Hashable], Iterable[tuple[Fraction, object]]],
) -> AbsorbingChain:
    """Breadth-first chain construction from an expansion function.

    expand(state) yields (probability, successor) pairs where a successor
    is either another state or one of the outcome strings.
    """
    index: dict[Hashable, int] = {start: 0}
    order: list[Hashable] = [start]
    rows: list[tuple[tuple[int, Fraction], ...]] = []
    queue = deque([start])
    while queue:
        state = queue.popleft()
        merged: dict[int, Fraction] = {}
        total = Fraction(0)
        for prob, succ in expand(state):
            total += prob
            if isinstance(succ, str):
                code = _ABSORB_CODE[succ]
            else:
                if succ not in index:
                    index[succ] = len(order)
                    order.append(succ)
                    queue.append(succ)
                code = index[succ]
            merged[code] = merged.get(code, Fraction(0)) + prob
        if total != 1:
            raise ChainError(f"outgoing probabilities sum to {total} at {state!r}")
        rows.append(tuple(sorted(merged.items())))
    return AbsorbingChain(tuple(order), tuple(rows))


def product_chain(
    aut_a: PrefixAutomaton,
    aut_b: PrefixAutomaton,
    race_rule: str,
    counters: tuple[int, int] = (1, 1),
) -> AbsorbingChain:
    """Two-player race chain.

    shared-sequence: one fair character per step feeds both automata;
    a player absorbs when their occurrence count (overlaps included)
    reaches their counter.  Distinct equal-length words can never finish
    on the same character, which is asserted during construction.

    independent-coins: each step draws one character per player; if both
    counts complete on the same step the outcome is a tie.
    """
    na, nb = aut_a.accept, aut_b.accept
    if na != nb:
        raise LengthMismatchError(f"product chain needs equal lengths, got {na} and {nb}")
    ka, kb = counters
    if ka < 1 or kb < 1:
        raise DomainError("occurrence counters must be at least 1")
    da, db = aut_a.delta, aut_b.delta

    if race_rule == SHARED_SEQUENCE:

        def expand(state):
            ia, ib, ca, cb = state
            out = []
            for bit in (0, 1):
                ja, jb = da[ia][bit], db[ib][bit]
                xa = ca + (1 if ja == na else 0)
                xb = cb + (1 if jb == nb else 0)
                if xa == ka and xb == kb:
                    raise ChainError(
                        "both words completed on the same character; "
                        "impossible for distinct equal-length words"
                    )
                if xa == ka:
                    out.append((HALF, ALICE_WIN))
                elif xb == kb:
                    out.append((HALF, BOB_WIN))
                else:
                    out.append((HALF, (ja, jb, xa, xb)))
            return out

        return build_chain((0, 0, 0, 0), expand)

    if race_rule == INDEPENDENT_COINS:

        def expand(state):
            ia, ib, ca, cb = state
            out = []
            for bit_a in (0, 1):
                ja = da[ia][bit_a]
                xa = ca + (1 if ja == na else 0)
                for bit_b in (0, 1):
                    jb = db[ib][bit_b]
                    xb = cb + (1 if jb == nb else 0)
                    if xa == ka and xb == kb:
                        out.append((QUARTER, TIE))
                    elif xa == ka:
                        out.append((QUARTER, ALICE_WIN))
                    elif xb == kb:
                        out.append((QUARTER, BOB_WIN))
                    else:
                        out.append((QUARTER, (ja, jb, xa, xb)))
            return out

        return build_chain((0, 0, 0, 0), expand)

    raise DomainError(f"unknown race rule {race_rule!r}")


def single_word_chain(aut: PrefixAutomaton) -> AbsorbingChain:
    """Waiting chain for one word; absorption is labeled as an Alice win."""
    n = aut.accept

    def expand(state):
        (i,) = state
        out = []
        for bit in (0, 1):
            j = aut.delta[i][bit]
            out.append((HALF, ALICE_WIN if j == n else (j,)))
        return out

    return build_chain((0,), expand)


@dataclass(frozen=True)
class OutcomeDistribution:
    """Exact outcome probabilities for one game instance; sums to 1."""

    alice_win: Fraction
    bob_win: Fraction
    tie: Fraction = Fraction(0)
    infinite: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        for name in ("alice_win", "bob_win", "tie", "infinite"):
            value = getattr(self, name)
            if not isinstance(value, Fraction):
                object.__setattr__(self, name, Fraction(value))
        for name in ("alice_win", "bob_win", "tie", "infinite"):
            value = getattr(self, name)
            if value < 0 or value > 1:
                raise ChainError(f"{name}={value} is outside [0, 1]")
        total = self.alice_win + self.bob_win + self.tie + self.infinite
        if total != 1:
            raise ChainError(f"outcome masses sum to {total}, not 1")

    def swapped(self) -> "OutcomeDistribution":
        """The same distribution with the players' roles exchanged."""
        return OutcomeDistribution(
            alice_win=self.bob_win,
            bob_win=self.alice_win,
            tie=self.tie,
            infinite=self.infinite,
        )

    @property
    def bob_odds(self) -> Fraction | None:
        """Bob's odds bob_win : alice_win, or None when Alice never wins."""
        if self.alice_win == 0:
            return None
        return self.bob_win / self.alice_win


def _reaches_absorption(chain: AbsorbingChain) -> list[bool]:
    m = len(chain.transitions)
    incoming: list[list[int]] = [[] for _ in range(m)]
    seeds = []
    for i, row in enumerate(chain.transitions):
        direct = False
        for target, _ in row:
            if target < 0:
                direct = True
            else:
                incoming[target].append(i)
        if direct:
            seeds.append(i)
    reach = [False] * m
    queue = deque(seeds)
    for s in seeds:
        reach[s] = True
    while queue:
        j = queue.popleft()
        for i in incoming[j]:
            if not reach[i]:
                reach[i] = True
                queue.append(i)
    return reach


def _solve_linear(aug: list[list[Fraction]], unknowns: int) -> list[list[Fraction]]:
    """Gauss-Jordan elimination over Fractions; returns the RHS columns."""
    for col in range(unknowns):
        pivot = next(r for r in range(col, unknowns) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        reduced = aug[col]
        for r in range(unknowns):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], reduced)]
    return [row[unknowns:] for row in aug]


def _solve_outcomes(chain: AbsorbingChain) -> list[tuple[Fraction, Fraction, Fraction]]:
    """Absorption probability triple (alice, bob, tie) for every state.

    States inside closed non-absorbing classes get all-zero rows; their
    missing mass is the probability of an infinite game.
    """
    reach = _reaches_absorption(chain)
    live = [i for i, r in enumerate(reach) if r]
    pos = {i: p for p, i in enumerate(live)}
    zero = Fraction(0)
    aug = []
    for i in live:
        row = [zero] * (len(live) + 3)
        row[pos[i]] = ONE
        for target, prob in chain.transitions[i]:
            if target < 0:
                outcome = _CODE_OUTCOME[target]
                row[len(live) + OUTCOMES.index(outcome)] += prob
            elif reach[target]:
                row[pos[target]] -= prob
        aug.append(row)
    solved = _solve_linear(aug, len(live)) if live else []
    result = []
    for i in range(len(chain.transitions)):
        if reach[i]:
            a, b, t = solved[pos[i]]
            result.append((a, b, t))
        else:
            result.append((zero, zero, zero))
    return result


def absorption_probabilities(
    chain: AbsorbingChain, start: int | None = None
) -> OutcomeDistribution:
    """Exact absorption probabilities from the chain's start state."""
    s = chain.start if start is None else start
    a, b, t = _solve_outcomes(chain)[s]
    return OutcomeDistribution(alice_win=a, bob_win=b, tie=t, infinite=ONE - a - b - t)


def expected_absorption_time(chain: AbsorbingChain, start: int | None = None) -> Fraction:
    """Exact expected number of steps to absorption.

    Rejects chains that can run forever from the start state.
    """
    s = chain.start if start is None else start
    dist = absorption_probabilities(chain, s)
    if dist.infinite != 0:
        raise ChainError(f"chain has infinite-game mass {dist.infinite}; no finite mean")
    m = len(chain.transitions)
    aug = []
    for i in range(m):
        row = [Fraction(0)] * (m + 1)
        row[i] = ONE
        for target, prob in chain.transitions[i]:
            if target >= 0:
                row[target] -= prob
        row[m] = ONE
        aug.append(row)
    solved = _solve_linear(aug, m)
    return solved[s][0]
