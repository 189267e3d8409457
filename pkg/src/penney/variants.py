"""One exact evaluator per game variant.

All evaluators return an OutcomeDistribution of exact rationals.  The
classic game additionally has a closed form via Conway leading numbers;
the head-start and extra-toss games have closed forms on top of the
classic probabilities; everything else is solved on an absorbing chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import (
    ALICE_WIN,
    BOB_WIN,
    HALF,
    INDEPENDENT_COINS,
    ONE,
    SHARED_SEQUENCE,
    OutcomeDistribution,
    absorption_probabilities,
    build_chain,
    build_prefix_automaton,
    product_chain,
)
from .errors import ChainError, DomainError, LengthMismatchError, UnknownVariantError
from .words import Word, conway_leading_number, correlation

VARIANT_TAGS = (
    "classic",
    "head_start",
    "post_a_bobalyptic",
    "kth_occurrence",
    "two_coin",
    "no_flippancy",
    "blended",
)

# Variants whose distribution is invariant under exchanging the players.
SYMMETRIC_TAGS = ("classic", "kth_occurrence", "two_coin", "blended")


@dataclass(frozen=True)
class GameVariant:
    """A game tag plus the occurrence counter k (meaningful for kth_occurrence)."""

    tag: str
    k: int = 1

    def __post_init__(self) -> None:
        if self.tag not in VARIANT_TAGS:
            raise UnknownVariantError(f"unknown variant {self.tag!r}")
        if self.k < 1:
            raise DomainError("occurrence counter k must be at least 1")
        if self.tag != "kth_occurrence" and self.k != 1:
            raise DomainError(f"variant {self.tag!r} does not take a counter")

    @classmethod
    def parse(cls, name: str, k: int | None = None) -> "GameVariant":
        key = name.strip().lower().replace("-", "_")
        if key == "second_occurrence":
            if k not in (None, 2):
                raise DomainError("second_occurrence fixes k = 2")
            return cls("kth_occurrence", 2)
        if key == "kth_occurrence":
            return cls("kth_occurrence", 2 if k is None else k)
        if key in VARIANT_TAGS:
            if k not in (None, 1):
                raise DomainError(f"variant {key!r} does not take a counter")
            return cls(key)
        raise UnknownVariantError(f"unknown variant {name!r}")

    @property
    def label(self) -> str:
        if self.tag != "kth_occurrence":
            return self.tag
        return "second_occurrence" if self.k == 2 else f"kth_occurrence(k={self.k})"

    @property
    def is_randomized(self) -> bool:
        return self.tag != "no_flippancy"

    @property
    def is_symmetric(self) -> bool:
        return self.tag in SYMMETRIC_TAGS

    @property
    def has_distribution(self) -> bool:
        return self.tag != "no_flippancy"


def _require_pair(a: Word, b: Word, allow_equal: bool = False) -> None:
    if len(a) != len(b):
        raise LengthMismatchError(
            f"words must have equal lengths, got {len(a)} and {len(b)}"
        )
    if not allow_equal and a == b:
        raise DomainError(f"words must differ, both are {a}")


def classic_odds(a: Word, b: Word) -> Fraction:
    """Bob's odds via the correlation formula.

    With C_xy the Conway leading number of the correlation of x against
    y, Bob's odds are (C_aa - C_ab) / (C_bb - C_ba); his win probability
    is odds / (1 + odds).
    """
    _require_pair(a, b)
    c_aa = conway_leading_number(correlation(a, a))
    c_ab = conway_leading_number(correlation(a, b))
    c_bb = conway_leading_number(correlation(b, b))
    c_ba = conway_leading_number(correlation(b, a))
    return Fraction(c_aa - c_ab, c_bb - c_ba)


def classic_probabilities(a: Word, b: Word) -> OutcomeDistribution:
    """One shared coin; the first word to appear wins.  No ties."""
    _require_pair(a, b)
    chain = product_chain(
        build_prefix_automaton(a), build_prefix_automaton(b), SHARED_SEQUENCE
    )
    return absorption_probabilities(chain)


def best_response(a: Word) -> Word:
    """The published reply rule: flip the opponent's second character and
    prepend it to their first n-1 characters.

    For words of length 3 this is the unique odds-maximizing reply.  For
    longer words the unique optimum always has this prepend shape but
    sometimes needs the other leading character (HHTH is the smallest
    case: HHHT wins 2/3 while this rule's THHT wins only 7/12).
    """
    if len(a) < 2:
        raise DomainError("best response needs a word of length at least 2")
    flipped = "T" if a[1] == "H" else "H"
    return Word(flipped + a.text[:-1])


def head_start_probabilities(a: Word, b: Word) -> OutcomeDistribution:
    """Alice wins outright when her word opens the game; otherwise a
    fresh classic race decides.

    With p the classic Alice win probability, Alice's chance becomes
    p + (1 - p) / 2^n and Bob's becomes (1 - p)(1 - 1/2^n), so Bob's
    probabilities are proportional to the classic ones and his best
    reply is unchanged.
    """
    _require_pair(a, b)
    n = len(a)
    p = classic_probabilities(a, b).alice_win
    bonus = Fraction(1, 2**n)
    return OutcomeDistribution(
        alice_win=p + (1 - p) * bonus,
        bob_win=(1 - p) * (1 - bonus),
    )


def head_start_chain_probabilities(a: Word, b: Word) -> OutcomeDistribution:
    """Head-start game solved directly on a chain, as a cross-check.

    An opening phase tracks whether the flips so far still match Alice's
    word exactly; the first mismatch hands over to a fresh classic race,
    whose law does not depend on the discarded opening flips.
    """
    _require_pair(a, b)
    aut_a = build_prefix_automaton(a)
    aut_b = build_prefix_automaton(b)
    n = len(a)
    a_bits = tuple(0 if ch == "H" else 1 for ch in a)
    da, db = aut_a.delta, aut_b.delta

    def expand(state):
        kind = state[0]
        out = []
        if kind == "open":
            matched = state[1]
            for bit in (0, 1):
                if bit == a_bits[matched]:
                    succ = ALICE_WIN if matched + 1 == n else ("open", matched + 1)
                else:
                    succ = ("race", 0, 0)
                out.append((HALF, succ))
            return out
        _, ia, ib = state
        for bit in (0, 1):
            ja, jb = da[ia][bit], db[ib][bit]
            if ja == n and jb == n:
                raise ChainError("distinct words completed together")
            if ja == n:
                out.append((HALF, ALICE_WIN))
            elif jb == n:
                out.append((HALF, BOB_WIN))
            else:
                out.append((HALF, ("race", ja, jb)))
        return out

    return absorption_probabilities(build_chain(("open", 0), expand))


def _post_overlap(a: Word, b: Word) -> bool:
    n = len(a)
    return a.text[: n - 1] == b.text[1:]


def post_a_bobalyptic_probabilities(a: Word, b: Word) -> OutcomeDistribution:
    """Alice gets one extra flip when Bob finishes first.

    The extra flip can complete Alice's word only when her length-(n-1)
    prefix equals Bob's length-(n-1) suffix, and then it does so with
    probability 1/2: half of Bob's classic wins become ties.
    """
    _require_pair(a, b)
    base = classic_probabilities(a, b)
    if not _post_overlap(a, b):
        return base
    shared = base.bob_win / 2
    return OutcomeDistribution(alice_win=base.alice_win, bob_win=shared, tie=shared)


def kth_occurrence_probabilities(a: Word, b: Word, k: int) -> OutcomeDistribution:
    """First player whose word appears k times (overlaps counted) wins."""
    _require_pair(a, b)
    if k < 1:
        raise DomainError("occurrence counter k must be at least 1")
    chain = product_chain(
        build_prefix_automaton(a),
        build_prefix_automaton(b),
        SHARED_SEQUENCE,
        counters=(k, k),
    )
    return absorption_probabilities(chain)


def two_coin_probabilities(a: Word, b: Word) -> OutcomeDistribution:
    """Each player flips their own coin; simultaneous completion ties.

    The outcome law depends only on the two autocorrelation vectors,
    since the streams never interact.  Equal words are allowed.
    """
    _require_pair(a, b, allow_equal=True)
    chain = product_chain(
        build_prefix_automaton(a), build_prefix_automaton(b), INDEPENDENT_COINS
    )
    return absorption_probabilities(chain)


def blended_probabilities(a: Word, b: Word) -> OutcomeDistribution:
    """Both players name their wanted next outcome; agreement stands,
    disagreement is settled by a fair flip.  First word to appear wins.

    Each player's wanted character extends their current longest matched
    prefix, exactly as in the no-flippancy game.
    """
    _require_pair(a, b)
    aut_a = build_prefix_automaton(a)
    aut_b = build_prefix_automaton(b)
    n = len(a)
    da, db = aut_a.delta, aut_b.delta
    a_bits = tuple(0 if ch == "H" else 1 for ch in a)
    b_bits = tuple(0 if ch == "H" else 1 for ch in b)

    def successor(ia, ib, bit):
        ja, jb = da[ia][bit], db[ib][bit]
        if ja == n and jb == n:
            raise ChainError("distinct words completed together")
        if ja == n:
            return ALICE_WIN
        if jb == n:
            return BOB_WIN
        return (ja, jb)

    def expand(state):
        ia, ib = state
        want_a, want_b = a_bits[ia], b_bits[ib]
        if want_a == want_b:
            return [(ONE, successor(ia, ib, want_a))]
        return [(HALF, successor(ia, ib, 0)), (HALF, successor(ia, ib, 1))]

    return absorption_probabilities(build_chain((0, 0), expand))


@dataclass(frozen=True)
class NoFlippancyTurn:
    """One deterministic move: who played, what, and both progresses after."""

    turn: int
    mover: str
    char: str
    progress: tuple[int, int]


@dataclass(frozen=True)
class NoFlippancyResult:
    """Outcome of a deterministic no-flippancy game.

    Finite games carry the full output word and the number of turns.
    Infinite games carry the eventually-periodic output as a preperiod
    plus a minimal repeating period.
    """

    outcome: str  # "alice" | "bob" | "tie_infinite"
    output: Word | None
    preperiod: str
    period: str
    turns: int | None
    trace: tuple[NoFlippancyTurn, ...]

    @property
    def is_infinite(self) -> bool:
        return self.outcome == "tie_infinite"

    def display_output(self, repetitions: int = 3) -> str:
        """Output as printed in result tables; infinite games get dots."""
        if not self.is_infinite:
            return str(self.output)
        return self.preperiod + self.period * repetitions + "..."


def _canonical_periodic(preperiod: str, period: str) -> tuple[str, str]:
    # Rotate trailing agreement out of the preperiod, then minimize the period.
    while preperiod and preperiod[-1] == period[-1]:
        preperiod = preperiod[:-1]
        period = period[-1] + period[:-1]
    for d in range(1, len(period) + 1):
        if len(period) % d == 0 and period == period[:d] * (len(period) // d):
            return preperiod, period[:d]
    return preperiod, period


def no_flippancy_play(a: Word, b: Word) -> NoFlippancyResult:
    """Play the coinless game: players alternate (Alice first), each
    emitting the character that extends their own longest matched prefix.

    Ends when either word appears as a suffix of the output; a repeated
    (progress, progress, mover) state proves the game is infinite.
    """
    _require_pair(a, b)
    aut_a = build_prefix_automaton(a)
    aut_b = build_prefix_automaton(b)
    n = len(a)
    ia = ib = 0
    chars: list[str] = []
    trace: list[NoFlippancyTurn] = []
    seen: dict[tuple[int, int, int], int] = {}
    while True:
        mover = len(chars) % 2  # 0 = Alice, 1 = Bob
        key = (ia, ib, mover)
        if key in seen:
            t0 = seen[key]
            pre, per = _canonical_periodic("".join(chars[:t0]), "".join(chars[t0:]))
            return NoFlippancyResult(
                "tie_infinite", None, pre, per, None, tuple(trace)
            )
        seen[key] = len(chars)
        ch = a[ia] if mover == 0 else b[ib]
        ia = aut_a.step(ia, ch)
        ib = aut_b.step(ib, ch)
        chars.append(ch)
        trace.append(
            NoFlippancyTurn(len(chars), "alice" if mover == 0 else "bob", ch, (ia, ib))
        )
        if ia == n or ib == n:
            winner = "alice" if ia == n else "bob"
            return NoFlippancyResult(
                winner, Word("".join(chars)), "", "", len(chars), tuple(trace)
            )


_EVALUATORS = {
    "classic": classic_probabilities,
    "head_start": head_start_probabilities,
    "post_a_bobalyptic": post_a_bobalyptic_probabilities,
    "two_coin": two_coin_probabilities,
    "blended": blended_probabilities,
}


def evaluate(variant: GameVariant, a: Word, b: Word) -> OutcomeDistribution:
    """Exact outcome distribution of one game instance."""
    if variant.tag == "no_flippancy":
        raise DomainError(
            "no_flippancy is deterministic and has no distribution; use no_flippancy_play"
        )
    if variant.tag == "kth_occurrence":
        return kth_occurrence_probabilities(a, b, variant.k)
    return _EVALUATORS[variant.tag](a, b)
