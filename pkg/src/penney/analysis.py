"""Whole-table generation, best replies, cycles, and wait-time anomalies.

Cells are computed independently in a fixed lexicographic order, so
every table and report is deterministic.  Published-style tables show
only first-player words starting with H; the complementary half follows
by symmetry and can be expanded with a flag.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chains import HALF, OutcomeDistribution
from .errors import DomainError, TableSizeError
from .timing import expected_wait_time
from .variants import GameVariant, NoFlippancyResult, evaluate, no_flippancy_play
from .words import Word, all_words, autocorrelation, conway_leading_number

MAX_TABLE_N = 7
MAX_COUNTER_TABLE_N = 6


def _check_table_size(variant: GameVariant, n: int) -> None:
    if not variant.has_distribution:
        raise DomainError(
            "no_flippancy games have no probability table; use no_flippancy_grid"
        )
    if n < 2:
        raise DomainError("tables need words of length at least 2")
    bound = MAX_COUNTER_TABLE_N if variant.k > 1 else MAX_TABLE_N
    if n > bound:
        raise TableSizeError(
            f"table for {variant.label} is limited to n <= {bound}, got n = {n}"
        )


@dataclass(frozen=True)
class GameTable:
    """Exact distributions for every ordered pair of words of one length."""

    variant: GameVariant
    n: int
    cells: dict[tuple[Word, Word], OutcomeDistribution]  # key = (alice, bob)


@dataclass(frozen=True)
class BestChoiceRow:
    """All of Bob's odds-maximizing replies to one Alice word."""

    alice: Word
    best: tuple[Word, ...]
    odds: Fraction | None  # bob_win : alice_win in lowest terms; None = Alice never wins


@dataclass(frozen=True)
class AnomalyRow:
    """A pair where the player holding the longer-wait word still wins."""

    winner: str  # "alice" | "bob"
    alice: Word
    bob: Word
    waits: tuple[int, int]  # (Alice's wait, Bob's effective wait)


def full_table(variant: GameVariant, n: int) -> GameTable:
    """Every admissible ordered pair; two_coin also includes equal pairs."""
    _check_table_size(variant, n)
    words = all_words(n)
    allow_equal = variant.tag == "two_coin"
    cells = {}
    for a in words:
        for b in words:
            if a == b and not allow_equal:
                continue
            cells[(a, b)] = evaluate(variant, a, b)
    return GameTable(variant, n, cells)


def _odds_sort_key(dist: OutcomeDistribution):
    odds = dist.bob_odds
    if odds is None:
        return (1, Fraction(0))
    return (0, odds)


def best_choice_table(
    variant: GameVariant, n: int, all_alice: bool = False
) -> list[BestChoiceRow]:
    """Bob's odds-maximizing replies, all ties listed.

    Maximizes the odds ratio bob_win : alice_win, which for tie-free
    variants is the same as maximizing Bob's win probability.
    """
    table = full_table(variant, n)
    rows = []
    for a in all_words(n):
        if not all_alice and a[0] != "H":
            continue
        candidates = [(b, d) for (x, b), d in table.cells.items() if x == a and b != a]
        top = max(_odds_sort_key(d) for _, d in candidates)
        best = tuple(sorted(b for b, d in candidates if _odds_sort_key(d) == top))
        odds = next(d.bob_odds for b, d in candidates if b == best[0])
        rows.append(BestChoiceRow(a, best, odds))
    return rows


def best_response_graph(variant: GameVariant, n: int) -> dict[Word, tuple[Word, ...]]:
    """Arcs from every word to each of Bob's best replies against it."""
    return {
        row.alice: row.best for row in best_choice_table(variant, n, all_alice=True)
    }


def beats_graph(variant: GameVariant, n: int) -> dict[Word, tuple[Word, ...]]:
    """Arc x -> y exactly when y's holder beats x's holder with probability > 1/2.

    The comparison is exact; pairs at exactly 1/2 produce no arc.
    """
    table = full_table(variant, n)
    graph: dict[Word, list[Word]] = {w: [] for w in all_words(n)}
    for (a, b), dist in table.cells.items():
        if a != b and dist.bob_win > HALF:
            graph[a].append(b)
    return {w: tuple(sorted(targets)) for w, targets in graph.items()}


def find_cycles(
    graph: dict[Word, tuple[Word, ...]], max_len: int | None = None
) -> list[tuple[Word, ...]]:
    """All simple cycles up to max_len, each rotated to start at its
    smallest node, sorted by (length, nodes)."""
    if max_len is None:
        max_len = len(graph)
    order = {w: i for i, w in enumerate(sorted(graph))}
    cycles: list[tuple[Word, ...]] = []

    def dfs(start: Word, node: Word, path: list[Word], on_path: set[Word]) -> None:
        for succ in graph.get(node, ()):
            if succ == start and len(path) >= 2:
                cycles.append(tuple(path))
            elif (
                len(path) < max_len
                and succ not in on_path
                and order[succ] > order[start]
            ):
                path.append(succ)
                on_path.add(succ)
                dfs(start, succ, path, on_path)
                on_path.discard(succ)
                path.pop()

    for start in sorted(graph):
        dfs(start, start, [start], {start})
    return sorted(cycles, key=lambda c: (len(c), c))


def wait_time_anomalies(
    variant: GameVariant, n: int, all_alice: bool = False
) -> list[AnomalyRow]:
    """Ordered pairs where the longer-wait word wins with probability > 1/2.

    In the head-start game Bob's effective wait is his word's wait plus
    one flip.  By default only Alice words starting with H are reported,
    matching the published tables; the rest follow by complementation.
    """
    table = full_table(variant, n)
    bob_extra = 1 if variant.tag == "head_start" else 0
    rows = []
    for (a, b), dist in sorted(table.cells.items()):
        if a == b:
            continue
        if not all_alice and a[0] != "H":
            continue
        wait_a = expected_wait_time(a)
        wait_b = expected_wait_time(b) + bob_extra
        if dist.alice_win > HALF and wait_a > wait_b:
            rows.append(AnomalyRow("alice", a, b, (wait_a, wait_b)))
        elif dist.bob_win > HALF and wait_b > wait_a:
            rows.append(AnomalyRow("bob", a, b, (wait_a, wait_b)))
    return rows


def head_start_extreme_family(n: int) -> AnomalyRow:
    """The all-heads word against its last-character flip, head-start rules.

    Alice's wait (2^(n+1) - 2) approaches twice Bob's (2^n + 1), yet the
    winner is decided by exact evaluation, not by wait times.
    """
    if n < 3:
        raise DomainError("the extreme family needs n >= 3")
    a = Word("H" * n)
    b = Word("H" * (n - 1) + "T")
    dist = evaluate(GameVariant("head_start"), a, b)
    winner = "alice" if dist.alice_win > dist.bob_win else "bob"
    waits = (expected_wait_time(a), expected_wait_time(b) + 1)
    return AnomalyRow(winner, a, b, waits)


@dataclass(frozen=True)
class TwoCoinClassTable:
    """Two-coin distributions keyed by autocorrelation class.

    The outcome law depends only on the autocorrelation vectors, so one
    representative pair per class determines the whole table.  Labels are
    autocorrelation bit strings ordered by descending Conway number.
    """

    n: int
    labels: tuple[str, ...]
    members: dict[str, tuple[Word, ...]]
    cells: dict[tuple[str, str], OutcomeDistribution]  # key = (bob label, alice label)


def two_coin_class_table(n: int) -> TwoCoinClassTable:
    variant = GameVariant("two_coin")
    _check_table_size(variant, n)
    groups: dict[str, list[Word]] = {}
    for w in all_words(n):
        groups.setdefault(autocorrelation(w).bit_string, []).append(w)
    labels = tuple(sorted(groups, key=lambda s: -int(s, 2)))
    members = {label: tuple(sorted(ws)) for label, ws in groups.items()}
    cells = {}
    for bob_label in labels:
        for alice_label in labels:
            a = members[alice_label][0]
            b = members[bob_label][0]
            cells[(bob_label, alice_label)] = evaluate(variant, a, b)
    return TwoCoinClassTable(n, labels, members, cells)


def no_flippancy_grid(n: int) -> dict[tuple[Word, Word], NoFlippancyResult]:
    """No-flippancy outcomes for every ordered pair of distinct words."""
    if n < 2:
        raise DomainError("grids need words of length at least 2")
    if n > MAX_TABLE_N:
        raise TableSizeError(f"grid is limited to n <= {MAX_TABLE_N}, got n = {n}")
    words = all_words(n)
    return {
        (a, b): no_flippancy_play(a, b) for a in words for b in words if a != b
    }
