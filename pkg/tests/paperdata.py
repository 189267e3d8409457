"""Published reference tables, frozen as test oracles.

Probability tables are keyed (bob, alice) as in the source layout: the
column word belongs to Alice, the row word to Bob, and single values are
Bob's win probability.  Triples are (bob_win, alice_win, tie).
"""

from fractions import Fraction as F

ALICE3 = ("HHH", "HHT", "HTH", "HTT")
WORDS3 = ("HHH", "HHT", "HTH", "HTT", "THH", "THT", "TTH", "TTT")


def _grid(rows, cells):
    table = {}
    for bob, line in zip(rows, cells):
        for alice, value in zip(ALICE3, line):
            if value is not None:
                table[(bob, alice)] = value
    return table


# Classic game, Bob's win probabilities.
CLASSIC_BOB_WINS = _grid(
    WORDS3,
    [
        [None, F(1, 2), F(2, 5), F(2, 5)],
        [F(1, 2), None, F(2, 3), F(2, 3)],
        [F(3, 5), F(1, 3), None, F(1, 2)],
        [F(3, 5), F(1, 3), F(1, 2), None],
        [F(7, 8), F(3, 4), F(1, 2), F(1, 2)],
        [F(7, 12), F(3, 8), F(1, 2), F(1, 2)],
        [F(7, 10), F(1, 2), F(5, 8), F(1, 4)],
        [F(1, 2), F(3, 10), F(5, 12), F(1, 8)],
    ],
)

# Classic game, Bob's best replies and odds.
CLASSIC_BEST = {
    "HHH": (("THH",), F(7, 1)),
    "HHT": (("THH",), F(3, 1)),
    "HTH": (("HHT",), F(2, 1)),
    "HTT": (("HHT",), F(2, 1)),
}

# Head-start game, Bob's win probabilities.
HEAD_START_BOB_WINS = _grid(
    WORDS3,
    [
        [None, F(7, 16), F(7, 20), F(7, 20)],
        [F(7, 16), None, F(7, 12), F(7, 12)],
        [F(21, 40), F(7, 24), None, F(7, 16)],
        [F(21, 40), F(7, 24), F(7, 16), None],
        [F(49, 64), F(21, 32), F(7, 16), F(7, 16)],
        [F(49, 96), F(21, 64), F(7, 16), F(7, 16)],
        [F(49, 80), F(7, 16), F(35, 64), F(7, 32)],
        [F(7, 16), F(21, 80), F(35, 96), F(7, 64)],
    ],
)

HEAD_START_BEST = {
    "HHH": (("THH",), F(49, 15)),
    "HHT": (("THH",), F(21, 11)),
    "HTH": (("HHT",), F(7, 5)),
    "HTT": (("HHT",), F(7, 5)),
}

# Head-start anomalies: (winner, alice, bob, (alice wait, bob wait + 1)).
HEAD_START_ANOMALIES = {
    ("alice", "HTH", "THH", (10, 9)),
    ("bob", "HHT", "THH", (8, 9)),
    ("alice", "HTH", "HTT", (10, 9)),
    ("bob", "HTT", "HHT", (8, 9)),
    ("alice", "HHH", "HHT", (14, 9)),
}

# Extra-toss game, (bob_win, alice_win, tie) triples.
POST_TRIPLES = _grid(
    WORDS3,
    [
        [None, (F(1, 4), F(1, 2), F(1, 4)), (F(2, 5), F(3, 5), F(0)), (F(2, 5), F(3, 5), F(0))],
        [(F(1, 2), F(1, 2), F(0)), None, (F(1, 3), F(1, 3), F(1, 3)), (F(1, 3), F(1, 3), F(1, 3))],
        [(F(3, 5), F(2, 5), F(0)), (F(1, 3), F(2, 3), F(0)), None, (F(1, 2), F(1, 2), F(0))],
        [(F(3, 5), F(2, 5), F(0)), (F(1, 3), F(2, 3), F(0)), (F(1, 2), F(1, 2), F(0)), None],
        [(F(7, 16), F(1, 8), F(7, 16)), (F(3, 8), F(1, 4), F(3, 8)), (F(1, 2), F(1, 2), F(0)), (F(1, 2), F(1, 2), F(0))],
        [(F(7, 12), F(5, 12), F(0)), (F(3, 8), F(5, 8), F(0)), (F(1, 4), F(1, 2), F(1, 4)), (F(1, 4), F(1, 2), F(1, 4))],
        [(F(7, 10), F(3, 10), F(0)), (F(1, 2), F(1, 2), F(0)), (F(5, 8), F(3, 8), F(0)), (F(1, 4), F(3, 4), F(0))],
        [(F(1, 2), F(1, 2), F(0)), (F(3, 10), F(7, 10), F(0)), (F(5, 12), F(7, 12), F(0)), (F(1, 8), F(7, 8), F(0))],
    ],
)

# Extra-toss game, Bob's odds of victory (bob_win : alice_win).
POST_ODDS = _grid(
    WORDS3,
    [
        [None, (1, 2), (2, 3), (2, 3)],
        [(1, 1), None, (1, 1), (1, 1)],
        [(3, 2), (1, 2), None, (1, 1)],
        [(3, 2), (1, 2), (1, 1), None],
        [(7, 2), (3, 2), (1, 1), (1, 1)],
        [(7, 5), (3, 5), (1, 2), (1, 2)],
        [(7, 3), (1, 1), (5, 3), (1, 3)],
        [(1, 1), (3, 7), (5, 7), (1, 7)],
    ],
)

POST_BEST = {
    "HHH": (("THH",), F(7, 2)),
    "HHT": (("THH",), F(3, 2)),
    "HTH": (("TTH",), F(5, 3)),
    "HTT": (("HHT", "HTH", "THH"), F(1, 1)),
}

# Extra-toss anomalies for n = 4.
POST_N4_ANOMALIES = {
    ("alice", "HTTH", "TTHH", (18, 16)),
    ("alice", "HTHT", "THTT", (20, 18)),
    ("alice", "HTHH", "THHH", (18, 16)),
    ("bob", "HHTT", "HTHH", (16, 18)),
    ("alice", "HTHH", "HHTT", (18, 16)),
}

# Second-occurrence game, Bob's win probabilities.
SECOND_OCC_BOB_WINS = _grid(
    WORDS3,
    [
        [None, F(1, 2), F(56, 125), F(56, 125)],
        [F(1, 2), None, F(16, 27), F(16, 27)],
        [F(69, 125), F(11, 27), None, F(1, 2)],
        [F(69, 125), F(11, 27), F(1, 2), None],
        [F(11, 16), F(3, 4), F(1, 2), F(1, 2)],
        [F(59, 108), F(7, 16), F(1, 2), F(1, 2)],
        [F(151, 250), F(1, 2), F(9, 16), F(1, 4)],
        [F(1, 2), F(99, 250), F(49, 108), F(5, 16)],
    ],
)

SECOND_OCC_BEST = {
    "HHH": (("THH",), F(11, 5)),
    "HHT": (("THH",), F(3, 1)),
    "HTH": (("HHT",), F(16, 11)),
    "HTT": (("HHT",), F(16, 11)),
}

# Two-coin game by autocorrelation class, key (bob class, alice class),
# value (bob_win, alice_win, tie).
TWO_COIN_CLASSES = {
    ("111", "111"): (F(435, 913), F(435, 913), F(43, 913)),
    ("111", "101"): (F(3289, 8691), F(1643, 2897), F(473, 8691)),
    ("111", "100"): (F(23327, 73057), F(45409, 73057), F(4321, 73057)),
    ("101", "111"): (F(1643, 2897), F(3289, 8691), F(473, 8691)),
    ("101", "101"): (F(487, 1045), F(487, 1045), F(71, 1045)),
    ("101", "100"): (F(22431, 55265), F(28673, 55265), F(4161, 55265)),
    ("100", "111"): (F(45409, 73057), F(23327, 73057), F(4321, 73057)),
    ("100", "101"): (F(28673, 55265), F(22431, 55265), F(4161, 55265)),
    ("100", "100"): (F(377, 825), F(377, 825), F(71, 825)),
}

# Two-coin approximations as printed, two significant digits.  The
# published (111, 101) tie entry reads ".055", a one-off rounding slip:
# the identical fraction 473/8691 = 0.05442... is printed ".054" in the
# mirror cell, which is the correct round-half-even rendering used here.
TWO_COIN_APPROX = {
    ("111", "111"): (".48", ".48", ".047"),
    ("111", "101"): (".38", ".57", ".054"),
    ("111", "100"): (".32", ".62", ".059"),
    ("101", "111"): (".57", ".38", ".054"),
    ("101", "101"): (".47", ".47", ".068"),
    ("101", "100"): (".41", ".52", ".075"),
    ("100", "111"): (".62", ".32", ".059"),
    ("100", "101"): (".52", ".41", ".075"),
    ("100", "100"): (".46", ".46", ".086"),
}

TWO_COIN_MEMBERS = {
    "111": ("HHH", "TTT"),
    "101": ("HTH", "THT"),
    "100": ("HHT", "HTT", "THH", "TTH"),
}

# No-flippancy outputs and results for distinct pairs, keyed (bob, alice).
# Finite cells: (output, winner, turns).  Infinite cells: (display, None, None).
NO_FLIPPANCY_CELLS = {
    ("HHH", "HHT"): ("HHT", "alice", 3),
    ("HHH", "HTH"): ("HHTH", "alice", 4),
    ("HHH", "HTT"): ("HHTHTHT...", None, None),
    ("HHT", "HHH"): ("HHH", "alice", 3),
    ("HHT", "HTH"): ("HHT", "bob", 3),
    ("HHT", "HTT"): ("HHT", "bob", 3),
    ("HTH", "HHH"): ("HTH", "bob", 3),
    ("HTH", "HHT"): ("HTH", "bob", 3),
    ("HTH", "HTT"): ("HTT", "alice", 3),
    ("HTT", "HHH"): ("HTHTHT...", None, None),
    ("HTT", "HHT"): ("HTHTHT...", None, None),
    ("HTT", "HTH"): ("HTH", "alice", 3),
    ("THH", "HHH"): ("HTHH", "bob", 4),
    ("THH", "HHT"): ("HTHH", "bob", 4),
    ("THH", "HTH"): ("HTH", "alice", 3),
    ("THH", "HTT"): ("HTT", "alice", 3),
    ("THT", "HHH"): ("HTHT", "bob", 4),
    ("THT", "HHT"): ("HTHT", "bob", 4),
    ("THT", "HTH"): ("HTH", "alice", 3),
    ("THT", "HTT"): ("HTT", "alice", 3),
    ("TTH", "HHH"): ("HTHTHT...", None, None),
    ("TTH", "HHT"): ("HTHTHT...", None, None),
    ("TTH", "HTH"): ("HTH", "alice", 3),
    ("TTH", "HTT"): ("HTT", "alice", 3),
    ("TTT", "HHH"): ("HTHTHT...", None, None),
    ("TTT", "HHT"): ("HTHTHT...", None, None),
    ("TTT", "HTH"): ("HTH", "alice", 3),
    ("TTT", "HTT"): ("HTT", "alice", 3),
}

# Blended game, Bob's win probabilities.
BLENDED_BOB_WINS = _grid(
    WORDS3,
    [
        [None, F(1, 2), F(1, 4), F(2, 5)],
        [F(1, 2), None, F(1, 2), F(2, 3)],
        [F(3, 4), F(1, 2), None, F(1, 2)],
        [F(3, 5), F(1, 3), F(1, 2), None],
        [F(7, 8), F(3, 4), F(1, 4), F(1, 2)],
        [F(7, 12), F(3, 8), F(1, 2), F(3, 4)],
        [F(7, 10), F(1, 2), F(5, 8), F(1, 4)],
        [F(1, 2), F(3, 10), F(5, 12), F(1, 8)],
    ],
)

BLENDED_BEST = {
    "HHH": (("THH",), F(7, 1)),
    "HHT": (("THH",), F(3, 1)),
    "HTH": (("TTH",), F(5, 3)),
    "HTT": (("THT",), F(3, 1)),
}

# First-timer sequences by autocorrelation class (a_1..a_9) and the
# catalogued OEIS recurrences.
FIRST_TIMER_ROWS = {
    "1": (1, 1, 1, 1, 1, 1, 1, 1, 1),
    "11": (0, 1, 1, 2, 3, 5, 8, 13, 21),
    "10": (0, 1, 2, 3, 4, 5, 6, 7, 8),
    "111": (0, 0, 1, 1, 2, 4, 7, 13, 24),
    "100": (0, 0, 1, 2, 4, 7, 12, 20, 33),
    "101": (0, 0, 1, 2, 3, 5, 9, 16, 28),
    "1111": (0, 0, 0, 1, 1, 2, 4, 8, 15),
    "1000": (0, 0, 0, 1, 2, 4, 8, 15, 28),
}

OEIS_IDS = {
    "1": "A000012",
    "11": "A000045",
    "10": "A001477",
    "111": "A000073",
    "100": "A000071",
    "101": "A005314",
    "1111": "A000078",
    "1000": "A008937",
}

# Members of each class among words of length <= 4 that the catalogue
# covers ("1000" lists the six length-4 words; the published row also
# prints a stray 3-letter "HHT" where HHTT is meant).
CLASS_MEMBERS = {
    "1": ("H", "T"),
    "11": ("HH", "TT"),
    "10": ("HT", "TH"),
    "111": ("HHH", "TTT"),
    "100": ("HHT", "HTT", "THH", "TTH"),
    "101": ("HTH", "THT"),
    "1111": ("HHHH", "TTTT"),
    "1000": ("HHHT", "HHTT", "HTTT", "TTTH", "TTHH", "THHH"),
}
