#!/usr/bin/env python3
"""Regenerate every published-style table and report on stdout.

Runs the CLI in-process, one section per game variant: full probability
grids, best replies, wait-time anomalies, and non-transitive cycles.
"""

import sys

from penney import cli

SECTIONS = [
    ("Classic game, Bob's win probabilities (n=3)",
     ["table", "--variant", "classic", "--n", "3"]),
    ("Classic game, Bob's best replies (n=3)",
     ["best", "--variant", "classic", "--n", "3"]),
    ("Classic game, beats-graph cycles (n=3)",
     ["cycles", "--variant", "classic", "--n", "3", "--graph", "beats"]),
    ("Head-start game, Bob's win probabilities (n=3)",
     ["table", "--variant", "head_start", "--n", "3"]),
    ("Head-start game, Bob's best replies (n=3)",
     ["best", "--variant", "head_start", "--n", "3"]),
    ("Head-start game, longer wait still wins (n=3)",
     ["anomalies", "--variant", "head_start", "--n", "3"]),
    ("Extra-toss game, outcome triples (n=3)",
     ["table", "--variant", "post_a_bobalyptic", "--n", "3"]),
    ("Extra-toss game, Bob's best replies (n=3)",
     ["best", "--variant", "post_a_bobalyptic", "--n", "3"]),
    ("Extra-toss game, longer wait still wins (n=4)",
     ["anomalies", "--variant", "post_a_bobalyptic", "--n", "4"]),
    ("Second-occurrence game, Bob's win probabilities (n=3)",
     ["table", "--variant", "second_occurrence", "--n", "3"]),
    ("Second-occurrence game, Bob's best replies (n=3)",
     ["best", "--variant", "second_occurrence", "--n", "3"]),
    ("Two-coin game, outcomes by autocorrelation class (n=3)",
     ["table", "--variant", "two_coin", "--n", "3", "--approx"]),
    ("No-flippancy game, outputs and results (n=3)",
     ["table", "--variant", "no_flippancy", "--n", "3"]),
    ("Blended game, Bob's win probabilities (n=3)",
     ["table", "--variant", "blended", "--n", "3"]),
    ("Blended game, Bob's best replies (n=3)",
     ["best", "--variant", "blended", "--n", "3"]),
    ("Blended game, best-reply cycles (n=3)",
     ["cycles", "--variant", "blended", "--n", "3", "--graph", "best"]),
    ("First-timer sequence and catalogue row for HHT",
     ["sequence", "HHT", "--terms", "9"]),
    ("Expected wait time examples",
     ["waittime", "HHTTHH"]),
]


def main() -> int:
    for title, args in SECTIONS:
        print("=" * 72)
        print(title)
        print("=" * 72)
        code = cli.main(args)
        if code != 0:
            return code
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())
