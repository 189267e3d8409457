"""Command-line front end.

Subcommands: odds, table, best, waittime, sequence, cycles, anomalies,
play, simulate.  Output is text by default; csv and json are available
where tabular.  Rationals are rendered as "p/q" in lowest terms in csv
and json, and odds as "a to b" in text.

Exit codes: 0 success, 2 usage (argparse), 3 malformed word,
4 length mismatch, 5 unknown variant, 6 oversized table, 7 other
violated precondition (equal words, wrong variant for an operation).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import analysis, montecarlo, timing
from .errors import (
    DomainError,
    LengthMismatchError,
    PenneyError,
    TableSizeError,
    UnknownVariantError,
    WordError,
)
from .variants import GameVariant, evaluate, no_flippancy_play
from .words import Word, all_words, autocorrelation, conway_leading_number

EXIT_WORD = 3
EXIT_LENGTH = 4
EXIT_VARIANT = 5
EXIT_TABLE = 6
EXIT_DOMAIN = 7


def _frac(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _odds_text(odds: Fraction | None) -> str:
    if odds is None:
        return "1 to 0"
    return f"{odds.numerator} to {odds.denominator}"


def _approx(f: Fraction, sig: int) -> str:
    """Leading-dot decimal with `sig` significant digits, half-to-even."""
    if f == 0:
        return "0"
    if f >= 1:
        return str(float(f))
    d = 1
    while f < Fraction(1, 10**d):
        d += 1
    decimals = d + sig - 1
    scaled = int(round(f, decimals) * 10**decimals)
    return "." + str(scaled).rjust(decimals, "0")


def _approx4(f: Fraction) -> str:
    if f == 0:
        return "0.0000"
    if f >= 1:
        return str(float(f))
    return "0" + _approx(f, 4)


def _variant_of(args) -> GameVariant:
    return GameVariant.parse(args.variant, getattr(args, "k", None))


def _parse_words(*texts: str) -> list[Word]:
    return [Word.parse(t) for t in texts]


def _print_grid(rows: list[list[str]]) -> None:
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())


def _cell_text(dist, with_ties: bool, approx: bool = False) -> str:
    if approx:
        if with_ties:
            return ", ".join(
                _approx(v, 2) for v in (dist.bob_win, dist.alice_win, dist.tie)
            )
        return _approx(dist.bob_win, 2)
    if with_ties:
        return ", ".join(_frac(v) for v in (dist.bob_win, dist.alice_win, dist.tie))
    return _frac(dist.bob_win)


def _distribution_json(variant: GameVariant, a: Word, b: Word, dist) -> dict:
    return {
        "variant": variant.label,
        "n": len(a),
        "alice": str(a),
        "bob": str(b),
        "alice_win": _frac(dist.alice_win),
        "bob_win": _frac(dist.bob_win),
        "tie": _frac(dist.tie),
        "infinite": _frac(dist.infinite),
    }


def cmd_odds(args) -> int:
    a, b = _parse_words(args.alice, args.bob)
    variant = _variant_of(args)
    dist = evaluate(variant, a, b)
    if args.format == "json":
        print(json.dumps(_distribution_json(variant, a, b, dist), indent=2))
        return 0
    print(f"Alice {a} vs Bob {b} ({variant.label})")
    parts = [f"Bob {_frac(dist.bob_win)}", f"Alice {_frac(dist.alice_win)}"]
    if dist.tie:
        parts.append(f"tie {_frac(dist.tie)}")
    if args.approx:
        parts = [
            f"Bob {_frac(dist.bob_win)} ({_approx4(dist.bob_win)})",
            f"Alice {_frac(dist.alice_win)} ({_approx4(dist.alice_win)})",
        ]
        if dist.tie:
            parts.append(f"tie {_frac(dist.tie)} ({_approx4(dist.tie)})")
    print(", ".join(parts) + f", odds {_odds_text(dist.bob_odds)}")
    return 0


def _alice_columns(n: int, show_all: bool) -> list[Word]:
    return [w for w in all_words(n) if show_all or w[0] == "H"]


def _table_rows(variant, n, show_all):
    table = analysis.full_table(variant, n)
    cols = _alice_columns(n, show_all)
    rows = all_words(n)
    return table, cols, rows


def _text_word_table(variant, n, show_all, approx) -> None:
    table, cols, rows = _table_rows(variant, n, show_all)
    with_ties = any(d.tie for d in table.cells.values())
    grid = [[""] + [str(c) for c in cols]]
    for b in rows:
        line = [str(b)]
        for a in cols:
            if a == b and (a, b) not in table.cells:
                line.append("*")
            else:
                line.append(_cell_text(table.cells[(a, b)], with_ties))
        grid.append(line)
    print(f"{variant.label}, n={n} (rows Bob, columns Alice; Bob's values)")
    _print_grid(grid)
    if approx:
        grid = [[""] + [str(c) for c in cols]]
        for b in rows:
            line = [str(b)]
            for a in cols:
                if a == b and (a, b) not in table.cells:
                    line.append("*")
                else:
                    line.append(_cell_text(table.cells[(a, b)], with_ties, approx=True))
            grid.append(line)
        print("approximate values:")
        _print_grid(grid)


def _text_two_coin_table(n, approx) -> None:
    classes = analysis.two_coin_class_table(n)
    print(f"two_coin, n={n} by autocorrelation class (rows Bob, columns Alice)")
    for label in classes.labels:
        print(f"class {label}: " + ", ".join(str(w) for w in classes.members[label]))
    grid = [[""] + list(classes.labels)]
    for bl in classes.labels:
        line = [bl]
        for al in classes.labels:
            d = classes.cells[(bl, al)]
            line.append(", ".join(_frac(v) for v in (d.bob_win, d.alice_win, d.tie)))
        grid.append(line)
    _print_grid(grid)
    if approx:
        grid = [[""] + list(classes.labels)]
        for bl in classes.labels:
            line = [bl]
            for al in classes.labels:
                d = classes.cells[(bl, al)]
                line.append(
                    ", ".join(
                        _approx(v, 2) for v in (d.bob_win, d.alice_win, d.tie)
                    )
                )
            grid.append(line)
        print("approximate values:")
        _print_grid(grid)


def _text_no_flippancy_table(n, show_all) -> None:
    grid_data = analysis.no_flippancy_grid(n)
    cols = _alice_columns(n, show_all)
    rows = all_words(n)
    print(f"no_flippancy, n={n} outputs (rows Bob, columns Alice)")
    out = [[""] + [str(c) for c in cols]]
    res = [[""] + [str(c) for c in cols]]
    for b in rows:
        out_line, res_line = [str(b)], [str(b)]
        for a in cols:
            if a == b:
                out_line.append("*")
                res_line.append("*")
                continue
            r = grid_data[(a, b)]
            out_line.append(r.display_output())
            if r.is_infinite:
                res_line.append("tie, infinite")
            else:
                winner = "Alice" if r.outcome == "alice" else "Bob"
                res_line.append(f"{winner}, {r.turns}")
        out.append(out_line)
        res.append(res_line)
    _print_grid(out)
    print("results (winner, turns):")
    _print_grid(res)


def _csv_table(variant, n, show_all) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(
        ["variant", "n", "alice", "bob", "alice_win", "bob_win", "tie", "infinite"]
    )
    table, cols, rows = _table_rows(variant, n, show_all)
    for a in cols:
        for b in rows:
            if (a, b) not in table.cells:
                continue
            d = table.cells[(a, b)]
            writer.writerow(
                [
                    variant.label,
                    n,
                    str(a),
                    str(b),
                    _frac(d.alice_win),
                    _frac(d.bob_win),
                    _frac(d.tie),
                    _frac(d.infinite),
                ]
            )


def _json_table(variant, n, show_all) -> None:
    table, cols, rows = _table_rows(variant, n, show_all)
    cells = [
        _distribution_json(variant, a, b, table.cells[(a, b)])
        for a in cols
        for b in rows
        if (a, b) in table.cells
    ]
    print(json.dumps({"variant": variant.label, "n": n, "cells": cells}, indent=2))


def _csv_no_flippancy(n, show_all) -> None:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(
        ["variant", "n", "alice", "bob", "outcome", "output", "preperiod", "period", "turns"]
    )
    grid_data = analysis.no_flippancy_grid(n)
    for a in _alice_columns(n, show_all):
        for b in all_words(n):
            if a == b:
                continue
            r = grid_data[(a, b)]
            writer.writerow(
                [
                    "no_flippancy",
                    n,
                    str(a),
                    str(b),
                    r.outcome,
                    "" if r.output is None else str(r.output),
                    r.preperiod,
                    r.period,
                    "" if r.turns is None else r.turns,
                ]
            )


def _json_no_flippancy(n, show_all) -> None:
    grid_data = analysis.no_flippancy_grid(n)
    cells = []
    for a in _alice_columns(n, show_all):
        for b in all_words(n):
            if a == b:
                continue
            r = grid_data[(a, b)]
            cells.append(
                {
                    "variant": "no_flippancy",
                    "n": n,
                    "alice": str(a),
                    "bob": str(b),
                    "outcome": r.outcome,
                    "output": None if r.output is None else str(r.output),
                    "preperiod": r.preperiod,
                    "period": r.period,
                    "turns": r.turns,
                }
            )
    print(json.dumps({"variant": "no_flippancy", "n": n, "cells": cells}, indent=2))


def cmd_table(args) -> int:
    variant = _variant_of(args)
    if variant.tag == "no_flippancy":
        if args.format == "csv":
            _csv_no_flippancy(args.n, args.all)
        elif args.format == "json":
            _json_no_flippancy(args.n, args.all)
        else:
            _text_no_flippancy_table(args.n, args.all)
        return 0
    if args.format == "csv":
        _csv_table(variant, args.n, args.all)
    elif args.format == "json":
        _json_table(variant, args.n, args.all)
    elif variant.tag == "two_coin":
        _text_two_coin_table(args.n, args.approx)
    else:
        _text_word_table(variant, args.n, args.all, args.approx)
    return 0


def cmd_best(args) -> int:
    variant = _variant_of(args)
    rows = analysis.best_choice_table(variant, args.n, all_alice=args.all)
    if args.format == "json":
        payload = [
            {
                "alice": str(r.alice),
                "best": [str(w) for w in r.best],
                "odds": None if r.odds is None else _frac(r.odds),
                "odds_text": _odds_text(r.odds),
            }
            for r in rows
        ]
        print(json.dumps({"variant": variant.label, "n": args.n, "rows": payload}, indent=2))
        return 0
    print(f"best replies for Bob ({variant.label}, n={args.n})")
    grid = [["Alice", "Bob's best", "odds"]]
    for r in rows:
        grid.append(
            [str(r.alice), ", ".join(str(w) for w in r.best), _odds_text(r.odds)]
        )
    _print_grid(grid)
    return 0


def cmd_waittime(args) -> int:
    (w,) = _parse_words(args.word)
    vec = autocorrelation(w)
    cln = conway_leading_number(vec)
    wait = timing.expected_wait_time(w)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "word": str(w),
                    "autocorrelation": vec.bit_string,
                    "conway_leading_number": cln,
                    "expected_wait_time": wait,
                },
                indent=2,
            )
        )
        return 0
    print(f"word {w}: autocorrelation {vec.bit_string}, CLN {cln}, expected wait {wait}")
    return 0


def cmd_sequence(args) -> int:
    (w,) = _parse_words(args.word)
    seq = timing.first_timer_sequence(w, args.terms)
    gf = timing.generating_function_coefficients(w, args.terms)
    matches = list(seq.terms) == gf
    rec = timing.recurrence_for(w)
    verified = timing.verify_recurrence(seq, rec) if rec is not None else None
    if args.format == "json":
        print(
            json.dumps(
                {
                    "word": str(w),
                    "terms": list(seq.terms),
                    "generating_function_match": matches,
                    "oeis_id": None if rec is None else rec.oeis_id,
                    "name": None if rec is None else rec.name,
                    "recurrence": None if rec is None else rec.formula(),
                    "recurrence_verified": verified,
                },
                indent=2,
            )
        )
        return 0
    print(f"word {w}: first-timer counts a_1..a_{args.terms}")
    print(", ".join(str(t) for t in seq.terms))
    print(f"generating function check: {'ok' if matches else 'MISMATCH'}")
    if rec is not None:
        label = rec.oeis_id if rec.name is None else f"{rec.oeis_id} ({rec.name})"
        state = "verified" if verified else "FAILED"
        print(f"OEIS {label}, {rec.formula()}: {state}")
    return 0


def cmd_cycles(args) -> int:
    variant = _variant_of(args)
    if args.graph == "best":
        graph = analysis.best_response_graph(variant, args.n)
        cycles = analysis.find_cycles(graph)
    else:
        graph = analysis.beats_graph(variant, args.n)
        cycles = analysis.find_cycles(graph, max_len=8)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "variant": variant.label,
                    "n": args.n,
                    "graph": args.graph,
                    "cycles": [[str(w) for w in c] for c in cycles],
                },
                indent=2,
            )
        )
        return 0
    print(f"{args.graph}-graph cycles ({variant.label}, n={args.n}): {len(cycles)}")
    for c in cycles:
        print(" -> ".join(str(w) for w in c) + f" -> {c[0]}")
    return 0


def cmd_anomalies(args) -> int:
    variant = _variant_of(args)
    rows = analysis.wait_time_anomalies(variant, args.n, all_alice=args.all)
    if args.format == "json":
        payload = [
            {
                "winner": r.winner,
                "alice": str(r.alice),
                "bob": str(r.bob),
                "alice_wait": r.waits[0],
                "bob_wait": r.waits[1],
            }
            for r in rows
        ]
        print(json.dumps({"variant": variant.label, "n": args.n, "rows": payload}, indent=2))
        return 0
    print(f"longer wait still wins ({variant.label}, n={args.n}): {len(rows)} pairs")
    grid = [["winner", "Alice", "Bob", "waits"]]
    for r in rows:
        grid.append(
            [r.winner, str(r.alice), str(r.bob), f"({r.waits[0]}, {r.waits[1]})"]
        )
    _print_grid(grid)
    return 0


def cmd_play(args) -> int:
    a, b = _parse_words(args.alice, args.bob)
    result = no_flippancy_play(a, b)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "variant": "no_flippancy",
                    "n": len(a),
                    "alice": str(a),
                    "bob": str(b),
                    "outcome": result.outcome,
                    "output": None if result.output is None else str(result.output),
                    "preperiod": result.preperiod,
                    "period": result.period,
                    "turns": result.turns,
                    "trace": [
                        {
                            "turn": t.turn,
                            "mover": t.mover,
                            "char": t.char,
                            "progress": list(t.progress),
                        }
                        for t in result.trace
                    ],
                },
                indent=2,
            )
        )
        return 0
    print(f"no_flippancy: Alice {a} vs Bob {b}")
    for t in result.trace:
        print(
            f"turn {t.turn}: {t.mover} plays {t.char}, progress {t.progress}"
        )
    if result.is_infinite:
        print(
            f"outcome: tie, infinite; output {result.display_output()} "
            f"(preperiod {result.preperiod!r}, period {result.period!r})"
        )
    elif result.outcome == "alice":
        print(f"outcome: Alice wins in {result.turns} turns; output {result.output}")
    else:
        print(f"outcome: Bob wins in {result.turns} turns; output {result.output}")
    return 0


def cmd_simulate(args) -> int:
    a, b = _parse_words(args.alice, args.bob)
    variant = _variant_of(args)
    report = montecarlo.simulate(
        variant, a, b, trials=args.trials, seed=args.seed, workers=args.workers
    )
    if args.format == "json":
        print(
            json.dumps(
                {
                    "variant": variant.label,
                    "n": len(a),
                    "alice": str(a),
                    "bob": str(b),
                    "trials": report.trials,
                    "seed": report.seed,
                    "workers": report.workers,
                    "flip_cap": report.flip_cap,
                    "counts": report.counts,
                    "aborted": report.aborted,
                    "frequencies": report.frequencies,
                    "exact": {k: _frac(v) for k, v in report.exact.items()},
                    "z_scores": report.z_scores,
                },
                indent=2,
            )
        )
        return 0
    print(f"simulate {variant.label}: Alice {a} vs Bob {b}")
    print(
        f"trials {report.trials}, seed {report.seed}, workers {report.workers}, "
        f"flip cap {report.flip_cap}"
    )
    grid = [["outcome", "count", "frequency", "exact", "z"]]
    for key in montecarlo.OUTCOME_KEYS:
        z = report.z_scores[key]
        grid.append(
            [
                key,
                str(report.counts[key]),
                f"{report.frequencies[key]:.5f}",
                f"{_frac(report.exact[key])} = {float(report.exact[key]):.5f}",
                "n/a" if z is None else f"{z:+.2f}",
            ]
        )
    _print_grid(grid)
    print(f"aborted trials: {report.aborted}")
    return 0


def _add_format(p, choices=("text", "json")) -> None:
    p.add_argument("--format", choices=choices, default="text")


def _add_variant(p) -> None:
    p.add_argument("--variant", "-v", default="classic", help="game variant name")
    p.add_argument("--k", type=int, default=None, help="occurrence counter for kth_occurrence")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="penney",
        description="Exact probabilities and structure for Penney's game and its variants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("odds", help="outcome distribution and odds for one pair")
    p.add_argument("alice")
    p.add_argument("bob")
    _add_variant(p)
    p.add_argument("--approx", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_odds)

    p = sub.add_parser("table", help="full probability table")
    _add_variant(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include Alice words starting with T")
    p.add_argument("--approx", action="store_true")
    _add_format(p, ("text", "csv", "json"))
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("best", help="Bob's best replies")
    _add_variant(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_best)

    p = sub.add_parser("waittime", help="expected wait time and Conway number")
    p.add_argument("word")
    _add_format(p)
    p.set_defaults(func=cmd_waittime)

    p = sub.add_parser("sequence", help="first-timer counts and OEIS metadata")
    p.add_argument("word")
    p.add_argument("--terms", type=int, default=20)
    _add_format(p)
    p.set_defaults(func=cmd_sequence)

    p = sub.add_parser("cycles", help="non-transitive cycles")
    _add_variant(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--graph", choices=("best", "beats"), default="best")
    _add_format(p)
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("anomalies", help="longer wait time but better odds")
    _add_variant(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true")
    _add_format(p)
    p.set_defaults(func=cmd_anomalies)

    p = sub.add_parser("play", help="deterministic no-flippancy game trace")
    p.add_argument("alice")
    p.add_argument("bob")
    _add_format(p)
    p.set_defaults(func=cmd_play)

    p = sub.add_parser("simulate", help="seeded Monte Carlo cross-check")
    p.add_argument("alice")
    p.add_argument("bob")
    _add_variant(p)
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    _add_format(p)
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_WORD
    except LengthMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LENGTH
    except UnknownVariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VARIANT
    except TableSizeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TABLE
    except PenneyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
