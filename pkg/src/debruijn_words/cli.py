"""Command-line entry point.

Exit codes: 0 success, 1 verification failure (or inconclusive search),
2 usage or validation error. Diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Any, Iterable, Sequence, TextIO

from .debruijn import generate_classic_db
from .oracle import (
    CoverageReport,
    InconclusiveSearch,
    exhaustive_min_cover,
    squares_of,
    verify_coverage,
)
from .primitive_db import generate_primitive_db, to_circular_db
from .squares import generate_square_word, square_lower_bound
from .words import (
    AlphabetParams,
    ResourceCeilingError,
    Word,
    all_words,
    conjugacy_class_count,
    count_primitive,
    primitive_words,
)

COMMANDS = ("primitive-db", "square-word", "classic-db", "verify", "table", "min-cover")

#: table cells above this k**n are marked instead of constructed
TABLE_CONSTRUCTION_CEILING = 2**16
MARK = "-"


class UsageError(ValueError):
    pass


def format_word(w: Sequence[int], k: int) -> str:
    """Digit string for k <= 10, comma-separated integers otherwise."""
    if k <= 10:
        return "".join(str(s) for s in w)
    return ",".join(str(s) for s in w)


def parse_word(text: str, k: int) -> Word:
    text = text.strip()
    if not text:
        return ()
    try:
        if k > 10 or "," in text:
            symbols = [int(part) for part in text.split(",")]
        else:
            symbols = [int(ch) for ch in text]
    except ValueError:
        raise UsageError(f"cannot parse word literal {text!r}") from None
    for s in symbols:
        if not 0 <= s < k:
            raise UsageError(f"symbol {s} outside alphabet 0..{k - 1}")
    return tuple(symbols)


def parse_range(text: str) -> list[int]:
    """'2-5' -> [2, 3, 4, 5]; '2,4' -> [2, 4]; '3' -> [3]."""
    out: list[int] = []
    try:
        for part in text.split(","):
            if "-" in part:
                lo, hi = part.split("-", 1)
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(part))
    except ValueError:
        raise UsageError(f"bad range {text!r}") from None
    return out


@dataclass
class RunConfig:
    command: str
    k: int = 2
    n: int = 2
    seed: str | None = None
    format: str = "text"
    circular: bool = False
    targets: str = "squares"
    k_range: str = "2-3"
    n_range: str = "2-6"
    budget: int = 10**6
    allow_large: bool = False


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="debruijn-words",
        description="De Bruijn sequences of primitive words and short square-covering words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, n_help: str = "word length n") -> None:
        p.add_argument("-k", type=int, default=2, help="alphabet size (default 2)")
        p.add_argument("-n", type=int, required=True, help=n_help)
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("primitive-db", help="greedy De Bruijn word of the primitive n-words")
    common(p)
    p.add_argument("--circular", action="store_true", help="drop the trailing 0^(n-1)")

    p = sub.add_parser("classic-db", help="prefer-largest De Bruijn word of order n")
    common(p, "order n")
    p.add_argument("--circular", action="store_true", help="drop the trailing 0^(n-1)")

    p = sub.add_parser("square-word", help="word containing every square of length 2n")
    common(p)
    p.add_argument("--seed", help="linear De Bruijn word of order n-1 (default: classic-db)")

    p = sub.add_parser("verify", help="check a word read from stdin")
    common(p)
    p.add_argument(
        "--targets",
        choices=("squares", "primitive", "all"),
        default="squares",
        help="squares: vv for v of length n; primitive/all: n-words",
    )
    p.add_argument("--circular", action="store_true", help="read factors cyclically")

    p = sub.add_parser("table", help="tabulate counts, bounds and achieved lengths")
    p.add_argument("-k", dest="k_range", default="2-3", help="alphabet sizes, e.g. 2-4 or 2,5")
    p.add_argument("-n", dest="n_range", default="2-6", help="word lengths, e.g. 2-8")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("min-cover", help="exhaustive shortest square-covering word (tiny sizes)")
    common(p)
    p.add_argument("--budget", type=int, default=10**6, help="maximum search states")
    p.add_argument("--allow-large", action="store_true", help="lift the k^n <= 4 gate")
    return parser


def _emit(out: TextIO, fmt: str, payload: dict[str, Any], text: str) -> None:
    if fmt == "json":
        json.dump(payload, out, sort_keys=True)
        out.write("\n")
    else:
        out.write(text + "\n")


def _generation_payload(word: Word, k: int, n: int, breakdown: dict[str, int]) -> dict[str, Any]:
    return {
        "word": format_word(word, k),
        "k": k,
        "n": n,
        "length": len(word),
        "breakdown": breakdown,
    }


def render_report(report: CoverageReport, k: int) -> str:
    fw = lambda w: format_word(w, k)  # noqa: E731
    lines = [
        f"verdict: {'PASS' if report.verdict else 'FAIL'}",
        f"targets: {len(report.targets)}",
        f"found once: {len(report.found_once)}",
        f"found multiple: {len(report.found_multiple)}",
        f"missing: {len(report.missing)}",
        f"extraneous: {len(report.extraneous)}",
    ]
    for w, pos in sorted(report.found_multiple.items()):
        lines.append(f"  repeated {fw(w)} at {','.join(map(str, pos))}")
    for w in sorted(report.missing):
        lines.append(f"  missing {fw(w)}")
    return "\n".join(lines)


def report_payload(report: CoverageReport, k: int) -> dict[str, Any]:
    fw = lambda w: format_word(w, k)  # noqa: E731
    return {
        "verdict": report.verdict,
        "targets": len(report.targets),
        "found_once": sorted(fw(w) for w in report.found_once),
        "found_multiple": {fw(w): pos for w, pos in sorted(report.found_multiple.items())},
        "missing": sorted(fw(w) for w in report.missing),
        "extraneous": sorted(fw(w) for w in report.extraneous),
    }


def _read_word(stdin: TextIO, k: int) -> Word:
    text = stdin.read().strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"invalid JSON input: {exc}") from None
        if "word" not in data:
            raise UsageError("JSON input has no 'word' field")
        if data.get("k", k) != k:
            raise UsageError(f"JSON word is over k={data['k']}, expected k={k}")
        text = str(data["word"])
    return parse_word(text, k)


def table_rows(ks: Iterable[int], ns: Iterable[int]) -> list[dict[str, Any]]:
    rows = []
    for k in ks:
        for n in ns:
            params = AlphabetParams(k, n)
            row: dict[str, Any] = {
                "k": k,
                "n": n,
                "primitive": count_primitive(params),
                "classes": conjugacy_class_count(params),
                "lower": square_lower_bound(params),
                "achieved": None,
                "ratio": None,
            }
            if n >= 2 and params.size <= TABLE_CONSTRUCTION_CEILING:
                achieved = len(generate_square_word(params).word)
                row["achieved"] = achieved
                row["ratio"] = achieved / params.size
            rows.append(row)
    return rows


def _render_table(rows: list[dict[str, Any]]) -> str:
    cols = ["k", "n", "primitive", "classes", "lower", "achieved", "ratio"]
    lines = ["\t".join(cols)]
    for row in rows:
        cells = []
        for c in cols:
            v = row[c]
            if v is None:
                cells.append(MARK)
            elif c == "ratio":
                cells.append(f"{v:.6f}")
            else:
                cells.append(str(v))
        lines.append("\t".join(cells))
    return "\n".join(lines)


def run(config: RunConfig, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    cmd = config.command
    if cmd == "table":
        ks, ns = parse_range(config.k_range), parse_range(config.n_range)
        if any(k < 2 for k in ks) or any(n < 1 for n in ns):
            raise UsageError("table needs k >= 2 and n >= 1")
        rows = table_rows(ks, ns)
        _emit(stdout, config.format, {"rows": rows}, _render_table(rows))
        return 0

    params = AlphabetParams(config.k, config.n)
    k, n = params.k, params.n

    if cmd == "primitive-db":
        trace = generate_primitive_db(params)
        word = to_circular_db(trace).word if config.circular else trace.output
        breakdown = {"primitive_words": count_primitive(params), "overlap": 0 if config.circular else n - 1}
        _emit(stdout, config.format, _generation_payload(word, k, n, breakdown), format_word(word, k))
        return 0

    if cmd == "classic-db":
        word = generate_classic_db(params)
        if config.circular:
            word = word[: k**n]
        breakdown = {"words": k**n, "overlap": 0 if config.circular else n - 1}
        _emit(stdout, config.format, _generation_payload(word, k, n, breakdown), format_word(word, k))
        return 0

    if cmd == "square-word":
        seed = parse_word(config.seed, k) if config.seed is not None else None
        report = generate_square_word(params, seed)
        breakdown = report.breakdown._asdict()
        breakdown["accepted"] = len(report.accepted)
        payload = _generation_payload(report.word, k, n, breakdown)
        payload["seed"] = format_word(report.seed, k)
        payload["lower_bound"] = square_lower_bound(params)
        _emit(stdout, config.format, payload, format_word(report.word, k))
        return 0

    if cmd == "verify":
        word = _read_word(stdin, k)
        if config.targets == "squares":
            targets = squares_of(params)
        elif config.targets == "primitive":
            targets = primitive_words(params)
        else:
            targets = list(all_words(params))
        L = len(targets[0])
        if len(word) < L:
            raise UsageError(f"word of length {len(word)} is shorter than targets ({L})")
        report = verify_coverage(word, targets, circular=config.circular)
        _emit(stdout, config.format, report_payload(report, k), render_report(report, k))
        if not report.verdict:
            stderr.write("verification failed\n")
            return 1
        return 0

    if cmd == "min-cover":
        try:
            length, witness = exhaustive_min_cover(
                params, budget=config.budget, allow_large=config.allow_large
            )
        except InconclusiveSearch as exc:
            stderr.write(f"inconclusive: {exc}\n")
            return 1
        payload = {
            "length": length,
            "word": format_word(witness, k),
            "k": k,
            "n": n,
            "lower_bound": square_lower_bound(params),
        }
        _emit(stdout, config.format, payload, f"{length}\t{format_word(witness, k)}")
        return 0

    raise UsageError(f"unknown command {cmd!r}")


def main(
    argv: Sequence[str] | None = None,
    stdin: TextIO | None = None,
    stdout: TextIO | None = None,
    stderr: TextIO | None = None,
) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    config = RunConfig(**{key: v for key, v in vars(ns).items() if v is not None})
    try:
        return run(config, stdin, stdout, stderr)
    except (ValueError, ResourceCeilingError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
