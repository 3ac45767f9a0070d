"""Command-line front end.

Exit codes: 0 success, 1 failed check or exhausted budget, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import bounds
from .enumerate import Budget, CountTable, default_workers, enumerate_rich, enumerate_with_stats
from .errors import BudgetExceededError, NotRichError, RichlangError, WordParseError
from .rich import defect, distinct_palindromic_factors, factorization_record
from .verify import SUITES, run_suites
from .words import MAX_Q, Word

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class RunConfig:
    q: int = 2
    max_n: int = 10
    mode: str = "exact"
    workers: int = 1
    node_budget: Optional[int] = None
    time_budget: Optional[float] = None
    fmt: str = "plain"
    out: Optional[str] = None
    seed: int = 0

    def __post_init__(self):
        if not 2 <= self.q <= MAX_Q:
            raise ValueError(f"--q must be in [2, {MAX_Q}]")
        if self.max_n < 0:
            raise ValueError("--max-n must be >= 0")
        if self.workers < 1:
            raise ValueError("--workers must be >= 1")
        if (self.node_budget or 0) < 0 or (self.time_budget or 0) < 0:
            raise ValueError("budgets must be >= 0")

    @property
    def budget(self) -> Budget:
        return Budget(self.node_budget, self.time_budget)

    @property
    def enum_mode(self) -> str:
        return "reduced" if self.mode == "reduced" else "exact"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[str]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def _json_text(command: str, payload: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, "command": command, **payload}, indent=2) + "\n"


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _fmt_root(v: Optional[float]) -> str:
    return "" if v is None else f"{v:.6f}"


def cmd_analyze(word: Word, cfg: RunConfig) -> int:
    record = {
        "word": str(word),
        "n": len(word),
        "rich": defect(word) == 0,
        "defect": defect(word),
        "palindromic_factors": distinct_palindromic_factors(word),
    }
    if cfg.fmt == "json":
        text = _json_text("analyze", record)
    elif cfg.fmt == "csv":
        text = _csv_text(list(record), [[str(v).lower() if isinstance(v, bool) else str(v) for v in record.values()]])
    else:
        text = "".join(f"{k}: {str(v).lower() if isinstance(v, bool) else v}\n" for k, v in record.items())
    _emit(text, cfg)
    return EXIT_OK


def cmd_factorize(word: Word, cfg: RunConfig, permissive: bool = False) -> int:
    try:
        record = factorization_record(word, permissive)
    except NotRichError as exc:
        print(f"error: {exc}; use --permissive for a greedy factorization", file=sys.stderr)
        return EXIT_FAIL
    kind = "UPS" if record["rich"] else "greedy palindromic suffix factorization"
    if cfg.fmt == "plain":
        lines = [f"{kind}: {' | '.join(record['parts'])}", f"p: {record['p']}", f"n: {record['n']}"]
        if not record["rich"]:
            lines.append(f"defect: {record['defect']} (parts need not be distinct)")
        text = "\n".join(lines) + "\n"
    elif cfg.fmt == "csv":
        text = _csv_text(
            ["word", "rich", "defect", "p", "parts", "n"],
            [[record["word"], str(record["rich"]).lower(), str(record["defect"]), str(record["p"]),
              "|".join(record["parts"]), str(record["n"])]],
        )
    else:
        text = _json_text("factorize", {**record, "factorization": kind})
    _emit(text, cfg)
    return EXIT_OK


def _count_payload(table: CountTable, partial: bool) -> dict:
    growth = {row.n: row for row in bounds.growth_report(table)} if table.n_max >= 1 else {}
    rows = [
        {
            "n": n,
            "R_n": r,
            "root": None if n == 0 else round(growth[n].root, 6),
            "certificate": None if n == 0 else round(growth[n].certificate, 6),
        }
        for n, r in enumerate(table.counts)
    ]
    certificate = rows[-1]["certificate"] if table.n_max >= 1 else None
    return {"q": table.q, "partial": partial, "rows": rows, "certificate": certificate, "note": bounds.REFERENCE_NOTE}


def cmd_count(cfg: RunConfig) -> int:
    partial = False
    try:
        table = count_rich_for(cfg)
    except BudgetExceededError as exc:
        print(f"error: {exc} (partial table)", file=sys.stderr)
        table, partial = exc.partial, True
    if cfg.fmt == "csv":
        text = _csv_text(["n", "R_n", "root"], table.csv_rows())
    elif cfg.fmt == "json":
        text = _json_text("count", {"mode": cfg.enum_mode, **_count_payload(table, partial)})
    else:
        payload = _count_payload(table, partial)
        lines = [f"rich words over {table.q} letters ({cfg.enum_mode} enumeration)"]
        lines += [f"{r['n']:>4} {r['R_n']:>14} {_fmt_root(r['root']):>10} {_fmt_root(r['certificate']):>10}" for r in payload["rows"]]
        if payload["certificate"] is not None:
            lines.append(f"growth certificate: {payload['certificate']:.6f}")
        lines.append(f"note: {bounds.REFERENCE_NOTE}")
        if partial:
            lines.append("PARTIAL: budget exhausted")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg)
    return EXIT_FAIL if partial else EXIT_OK


def count_rich_for(cfg: RunConfig) -> CountTable:
    table, _ = enumerate_with_stats(cfg.q, cfg.max_n, cfg.enum_mode, cfg.workers, cfg.budget)
    return table


def cmd_bounds(cfg: RunConfig) -> int:
    try:
        table, stats = enumerate_with_stats(cfg.q, cfg.max_n, cfg.enum_mode, cfg.workers, cfg.budget)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    reports = bounds.bound_reports(table, stats)
    theorem_a = bounds.verify_theorem_a(stats, cfg.q)
    failures = bounds.report_failures(reports) + list(theorem_a.violations)
    if cfg.fmt == "csv":
        text = _csv_text(bounds.BOUND_CSV_HEADER, [r.csv_row() for r in reports])
    elif cfg.fmt == "json":
        text = _json_text(
            "bounds",
            {
                "q": cfg.q,
                "c": cfg_round(bounds.constant_c(cfg.q)),
                "max_ratio": cfg_round(theorem_a.max_ratio),
                "rows": [dict(zip(bounds.BOUND_CSV_HEADER, r.csv_row())) for r in reports],
                "failures": failures,
                "note": bounds.REFERENCE_NOTE,
            },
        )
    else:
        lines = [",".join(bounds.BOUND_CSV_HEADER)] + [",".join(r.csv_row()) for r in reports]
        lines.append(f"c = {bounds.constant_c(cfg.q):.6f}; max observed p_max*ln(n)/n = {theorem_a.max_ratio:.6f}")
        lines.append(f"note: {bounds.REFERENCE_NOTE}")
        lines.append("all bounds hold" if not failures else "FAILED: " + "; ".join(failures))
        text = "\n".join(lines) + "\n"
    _emit(text, cfg)
    return EXIT_OK if not failures else EXIT_FAIL


def cfg_round(v: float) -> float:
    return round(v, 6)


def cmd_verify(suite: str, cfg: RunConfig, samples: int) -> int:
    results = run_suites(suite, q=cfg.q, max_n=cfg.max_n, seed=cfg.seed, samples=samples)
    ok = all(r.passed for r in results)
    if cfg.fmt == "json":
        text = _json_text(
            "verify",
            {
                "seed": cfg.seed,
                "suites": [
                    {"name": r.name, "checks": r.checks, "marginal": r.marginal, "failures": r.failures[:10]}
                    for r in results
                ],
                "passed": ok,
            },
        )
    else:
        lines = []
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{r.name}: {status} {r.checks} checks, {len(r.failures)} failures, {r.marginal} marginal")
            lines += [f"  counterexample: {msg}" for msg in r.failures[:10]]
        lines.append("ALL PASS" if ok else "FAILED")
        text = "\n".join(lines) + "\n"
    _emit(text, cfg)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_enumerate(n: int, cfg: RunConfig) -> int:
    words: list[str] = []
    try:
        enumerate_rich(cfg.q, n, lambda w: words.append(str(w)), cfg.budget)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if cfg.fmt == "json":
        text = _json_text("enumerate", {"q": cfg.q, "n": n, "count": len(words), "words": words})
    else:
        text = "".join(w + "\n" for w in words)
    _emit(text, cfg)
    return EXIT_OK


def _common(p: argparse.ArgumentParser, fmt_default: str, max_n_default: int = 10) -> None:
    p.add_argument("--q", type=int, default=2, help="alphabet size (2..36)")
    p.add_argument("--max-n", type=int, default=max_n_default, dest="max_n")
    p.add_argument("--mode", choices=["exact", "reduced"], default="exact")
    p.add_argument("--workers", type=int, default=None, help="default: $RICHLANG_WORKERS or 1")
    p.add_argument("--node-budget", type=int, default=None, dest="node_budget")
    p.add_argument("--time-budget-secs", type=float, default=None, dest="time_budget")
    p.add_argument("--format", choices=["csv", "json", "plain"], default=fmt_default, dest="fmt")
    p.add_argument("--out", default=None)
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="richlang", description="Rich words: detection, UPS-factorization, counting, bounds.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="richness, defect and palindromic factor count of a word")
    p.add_argument("word")
    _common(p, "plain")

    p = sub.add_parser("factorize", help="UPS-factorization of a rich word")
    p.add_argument("word")
    p.add_argument("--permissive", action="store_true", help="greedily factorize non-rich words too")
    _common(p, "json")

    p = sub.add_parser("count", help="count rich words of each length")
    _common(p, "csv")

    p = sub.add_parser("bounds", help="evaluate every bound on the computed table")
    _common(p, "csv")

    p = sub.add_parser("verify", help="run property suites")
    p.add_argument("suite", choices=[*SUITES, "all"])
    p.add_argument("--samples", type=int, default=50, help="random words per (q, n) in the oracle suite")
    _common(p, "plain")

    p = sub.add_parser("enumerate", help="list rich words of length --n")
    p.add_argument("--n", type=int, required=True)
    _common(p, "plain")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        workers = args.workers if args.workers is not None else default_workers()
        cfg = RunConfig(
            q=args.q,
            max_n=args.max_n,
            mode=args.mode,
            workers=workers,
            node_budget=args.node_budget,
            time_budget=args.time_budget,
            fmt=args.fmt,
            out=args.out,
            seed=args.seed,
        )
    except ValueError as exc:
        print(f"richlang: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        if args.command in ("analyze", "factorize"):
            try:
                word = Word.parse(args.word, cfg.q)
            except WordParseError as exc:
                print(f"richlang: error: {exc}", file=sys.stderr)
                return EXIT_USAGE
            if args.command == "analyze":
                return cmd_analyze(word, cfg)
            return cmd_factorize(word, cfg, args.permissive)
        if args.command == "count":
            return cmd_count(cfg)
        if args.command == "bounds":
            return cmd_bounds(cfg)
        if args.command == "verify":
            return cmd_verify(args.suite, cfg, args.samples)
        if args.command == "enumerate":
            if args.n < 0:
                print("richlang: error: --n must be >= 0", file=sys.stderr)
                return EXIT_USAGE
            return cmd_enumerate(args.n, cfg)
    except RichlangError as exc:
        print(f"richlang: error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
