"""Exhaustive and seeded-random cross-checks over small graphs.

For every graph the harness compares

* ``nfc-route``: definitional and structural NFC verdicts,
* ``tutte``: perfect matching existence and absence of a Tutte set,
* ``oracle``: blossom matching size and brute-force maximum,
* ``fc-connected``: factor-critical graphs on two or more vertices are connected,

and tallies NFC, factor-critical and perfect-matching graphs per order.
"""

from __future__ import annotations

import csv
import io
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .criticality import is_factor_critical, is_nfc_by_definition, is_nfc_by_theorem, tutte_witness
from .graph import Graph, XorShift64Star, components, random_graph, serialize_graph
from .matching import has_perfect_matching, matching_number
from .oracle import ORACLE_MAX_N, max_matching_size_brute

__all__ = [
    "VerificationReport",
    "EnumerationBoundError",
    "enumerate_labeled_graphs",
    "verify_theorems",
    "random_specs",
    "reports_to_csv",
    "append_csv",
    "CSV_COLUMNS",
    "EXHAUSTIVE_MAX_N",
    "RANDOM_PROBABILITIES",
]

EXHAUSTIVE_MAX_N = 7
RANDOM_PROBABILITIES = (0.2, 0.5, 0.8)
CSV_COLUMNS = (
    "order",
    "graphs_checked",
    "nfc_count",
    "factor_critical_count",
    "perfect_matching_count",
    "mismatch_count",
)


class EnumerationBoundError(ValueError):
    pass


@dataclass
class VerificationReport:
    n: int
    graphs_checked: int = 0
    nfc_count: int = 0
    factor_critical_count: int = 0
    perfect_matching_count: int = 0
    mismatches: list[dict] = field(default_factory=list)

    def merge(self, other: VerificationReport) -> None:
        self.graphs_checked += other.graphs_checked
        self.nfc_count += other.nfc_count
        self.factor_critical_count += other.factor_critical_count
        self.perfect_matching_count += other.perfect_matching_count
        self.mismatches.extend(other.mismatches)

    def row(self) -> tuple[int, ...]:
        return (
            self.n,
            self.graphs_checked,
            self.nfc_count,
            self.factor_critical_count,
            self.perfect_matching_count,
            len(self.mismatches),
        )


def _pairs(n: int) -> list[tuple[int, int]]:
    return list(combinations(range(n), 2))


def _graph_from_mask(n: int, pairs: list[tuple[int, int]], mask: int) -> Graph:
    edges = frozenset(p for i, p in enumerate(pairs) if mask >> i & 1)
    return Graph._trusted(n, edges)


def enumerate_labeled_graphs(n: int, allow_large: bool = False) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices, by counting edge bitmasks.

    Bit ``i`` of the mask selects the ``i``-th pair in lexicographic order.
    Orders above 7 need ``allow_large``; above 8 are refused outright.
    """
    if n < 0:
        raise ValueError("order must be non-negative")
    if n > 8 or (n > EXHAUSTIVE_MAX_N and not allow_large):
        raise EnumerationBoundError(f"exhaustive enumeration refused for n={n}")
    pairs = _pairs(n)
    for mask in range(1 << len(pairs)):
        yield _graph_from_mask(n, pairs, mask)


def _check(g: Graph, report: VerificationReport, tutte_max_n: int, oracle_max_n: int) -> None:
    report.graphs_checked += 1
    problems = []

    by_def = is_nfc_by_definition(g).holds
    by_thm = is_nfc_by_theorem(g).holds
    if by_def != by_thm:
        problems.append(("nfc-route", {"definition": by_def, "theorem": by_thm}))

    pm = has_perfect_matching(g)
    if g.n <= tutte_max_n:
        no_barrier = tutte_witness(g) is None
        if pm != no_barrier:
            problems.append(("tutte", {"perfect": pm, "tutte_absent": no_barrier}))

    if g.n <= oracle_max_n:
        engine = matching_number(g)
        brute = max_matching_size_brute(g)
        if engine != brute:
            problems.append(("oracle", {"engine": engine, "brute": brute}))

    report.nfc_count += by_def
    report.perfect_matching_count += pm
    fc = is_factor_critical(g).holds
    report.factor_critical_count += fc
    if fc and g.n >= 2 and len(components(g)) != 1:
        problems.append(("fc-connected", {}))
    for check, detail in problems:
        report.mismatches.append({"check": check, "graph": serialize_graph(g), **detail})


def _exhaustive_chunk(args: tuple[int, int, int, int, int]) -> VerificationReport:
    n, lo, hi, tutte_max_n, oracle_max_n = args
    pairs = _pairs(n)
    report = VerificationReport(n)
    for mask in range(lo, hi):
        _check(_graph_from_mask(n, pairs, mask), report, tutte_max_n, oracle_max_n)
    return report


def random_specs(n_max: int, count: int, seed: int) -> list[tuple[int, float, int]]:
    """``count`` deterministic ``(n, p, graph_seed)`` triples with 1 <= n <= n_max.

    Orders cycle through 1..n_max, probabilities through 0.2, 0.5, 0.8 once
    per full sweep of orders, and per-graph seeds are drawn from the
    xorshift generator seeded with ``seed``.
    """
    rng = XorShift64Star(seed)
    specs = []
    for i in range(count):
        n = 1 + i % n_max
        p = RANDOM_PROBABILITIES[(i // n_max) % len(RANDOM_PROBABILITIES)]
        specs.append((n, p, rng.next_u64()))
    return specs


def _random_chunk(args) -> dict[int, VerificationReport]:
    specs, tutte_max_n, oracle_max_n = args
    out: dict[int, VerificationReport] = {}
    for n, p, s in specs:
        report = out.setdefault(n, VerificationReport(n))
        _check(random_graph(n, p, s), report, tutte_max_n, oracle_max_n)
    return out


def _split(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    step = max(1, -(-(hi - lo) // parts))
    return [(a, min(a + step, hi)) for a in range(lo, hi, step)]


def verify_theorems(
    n_max: int,
    mode: str = "exhaustive",
    count: int = 1000,
    seed: int = 0,
    jobs: int = 1,
    tutte_max_n: int = 6,
    oracle_max_n: int = ORACLE_MAX_N,
    allow_large: bool = False,
    n_min: int = 0,
) -> list[VerificationReport]:
    """Run the cross-route checks and return one report per order.

    ``mode="exhaustive"`` visits every labelled graph of order
    ``n_min..n_max``; ``mode="random"`` checks ``count`` seeded random graphs
    from :func:`random_specs`. Mismatches are data in the reports, never
    exceptions. ``jobs > 1`` splits the work across processes; merged
    results are identical to a serial run.
    """
    if mode == "exhaustive":
        if n_max > 8 or (n_max > EXHAUSTIVE_MAX_N and not allow_large):
            raise EnumerationBoundError(f"exhaustive verification refused for n={n_max}")
        tasks = []
        for n in range(n_min, n_max + 1):
            total = 1 << (n * (n - 1) // 2)
            for lo, hi in _split(0, total, jobs if total > 4096 else 1):
                tasks.append((n, lo, hi, tutte_max_n, oracle_max_n))
        parts = _run(_exhaustive_chunk, tasks, jobs)
        reports = {n: VerificationReport(n) for n in range(n_min, n_max + 1)}
        for part in parts:
            reports[part.n].merge(part)
    elif mode == "random":
        specs = [s for s in random_specs(n_max, count, seed) if s[0] >= n_min]
        tasks = [(specs[a:b], tutte_max_n, oracle_max_n) for a, b in _split(0, len(specs), jobs)]
        reports = {}
        for part in _run(_random_chunk, tasks, jobs):
            for n, rep in part.items():
                reports.setdefault(n, VerificationReport(n)).merge(rep)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    out = [reports[n] for n in sorted(reports)]
    for rep in out:
        rep.mismatches.sort(key=lambda d: (d["check"], d["graph"]))
    return out


def _run(fn, tasks: list, jobs: int) -> list:
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, os.cpu_count() or 1, len(tasks))) as pool:
        return list(pool.map(fn, tasks))


def reports_to_csv(reports: list[VerificationReport], header: bool = True) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    if header:
        writer.writerow(CSV_COLUMNS)
    for rep in reports:
        writer.writerow(rep.row())
    return buf.getvalue()


def append_csv(reports: list[VerificationReport], path: str | os.PathLike) -> None:
    """Append report rows to ``path``, writing the header only for a new file."""
    fresh = not os.path.exists(path) or os.path.getsize(path) == 0
    with open(path, "a", newline="") as fh:
        fh.write(reports_to_csv(reports, header=fresh))
