"""
natfromint.bench

Step counts and wall times for the derived operations.  Step counts are
exact (they come from the kernel counters); times are best of three.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass

from .harness import m_elem, nat_of_oracle, numeral
from .kernel import counting
from .nat_derivation import m_ind, nat_add, rank_algebra
from .signs import classify, sub

CEILING = 256


@dataclass
class BenchRow:
    operation: str
    size: int
    sigma_steps: int
    fold_steps: int
    wall_ms: float


def _measure(operation: str, size: int, thunk, repeats: int = 3) -> BenchRow:
    with counting() as c:
        thunk()
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        thunk()
        best = min(best, time.perf_counter() - t0)
    d = c.delta
    return BenchRow(operation, size, d.sigma_steps, d.fold_steps, round(best * 1000, 3))


def sizes(max_size: int) -> list[int]:
    out, k = [], 8
    while k <= max_size:
        out.append(k)
        k *= 2
    return out or [max_size]


def run_bench(max_size: int = 64) -> list[BenchRow]:
    if not 0 <= max_size <= CEILING:
        raise ValueError(f"--max must lie in [0, {CEILING}]")
    rows = []
    rank = rank_algebra()
    for n in sizes(max_size):
        x, m, a = numeral(n), m_elem(n), nat_of_oracle(n)
        rows.append(_measure("classify", n, lambda: classify(x)))
        rows.append(_measure("sub", n, lambda: sub(x, x)))
        rows.append(_measure("m_ind-rank", n, lambda: m_ind(rank, m)))
        rows.append(_measure("nat-add", n, lambda: nat_add(a, a)))
    return rows


def rows_as_json(rows: list[BenchRow]) -> list[dict]:
    return [asdict(r) for r in rows]


def format_table(rows: list[BenchRow]) -> str:
    head = f"{'operation':<12} {'size':>5} {'sigma_steps':>12} {'fold_steps':>11} {'wall_ms':>10}"
    lines = [head, "-" * len(head)]
    for r in rows:
        lines.append(
            f"{r.operation:<12} {r.size:>5} {r.sigma_steps:>12} {r.fold_steps:>11} {r.wall_ms:>10.3f}"
        )
    return "\n".join(lines)
