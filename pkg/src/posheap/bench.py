"""Construction benchmarks.

Timing follows the conventions of ``timeit``: the cyclic garbage
collector is paused during the measured region and the minimum over a
small number of repeats is reported, which is the standard way to
estimate the cost of the code rather than of scheduler noise.

Each row also reports the builder's work accounting: the construction
creates exactly one node per inner-loop pass, so the pass count must
equal the non-root node count, and the active node's depth must satisfy
depth + active_position == n + 1.  Violations make ``run_bench`` raise.
"""

from __future__ import annotations

import gc
import random
import time
from dataclasses import dataclass

from .heap import PositionHeap, build


@dataclass
class BenchRow:
    size: int
    kind: str
    seconds: float
    bytes_per_sec: float
    nodes: int
    iterations: int


def make_text(size: int, kind: str, seed: int) -> bytes:
    if kind == "random":
        return random.Random(seed).randbytes(size)
    if kind == "periodic":
        reps = size // 3 + 1
        return (b"abc" * reps)[:size]
    raise ValueError(f"unknown text kind: {kind}")


def time_build(data: bytes, repeats: int = 2) -> tuple[float, PositionHeap]:
    best = None
    heap = None
    for _ in range(max(1, repeats)):
        gc.collect()
        enabled = gc.isenabled()
        gc.disable()
        t0 = time.perf_counter()
        h = build(data)
        h.finalize()
        dt = time.perf_counter() - t0
        if enabled:
            gc.enable()
        if best is None or dt < best:
            best = dt
            heap = h
        else:
            del h
    return best, heap


def run_bench(sizes, seed: int = 0, repeats: int = 2, kinds=("random", "periodic")):
    rows = []
    for size in sizes:
        for kind in kinds:
            data = make_text(size, kind, seed)
            seconds, heap = time_build(data, repeats=repeats)
            nodes = heap.node_count()
            iterations = heap.creations
            if iterations != nodes - 1:
                raise AssertionError(
                    f"work accounting broken: {iterations} passes, {nodes - 1} nodes"
                )
            if size <= 1 << 20:
                # cross-check the derived depth arrays against the
                # cursor arithmetic (skipped at large sizes: the array
                # materialization would dwarf the measured build)
                if heap.depth(heap.active_node) + heap.active_position != size + 1:
                    raise AssertionError("active node depth inconsistent with position")
            rows.append(
                BenchRow(
                    size=size,
                    kind=kind,
                    seconds=seconds,
                    bytes_per_sec=size / seconds if seconds > 0 else 0.0,
                    nodes=nodes,
                    iterations=iterations,
                )
            )
            del heap
            gc.collect()
    return rows


def rows_csv(rows) -> str:
    out = ["size,kind,seconds,bytes_per_sec,nodes,iterations"]
    for r in rows:
        out.append(
            f"{r.size},{r.kind},{r.seconds:.6f},{r.bytes_per_sec:.0f},"
            f"{r.nodes},{r.iterations}"
        )
    return "\n".join(out) + "\n"


def rows_table(rows) -> str:
    header = f"{'size':>10}  {'kind':<9}{'seconds':>10}  {'MB/s':>7}  {'nodes':>10}  {'iterations':>10}"
    out = [header, "-" * len(header)]
    for r in rows:
        out.append(
            f"{r.size:>10}  {r.kind:<9}{r.seconds:>10.3f}  "
            f"{r.bytes_per_sec / 1e6:>7.2f}  {r.nodes:>10}  {r.iterations:>10}"
        )
    return "\n".join(out) + "\n"
