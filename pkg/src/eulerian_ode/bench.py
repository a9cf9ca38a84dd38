"""Timing harness for the triangle routes."""

from __future__ import annotations

import math
import statistics
import time
from typing import Sequence

from .triangle import ROUTES, Triangle, compare_triangles


def fubini(n: int) -> int:
    """Ordered Bell number sum_k k! S(n, k). Entry i of triangle row N has
    coefficient i! S(N + 1, i + 1), at most the term (i + 1)! S(N + 1, i + 1)
    of fubini(N + 1), so this bounds every coefficient in the row."""
    S = [1]  # S(0, 0)
    for m in range(1, n + 1):
        S = [0] + [k * (S[k] if k < len(S) else 0) + S[k - 1] for k in range(1, m + 1)]
    return sum(math.factorial(k) * s for k, s in enumerate(S))


def bit_stats(tri: Triangle) -> dict:
    last = tri[-1]
    lengths = [c.bit_length() for p in last for c in p.coeffs if c]
    N = len(tri) - 1
    return {
        "row": N,
        "diagonal_bits": last[-1].coeffs[-1].bit_length(),
        "factorial_bits": math.factorial(N).bit_length(),
        "max_bits": max(lengths),
        "mean_bits": round(statistics.fmean(lengths), 3),
        "fubini_bound_bits": fubini(N + 1).bit_length(),
    }


def _time(fn, arg, reps: int) -> tuple[float, Triangle]:
    times = []
    out = None
    for _ in range(reps):
        t0 = time.perf_counter()
        out = fn(arg)
        times.append(time.perf_counter() - t0)
    return statistics.median(times), out


def run_bench(
    N_max: int,
    reps: int = 1,
    routes: Sequence[str] | None = None,
    sizes: Sequence[int] | None = None,
) -> dict:
    """Median wall-clock per route and per row count, plus agreement and
    coefficient bit-length statistics for the largest triangle."""
    if N_max < 0 or reps < 1:
        raise ValueError("need N_max >= 0 and reps >= 1")
    routes = list(routes or ROUTES)
    for r in routes:
        if r not in ROUTES:
            raise ValueError(f"unknown route {r!r}")
    sizes = sorted(set(sizes or [N_max]))
    result: dict = {"N_max": N_max, "reps": reps, "sizes": sizes, "routes": {}}
    finals: dict[str, Triangle] = {}
    for name in routes:
        medians = []
        for n in sizes:
            sec, tri = _time(ROUTES[name], n, reps)
            medians.append(round(sec, 6))
            if n == sizes[-1]:
                finals[name] = tri
        result["routes"][name] = {"median_seconds": medians}
    ref_name = routes[0]
    disagreements = {}
    for name in routes[1:]:
        where = compare_triangles(finals[ref_name], finals[name])
        if where is not None:
            disagreements[name] = list(where)
    result["agree"] = not disagreements
    if disagreements:
        result["disagreements"] = disagreements
    result["bits"] = bit_stats(finals[ref_name])
    return result
