"""Instance-by-instance checks of the identities linking A_{n+N}, the
triangle a_i(N, t) and the higher-order polynomials A_n^(i).

Polynomial identities are checked by exact equality of canonical
coefficient tuples; series identities by equality of every coefficient up
to the truncation order.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .eulerian import eulerian_poly, higher_eulerian_poly
from .kernel import (
    ONE_MINUS_T,
    IntPoly,
    IntSeries,
    geom_inverse_power,
    poly_add,
    poly_mul,
    poly_pow,
    series_add,
    series_from_poly,
    series_mul,
)
from .report import VerificationReport
from .triangle import triangle_recurrence

__all__ = [
    "SweepSummary",
    "VerificationReport",
    "eq37_consistency",
    "power_sum_series",
    "sweep",
    "theorem2_rhs",
    "theorem2_verify",
    "theorem3_rhs",
    "theorem3_verify",
]


def _row(N: int, row: Sequence[IntPoly] | None) -> Sequence[IntPoly]:
    if row is None:
        return triangle_recurrence(N)[N]
    if len(row) != N + 1:
        raise ValueError(f"row {N} must have {N + 1} entries, got {len(row)}")
    return row


def theorem2_rhs(n: int, N: int, row: Sequence[IntPoly] | None = None) -> IntPoly:
    """sum_{i=1}^{N+1} a_{i-1}(N,t) (1-t)^(N+1-i) A_n^(i)(t)."""
    a = _row(N, row)
    acc = IntPoly()
    for i in range(1, N + 2):
        term = poly_mul(a[i - 1], poly_mul(poly_pow(ONE_MINUS_T, N + 1 - i), higher_eulerian_poly(i, n)))
        acc = poly_add(acc, term)
    return acc


def theorem2_verify(n: int, N: int, row: Sequence[IntPoly] | None = None) -> VerificationReport:
    """A_{n+N}(t) against the triangle-weighted sum of higher-order
    polynomials. ``row`` overrides a_*(N, t), for mutation testing."""
    if n < 0 or N < 0:
        raise ValueError("n and N must be >= 0")
    return VerificationReport.compare(
        "thm2", {"n": n, "N": N}, eulerian_poly(n + N), theorem2_rhs(n, N, row)
    )


def power_sum_series(p: int, K: int) -> IntSeries:
    """sum_j (j+1)^p t^j through t^K, by direct integer powering."""
    return IntSeries(tuple((j + 1) ** p for j in range(K + 1)), K)


def theorem3_rhs(n: int, N: int, K: int, row: Sequence[IntPoly] | None = None) -> IntSeries:
    """sum_i a_{i-1}(N,t) A_n^(i)(t) (1-t)^(-(n+i)), truncated at t^K.

    The outer (1-t)^-n and inner (1-t)^-i are merged, so n = 0 needs no
    special case: n + i >= 1 always.
    """
    a = _row(N, row)
    acc = IntSeries((0,) * (K + 1), K)
    for i in range(1, N + 2):
        num = series_from_poly(poly_mul(a[i - 1], higher_eulerian_poly(i, n)), K)
        acc = series_add(acc, series_mul(num, geom_inverse_power(n + i, K)))
    return acc


def theorem3_verify(n: int, N: int, K: int, row: Sequence[IntPoly] | None = None) -> VerificationReport:
    if n < 0 or N < 0 or K < 0:
        raise ValueError("n, N and K must be >= 0")
    return VerificationReport.compare(
        "thm3", {"n": n, "N": N, "K": K}, power_sum_series(n + N, K), theorem3_rhs(n, N, K, row)
    )


def eq37_consistency(n: int, N: int, K: int) -> VerificationReport:
    """A_{n+N}(t) (1-t)^-(n+N+1) against the power-sum series."""
    if n < 0 or N < 0 or K < 0:
        raise ValueError("n, N and K must be >= 0")
    mid = series_mul(series_from_poly(eulerian_poly(n + N), K), geom_inverse_power(n + N + 1, K))
    return VerificationReport.compare("eq37", {"n": n, "N": N, "K": K}, power_sum_series(n + N, K), mid)


# -- sweeps -----------------------------------------------------------------


@dataclass
class SweepSummary:
    bounds: tuple[int, int, int | None]
    reports: list[VerificationReport] = field(default_factory=list)
    seconds: float = 0.0
    stopped_early: bool = False

    @property
    def failures(self) -> list[VerificationReport]:
        return [r for r in self.reports if not r.passed]

    @property
    def passed(self) -> bool:
        return not self.failures

    def counts(self) -> dict[str, dict[str, int]]:
        out: dict[str, dict[str, int]] = {}
        for r in self.reports:
            c = out.setdefault(r.identity, {"pass": 0, "fail": 0})
            c[r.verdict] += 1
        return out

    def summary(self) -> str:
        n_max, N_max, K = self.bounds
        parts = [f"{name}: {c['pass']} pass, {c['fail']} fail" for name, c in self.counts().items()]
        head = f"sweep n<={n_max} N<={N_max}" + (f" K={K}" if K is not None else "")
        tail = " (stopped at first failure)" if self.stopped_early else ""
        return f"{head}: " + "; ".join(parts) + f" in {self.seconds:.2f}s" + tail


def _grid_point(args: tuple[str, int, int, int | None]) -> VerificationReport:
    kind, n, N, K = args
    if kind == "thm2":
        return theorem2_verify(n, N)
    if kind == "thm3":
        return theorem3_verify(n, N, K)
    if kind == "eq37":
        return eq37_consistency(n, N, K)
    raise ValueError(kind)


def sweep(
    n_max: int,
    N_max: int,
    K: int | None = None,
    identities: Sequence[str] = ("thm2", "thm3", "eq37"),
    fail_fast: bool = False,
    jobs: int = 1,
) -> SweepSummary:
    """Run the chosen identities on every (n, N) with n <= n_max, N <= N_max.

    Series identities need ``K``. Reports are ordered by identity, then
    (n, N), whatever the completion order under ``jobs > 1``.
    """
    if min(n_max, N_max) < 0 or (K is not None and K < 0):
        raise ValueError("sweep bounds must be >= 0")
    tasks = []
    for kind in identities:
        if kind in ("thm3", "eq37") and K is None:
            raise ValueError(f"{kind} needs a truncation order K")
        tasks += [(kind, n, N, K) for n in range(n_max + 1) for N in range(N_max + 1)]

    summary = SweepSummary((n_max, N_max, K))
    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for rep in pool.map(_grid_point, tasks, chunksize=max(1, len(tasks) // (4 * jobs))):
                summary.reports.append(rep)
                if fail_fast and not rep.passed:
                    summary.stopped_early = True
                    break
    else:
        for task in tasks:
            rep = _grid_point(task)
            summary.reports.append(rep)
            if fail_fast and not rep.passed:
                summary.stopped_early = True
                break
    summary.seconds = time.perf_counter() - start
    return summary
