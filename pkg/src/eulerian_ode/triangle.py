"""The coefficient triangle a_i(N, t).

With F = 1 / (exp(x (t - 1)) - t), the N-th x-derivative of F is

    (1 - t)^N * sum_{i=0}^{N} a_i(N, t) F^(i+1).

Rows are stored zero-based: ``rows[N][i]`` is a_i(N, t). Four independent
ways of building the triangle live here, plus a comparison of all four:

* ``triangle_recurrence``: two-term recurrence between consecutive rows;
* ``triangle_single_sum``: each column from the previous column alone;
* ``coeff_closed_form``: nested sums, one entry at a time;
* ``derivative_bootstrap``: formal differentiation of a polynomial in F.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from typing import Iterator, Sequence

from .kernel import ONE, ONE_MINUS_T, T, IntPoly, poly_add, poly_mul, poly_scale, poly_shift

Triangle = list[list[IntPoly]]


def triangle_recurrence(N_max: int) -> Triangle:
    """a_0(N+1) = a_0(N), a_{N+1}(N+1) = (N+1) t a_N(N), and in between
    a_i(N+1) = i t a_{i-1}(N) + (i+1) a_i(N)."""
    if N_max < 0:
        raise ValueError(f"N_max must be >= 0, got {N_max}")
    rows: Triangle = [[ONE]]
    for N in range(N_max):
        prev = rows[N]
        row = [prev[0]]
        for i in range(1, N + 1):
            row.append(poly_add(poly_scale(poly_shift(prev[i - 1], 1), i), poly_scale(prev[i], i + 1)))
        row.append(poly_scale(poly_shift(prev[N], 1), N + 1))
        rows.append(row)
    return rows


def coeff_single_sum(j: int, N_plus_1: int, lower_rows: Sequence[Sequence[IntPoly]]) -> IntPoly:
    """a_j(N+1, t) = j t sum_{i=0}^{N-j+1} (j+1)^i a_{j-1}(N-i, t).

    Only column j - 1 of ``lower_rows`` (rows j-1 .. N) is read.
    """
    N = N_plus_1 - 1
    if not 1 <= j <= N_plus_1:
        raise ValueError(f"need 1 <= j <= {N_plus_1}, got j={j}")
    acc = IntPoly()
    for i in range(N - j + 2):
        acc = poly_add(acc, poly_scale(lower_rows[N - i][j - 1], (j + 1) ** i))
    return poly_scale(poly_shift(acc, 1), j)


def triangle_single_sum(N_max: int) -> Triangle:
    """Whole triangle built column by column with ``coeff_single_sum``."""
    if N_max < 0:
        raise ValueError(f"N_max must be >= 0, got {N_max}")
    rows: Triangle = [[ONE] for _ in range(N_max + 1)]
    for j in range(1, N_max + 1):
        for N in range(j, N_max + 1):
            rows[N].append(coeff_single_sum(j, N, rows))
    return rows


# -- nested-sum closed form ----------------------------------------------

# direct enumeration is exponential in i; beyond these bounds use the cascade
DIRECT_MAX_I = 6
DIRECT_MAX_N = 30


def _nested_sum_direct(i: int, N: int) -> int:
    """sum over j_{i-1}, ..., j_1 of (i+1)^j_{i-1} ... 3^j_1 (2^(N - sum j - i + 1) - 1).

    The outermost index j_{i-1} runs to N - i, each inner one to
    N - i - (sum of outer indices).
    """
    total = 0

    def walk(base: int, budget: int, weight: int, used: int):
        nonlocal total
        if base == 2:
            total += weight * ((1 << (N - used - i + 1)) - 1)
            return
        w = weight
        for j in range(budget + 1):
            walk(base - 1, budget - j, w, used + j)
            w *= base

    walk(i + 1, N - i, 1, 0)
    return total


_cascade_lock = threading.Lock()
_cascade: list[tuple[int, ...]] = []


def _cascade_table(N: int) -> list[tuple[int, ...]]:
    """Row k holds s_k(0..N'), N' >= N, for the nested sum of depth k - 1,
    built innermost first: s_1(M) = 2^M - 1 and
    s_k(M) = sum_{j=0}^{M-k} (k+1)^j s_{k-1}(M-j-1)."""
    global _cascade
    with _cascade_lock:
        if len(_cascade) <= 1 or len(_cascade[1]) <= N:
            table = [(), tuple((1 << M) - 1 for M in range(N + 1))]
            for k in range(2, N + 1):
                prev = table[k - 1]
                table.append(tuple(
                    sum((k + 1) ** j * prev[M - j - 1] for j in range(M - k + 1)) if M >= k else 0
                    for M in range(N + 1)
                ))
            _cascade = table
        return _cascade


def _nested_sum_cascade(i: int, N: int) -> int:
    return _cascade_table(N)[i][N]


def coeff_closed_form(i: int, N: int, method: str = "auto") -> IntPoly:
    """a_i(N, t) = i! t^i * (nested sum), for 1 <= i <= N.

    ``method`` is ``"direct"`` (enumerate every index tuple), ``"cascade"``
    (innermost-first accumulation) or ``"auto"`` (direct while cheap).
    """
    if not 1 <= i <= N:
        raise ValueError(f"need 1 <= i <= N, got i={i}, N={N}")
    if method == "auto":
        method = "direct" if i <= DIRECT_MAX_I and N <= DIRECT_MAX_N else "cascade"
    if method == "direct":
        s = _nested_sum_direct(i, N)
    elif method == "cascade":
        s = _nested_sum_cascade(i, N)
    else:
        raise ValueError(f"unknown method {method!r}")
    return IntPoly.monomial(math.factorial(i) * s, i)


def triangle_closed_form(N_max: int, method: str = "auto") -> Triangle:
    if N_max < 0:
        raise ValueError(f"N_max must be >= 0, got {N_max}")
    if method != "direct":
        _cascade_table(N_max)
    return [[ONE] + [coeff_closed_form(i, N, method) for i in range(1, N + 1)] for N in range(N_max + 1)]


# -- formal differentiation ----------------------------------------------


@dataclass(frozen=True)
class SymbolicF:
    """(1 - t)^exponent * sum_k coeffs[k-1] F^k.

    The prefactor stays symbolic; it is never multiplied into the
    coefficients.
    """

    coeffs: tuple[IntPoly, ...]
    exponent: int = 0

    @property
    def degree(self) -> int:
        return len(self.coeffs)

    def dF(self) -> tuple[IntPoly, ...]:
        """Partial derivative in F, as coefficients of F^0, F^1, ..."""
        return tuple(poly_scale(c, k) for k, c in enumerate(self.coeffs, start=1))

    def differentiate(self, F_prime: SymbolicF) -> SymbolicF:
        """d/dx by the chain rule, with dF/dx replaced by ``F_prime``."""
        g = self.dF()  # index 0 is the F^0 coefficient
        h = F_prime.coeffs  # index 0 is the F^1 coefficient
        out = [IntPoly() for _ in range(len(g) + len(h))]
        for a, ga in enumerate(g):
            for b, hb in enumerate(h):
                out[a + b] = poly_add(out[a + b], poly_mul(ga, hb))
        while out and out[-1].is_zero():
            out.pop()
        return SymbolicF(tuple(out), self.exponent + F_prime.exponent)


# dF/dx = (1 - t)(F + t F^2)
F_PRIME = SymbolicF((ONE, T), 1)


def derivative_steps(N_max: int) -> Iterator[SymbolicF]:
    expr = SymbolicF((ONE,), 0)
    yield expr
    for _ in range(N_max):
        expr = expr.differentiate(F_PRIME)
        yield expr


def derivative_bootstrap(N_max: int) -> Triangle:
    if N_max < 0:
        raise ValueError(f"N_max must be >= 0, got {N_max}")
    rows = []
    for N, expr in enumerate(derivative_steps(N_max)):
        assert expr.exponent == N and expr.degree == N + 1
        rows.append(list(expr.coeffs))
    return rows


def expand_prefactor(expr: SymbolicF) -> list[IntPoly]:
    """Coefficients of F^1, F^2, ... with (1 - t)^exponent multiplied in."""
    pre = ONE
    for _ in range(expr.exponent):
        pre = poly_mul(pre, ONE_MINUS_T)
    return [poly_mul(pre, c) for c in expr.coeffs]


# -- cross-check ------------------------------------------------------------

ROUTES = {
    "recurrence": triangle_recurrence,
    "sum": triangle_single_sum,
    "closed": triangle_closed_form,
    "bootstrap": derivative_bootstrap,
}


@dataclass(frozen=True)
class RouteCheck:
    N_max: int
    passed: bool
    mismatch: tuple[str, int, int, IntPoly, IntPoly] | None = None  # route, N, i, expected, got

    def summary(self) -> str:
        if self.passed:
            return f"routes N_max={self.N_max}: pass ({', '.join(ROUTES)})"
        route, N, i, want, got = self.mismatch
        return (
            f"routes N_max={self.N_max}: fail, route {route!r} differs from recurrence at "
            f"(N={N}, i={i}): {want} vs {got}"
        )


def compare_triangles(reference: Triangle, other: Triangle) -> tuple[int, int] | None:
    """First (N, i) where the triangles differ, or None."""
    if len(reference) != len(other):
        n = min(len(reference), len(other))
        return (n, 0)
    for N, (r, o) in enumerate(zip(reference, other)):
        if len(r) != len(o):
            return (N, min(len(r), len(o)))
        for i, (p, q) in enumerate(zip(r, o)):
            if p != q:
                return (N, i)
    return None


def routes_cross_check(N_max: int) -> RouteCheck:
    ref = triangle_recurrence(N_max)
    for name, build in ROUTES.items():
        if name == "recurrence":
            continue
        other = build(N_max)
        where = compare_triangles(ref, other)
        if where is not None:
            N, i = where
            want = ref[N][i] if N < len(ref) and i < len(ref[N]) else IntPoly()
            got = other[N][i] if N < len(other) and i < len(other[N]) else IntPoly()
            return RouteCheck(N_max, False, (name, N, i, want, got))
    return RouteCheck(N_max, True)
