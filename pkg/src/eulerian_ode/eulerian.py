"""Eulerian polynomials A_n(t), their higher-order versions, and brute-force
oracles for checking them.

Convention: A_0 = 1, A_1 = 1, A_2 = 1 + t, A_3 = 1 + 4t + t^2, so A_n has
degree n - 1 and its coefficients count permutations by descents.

Higher-order polynomials come from the m-th power of the exponential
generating function ``(1 - t) / (exp(x (t - 1)) - t)``. Powers of an EGF are
binomial convolutions of coefficient sequences, so everything stays in the
integer polynomial ring.
"""

from __future__ import annotations

import itertools
import threading
from functools import lru_cache
from typing import Sequence

from .kernel import (
    ONE,
    IntPoly,
    binomial,
    geom_inverse_power,
    poly_add,
    poly_mul,
    poly_scale,
    series_from_poly,
    series_mul,
)
from .report import VerificationReport

T_MINUS_ONE = IntPoly((-1, 1))

_lock = threading.Lock()
_rows: list[IntPoly] = [ONE]


def eulerian_poly(n: int) -> IntPoly:
    """A_n(t) via A_n = sum_{l<n} C(n,l) A_l (t-1)^(n-1-l).

    The sum is evaluated by Horner's rule in (t - 1).
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    with _lock:
        while len(_rows) <= n:
            m = len(_rows)
            acc = IntPoly()
            for l in range(m):
                acc = poly_add(poly_mul(acc, T_MINUS_ONE), poly_scale(_rows[l], binomial(m, l)))
            _rows.append(acc)
        return _rows[n]


def eulerian_table(n_max: int) -> list[IntPoly]:
    return [eulerian_poly(n) for n in range(n_max + 1)]


def eulerian_number_oracle(n: int, k: int) -> int:
    """Eulerian number <n, k> from the explicit alternating sum.

    The j = k + 1 term has base 0; it is dropped, which is exact for n >= 1
    and gives the right answer <0, 0> = 1 for n = 0.
    """
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 0 or k >= max(n, 1):
        return 0
    return sum((-1) ** j * binomial(n + 1, j) * (k + 1 - j) ** n for j in range(k + 1))


def descent_count_oracle(n: int) -> list[int]:
    """Number of permutations of n letters with k descents, k = 0..n-1,
    by exhaustive enumeration."""
    counts = [0] * max(n, 1)
    for perm in itertools.permutations(range(n)):
        d = sum(1 for a, b in zip(perm, perm[1:]) if a > b)
        counts[d] += 1
    return counts


def egf_product(a: Sequence[IntPoly], b: Sequence[IntPoly]) -> list[IntPoly]:
    """Coefficients of the product of two exponential generating functions:
    c_n = sum_k C(n, k) a_k b_{n-k}."""
    n_max = min(len(a), len(b)) - 1
    out = []
    for n in range(n_max + 1):
        acc = IntPoly()
        for k in range(n + 1):
            acc = poly_add(acc, poly_scale(poly_mul(a[k], b[n - k]), binomial(n, k)))
        out.append(acc)
    return out


@lru_cache(maxsize=None)
def higher_eulerian_poly(m: int, n: int) -> IntPoly:
    """A_n^(m)(t) for order m >= 1.

    Order 0 is rejected: the generating family starts at m = 1.
    """
    if m < 1:
        raise ValueError(f"order m must be >= 1, got {m}")
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if m == 1:
        return eulerian_poly(n)
    # warm lower orders iteratively so the cache never recurses deeply
    for mm in range(2, m):
        higher_eulerian_poly(mm, n)
    acc = IntPoly()
    for k in range(n + 1):
        term = poly_mul(eulerian_poly(k), higher_eulerian_poly(m - 1, n - k))
        acc = poly_add(acc, poly_scale(term, binomial(n, k)))
    return acc


def higher_eulerian_table(m_max: int, n_max: int) -> list[list[IntPoly]]:
    """Rows m = 1..m_max (row index m - 1), columns n = 0..n_max."""
    return [[higher_eulerian_poly(m, n) for n in range(n_max + 1)] for m in range(1, m_max + 1)]


def higher_eulerian_fold(m: int, n_max: int, side: str = "left") -> list[IntPoly]:
    """A_0^(m) .. A_{n_max}^(m) by folding m - 1 EGF products of the
    order-1 sequence, either ((A*A)*A)... or A*(A*(A...))."""
    if m < 1:
        raise ValueError(f"order m must be >= 1, got {m}")
    base = eulerian_table(n_max)
    acc = base
    for _ in range(m - 1):
        acc = egf_product(acc, base) if side == "left" else egf_product(base, acc)
    return acc


def eq4_verify(n: int, K: int) -> VerificationReport:
    """Check A_n(t) / (1-t)^(n+1) = sum_j (j+1)^n t^j through t^K."""
    if n < 0 or K < 0:
        raise ValueError("n and K must be >= 0")
    lhs = series_mul(series_from_poly(eulerian_poly(n), K), geom_inverse_power(n + 1, K))
    rhs = type(lhs)(tuple((j + 1) ** n for j in range(K + 1)), K)
    return VerificationReport.compare("eq4", {"n": n, "K": K}, lhs, rhs)
