"""Exact integer polynomials and truncated power series in ``t``.

Scalars are plain Python ints. Polynomials are dense: ``coeffs[k]`` is the
coefficient of ``t**k`` and trailing zeros are always stripped, so the zero
polynomial has an empty coefficient tuple and degree ``-inf``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "IntPoly",
    "IntSeries",
    "NEG_INF",
    "ZERO",
    "ONE",
    "T",
    "ONE_MINUS_T",
    "binomial",
    "geom_inverse_power",
    "mul_kronecker",
    "mul_schoolbook",
    "poly_add",
    "poly_eval_int",
    "poly_mul",
    "poly_neg",
    "poly_pow",
    "poly_scale",
    "poly_shift",
    "poly_sub",
    "series_add",
    "series_from_poly",
    "series_mul",
]

NEG_INF = -math.inf

# below this many coefficients on the short side schoolbook wins
KRONECKER_THRESHOLD = 12


def _strip(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and not coeffs[n - 1]:
        n -= 1
    return tuple(coeffs[:n])


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = self.coeffs
        if not isinstance(c, tuple) or (c and not c[-1]):
            object.__setattr__(self, "coeffs", _strip(tuple(c)))

    @classmethod
    def monomial(cls, c: int, k: int) -> IntPoly:
        return cls((0,) * k + (c,)) if c else cls()

    @property
    def degree(self) -> int | float:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        return poly_add(self, _as_poly(other))

    __radd__ = __add__

    def __sub__(self, other):
        return poly_sub(self, _as_poly(other))

    def __rsub__(self, other):
        return poly_sub(_as_poly(other), self)

    def __neg__(self):
        return poly_neg(self)

    def __mul__(self, other):
        if isinstance(other, int):
            return poly_scale(self, other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return poly_pow(self, e)

    def __call__(self, x: int) -> int:
        return poly_eval_int(self, x)

    def __str__(self):
        from .render import poly_plain

        return poly_plain(self)


def _as_poly(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    raise TypeError(f"cannot combine IntPoly with {type(x).__name__}")


ZERO = IntPoly()
ONE = IntPoly((1,))
T = IntPoly((0, 1))
ONE_MINUS_T = IntPoly((1, -1))


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    a, b = p.coeffs, q.coeffs
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for k, c in enumerate(b):
        out[k] += c
    return IntPoly(_strip(out))


def poly_neg(p: IntPoly) -> IntPoly:
    return IntPoly(tuple(-c for c in p.coeffs))


def poly_sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return poly_add(p, poly_neg(q))


def poly_scale(p: IntPoly, c: int) -> IntPoly:
    if not c:
        return ZERO
    return IntPoly(tuple(c * x for x in p.coeffs))


def poly_shift(p: IntPoly, k: int) -> IntPoly:
    """Multiply by ``t**k``."""
    if not p.coeffs:
        return p
    return IntPoly((0,) * k + p.coeffs)


def mul_schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _pack(coeffs: Sequence[int], nbytes: int) -> int:
    # signed coefficients: pack magnitudes of each sign separately
    pos = b"".join(c.to_bytes(nbytes, "little") if c > 0 else bytes(nbytes) for c in coeffs)
    neg = b"".join((-c).to_bytes(nbytes, "little") if c < 0 else bytes(nbytes) for c in coeffs)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def mul_kronecker(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product by Kronecker substitution: evaluate both at a large power of
    two, multiply the two big integers, and read the digits back out."""
    if not a or not b:
        return []
    n = len(a) + len(b) - 1
    bound = max(abs(x) for x in a).bit_length() + max(abs(y) for y in b).bit_length()
    bound += min(len(a), len(b)).bit_length() + 1  # +1 for the sign
    nbytes = (bound + 7) // 8 + 1
    bits = 8 * nbytes
    prod = _pack(a, nbytes) * _pack(b, nbytes)
    raw = (prod & ((1 << (bits * n)) - 1)).to_bytes(nbytes * n, "little")
    half, full = 1 << (bits - 1), 1 << bits
    out = [0] * n
    carry = 0
    for k in range(n):
        d = int.from_bytes(raw[k * nbytes:(k + 1) * nbytes], "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        out[k] = d
    return out


def _mul_lists(a: Sequence[int], b: Sequence[int]) -> list[int]:
    if min(len(a), len(b)) < KRONECKER_THRESHOLD:
        return mul_schoolbook(a, b)
    return mul_kronecker(a, b)


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return IntPoly(_strip(_mul_lists(p.coeffs, q.coeffs)))


def poly_pow(p: IntPoly, e: int) -> IntPoly:
    if e < 0:
        raise ValueError(f"negative exponent {e}")
    result, base = ONE, p
    while e:
        if e & 1:
            result = poly_mul(result, base)
        e >>= 1
        if e:
            base = poly_mul(base, base)
    return result


def poly_eval_int(p: IntPoly, x: int) -> int:
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@dataclass(frozen=True)
class IntSeries:
    """Power series in ``t`` known through ``t**order`` inclusive."""

    coeffs: tuple[int, ...]
    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be >= 0")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(f"need {self.order + 1} coefficients, got {len(self.coeffs)}")
        if not isinstance(self.coeffs, tuple):
            object.__setattr__(self, "coeffs", tuple(self.coeffs))

    @classmethod
    def from_iter(cls, values: Iterable[int], order: int) -> IntSeries:
        return cls(tuple(values), order)

    def truncate(self, order: int) -> IntSeries:
        if order > self.order:
            raise ValueError(f"cannot raise order {self.order} to {order}")
        return IntSeries(self.coeffs[: order + 1], order)

    def __add__(self, other):
        return series_add(self, other)

    def __mul__(self, other):
        return series_mul(self, other)


def series_from_poly(p: IntPoly, K: int) -> IntSeries:
    c = p.coeffs[: K + 1]
    return IntSeries(c + (0,) * (K + 1 - len(c)), K)


def series_add(a: IntSeries, b: IntSeries) -> IntSeries:
    K = min(a.order, b.order)
    return IntSeries(tuple(x + y for x, y in zip(a.coeffs[: K + 1], b.coeffs[: K + 1])), K)


def series_mul(a: IntSeries, b: IntSeries) -> IntSeries:
    K = min(a.order, b.order)
    prod = _mul_lists(a.coeffs[: K + 1], b.coeffs[: K + 1])
    return IntSeries(tuple(prod[: K + 1]), K)


def geom_inverse_power(i: int, K: int) -> IntSeries:
    """Expansion of ``(1 - t)**(-i)`` through ``t**K``."""
    if i < 1:
        raise ValueError(f"geom_inverse_power needs i >= 1, got {i}")
    if K < 0:
        raise ValueError("order must be >= 0")
    coeffs = [1] * (K + 1)
    # c_j = C(j+i-1, i-1), built by the ratio c_j / c_{j-1} = (j+i-1)/j
    for j in range(1, K + 1):
        coeffs[j] = coeffs[j - 1] * (j + i - 1) // j
    return IntSeries(tuple(coeffs), K)
