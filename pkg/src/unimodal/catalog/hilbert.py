"""Betti-number series of Hilbert schemes of points on a surface."""

from __future__ import annotations

from functools import lru_cache
from math import comb

from ..series import BiSeries, ZPoly

__all__ = [
    "hilbert_series",
    "poincare_unsigned",
    "g_factor",
    "f_nu",
    "multichoose",
    "c_coefficient",
]


@lru_cache(maxsize=None)
def hilbert_series(b0: int, b1: int, b2: int, omax: int) -> BiSeries:
    """``prod_k [(1+zq^k)(1+z^-1 q^k)]^b1 / ((1-q^k)^b2 [(1-z^2 q^k)(1-z^-2 q^k)]^b0)``."""
    if min(b0, b1, b2) < 0:
        raise ValueError("Betti numbers must be nonnegative")
    s = BiSeries.one(omax)
    for k in range(1, omax + 1):
        s = _apply_factor(s, k, b0, b1, b2)
    return s


def _apply_factor(s: BiSeries, k: int, b0: int, b1: int, b2: int) -> BiSeries:
    for _ in range(b1):
        s = s.mul_factor(1, 1, k).mul_factor(1, -1, k)
    for _ in range(b2):
        s = s.div_factor(-1, 0, k)
    for _ in range(b0):
        s = s.div_factor(-1, 2, k).div_factor(-1, -2, k)
    return s


def poincare_unsigned(b0: int, b1: int, b2: int) -> ZPoly:
    """``z^-2 (b0 + b1 z + b2 z^2 + b1 z^3 + b0 z^4)``, the ``q^1`` slice of :func:`hilbert_series`."""
    return ZPoly([b0, b1, b2, b1, b0], -2)


def g_factor(b0: int, b1: int, b2: int, omax: int) -> BiSeries:
    """The ``k = 1`` factor of the product alone."""
    return _apply_factor(BiSeries.one(omax), 1, b0, b1, b2)


def f_nu(nu: int, b0: int, b1: int, b2: int, omax: int) -> BiSeries:
    """``[(1+zq)(1+z^-1 q)]^b1 / ((1-q)^{b_{2-nu}} [(1-z^2 q)(1-z^-2 q)]^b0)``."""
    if nu not in (1, 2):
        raise ValueError("nu must be 1 or 2")
    return g_factor(b0, b1, b1 if nu == 1 else b0, omax)


def multichoose(b: int, i: int) -> int:
    """``binom(b - 1 + i, i)``, the ``x^i`` coefficient of ``(1 - x)^-b`` (so ``b = 0`` gives ``[i == 0]``)."""
    if i < 0:
        return 0
    if i == 0:
        return 1
    return comb(b - 1 + i, i)


def c_coefficient(nu: int, b0: int, b1: int, b2: int, i: int, n: int) -> int:
    """``[z^i q^n] f_nu`` from the closed-form quintuple binomial sum."""
    be = b1 if nu == 1 else b0
    total = 0
    for r in range(min(n, b1) + 1):
        for s in range(min(n - r, b1) + 1):
            rest = n - r - s
            # 2(i1 - i2) = i - (s - r) must be even
            d2 = i - (s - r)
            if d2 % 2:
                continue
            d = d2 // 2
            for i2 in range(rest + 1):
                i1 = i2 + d
                i0 = rest - i1 - i2
                if i1 < 0 or i0 < 0:
                    continue
                total += (multichoose(be, i0) * multichoose(b0, i1) * multichoose(b0, i2)
                          * comb(b1, r) * comb(b1, s))
    return total
