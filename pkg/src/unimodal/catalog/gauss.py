"""Gauss polynomials, Andrews' generalized Gauss polynomials and G_{d,n}."""

from __future__ import annotations

from functools import lru_cache

from ..series import BiSeries, ZPoly, ct_z

__all__ = [
    "gauss_binomial",
    "g_series",
    "gen_gauss",
    "gen_gauss_q2",
    "gen_gauss_r_direct",
    "cauchy_expansion",
    "cauchy_inverse_expansion",
]


def _divide_one_minus(f: ZPoly, j: int) -> ZPoly:
    """Exact quotient ``f / (1 - q^j)``; raises if the division leaves a remainder."""
    if not f:
        return f
    if f.lo != 0:
        raise ValueError("expected a polynomial with nonzero constant term")
    deg = f.hi - j
    if deg < 0:
        raise ArithmeticError(f"1 - q^{j} does not divide {f}")
    g = [0] * (deg + 1)
    for k in range(deg + 1):
        g[k] = f[k] + (g[k - j] if k >= j else 0)
    quot = ZPoly(g)
    if quot * ZPoly.from_terms({0: 1, j: -1}) != f:
        raise ArithmeticError(f"1 - q^{j} does not divide {f}")
    return quot


@lru_cache(maxsize=None)
def gauss_binomial(n: int, m: int) -> ZPoly:
    """``[n choose m]_q`` as an exact polynomial in ``q`` (zero when ``m > n``)."""
    if n < 0 or m < 0:
        raise ValueError("gauss_binomial needs n, m >= 0")
    if m > n:
        return ZPoly()
    num = ZPoly([1])
    for j in range(n - m + 1, n + 1):
        num = num * ZPoly.from_terms({0: 1, j: -1})
    for j in range(1, m + 1):
        num = _divide_one_minus(num, j)
    return num


@lru_cache(maxsize=None)
def g_series(d: int | None, n: int, zmax: int) -> BiSeries:
    """``G_{d,n}(q, z)`` with ``d=None`` for ``d = infinity``.

    Built with ``z`` as the outer variable: the denominator
    ``(z q^{1-n}; q^2)_n`` only converges z-adically.  Each z-slice is a
    Laurent polynomial in ``q``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    s = BiSeries.one(zmax, inner="q", outer="z")
    for j in range(n):
        s = s.div_factor(-1, 1 - n + 2 * j, 1)
    if d is not None:
        if d < 1:
            raise ValueError("d must be >= 1")
        e = d + 1
        for j in range(n):
            s = s.mul_factor(-1, e * (1 - n) + 2 * e * j, e)
    return s


@lru_cache(maxsize=None)
def gen_gauss_q2(kind: str, k: int, m: int, n: int) -> ZPoly:
    """The generalized Gauss polynomial with ``q`` replaced by ``q^2``.

    ``c``-kind: constant term of ``(-q^2 z; q^2)_m^k (-z^-1; q^2)_n^k``.
    ``r``-kind: ``q^{kmn}`` times the ``z^{kn}`` slice of ``G_{k,m+n}``
    (the constant term after substituting ``z -> z q^{1+m-n}``).
    """
    if k < 1 or m < 0 or n < 0:
        raise ValueError("need k >= 1 and m, n >= 0")
    if kind == "c":
        s = BiSeries.one()
        for _ in range(k):
            for j in range(m):
                s = s.mul_factor(1, 1, 2 * (j + 1))
            for j in range(n):
                s = s.mul_factor(1, -1, 2 * j)
        return ct_z(s).outer_poly()
    if kind == "r":
        g = g_series(k, m + n, k * n)
        return g.slice(k * n).shift(k * m * n)
    raise ValueError(f"kind must be 'r' or 'c', got {kind!r}")


def gen_gauss(kind: str, k: int, m: int, n: int) -> ZPoly:
    """Andrews' generalized Gauss polynomial of the given kind, in ``q``."""
    return gen_gauss_q2(kind, k, m, n).contract_power(2)


def gen_gauss_r_direct(k: int, m: int, n: int) -> ZPoly:
    """``r``-kind polynomial from the cancelled constant-term integrand.

    The ratio in the definition collapses factor by factor to
    ``prod_{j=1..m} [k+1]_{z q^j} * prod_{j=0..n-1} [k+1]_{z^-1 q^j}`` with
    ``[k+1]_x = 1 + x + ... + x^k``, so the constant term is a finite computation.
    """
    s = BiSeries.one()
    for j in range(1, m + 1):
        s = s * BiSeries.from_terms({(e, e * j): 1 for e in range(k + 1)})
    for j in range(n):
        s = s * BiSeries.from_terms({(-e, e * j): 1 for e in range(k + 1)})
    return ct_z(s).outer_poly()


def cauchy_expansion(n: int) -> BiSeries:
    """``sum_l q^{-(n-l) l} [n, l]_{q^2} z^l``, the expansion of ``(-z q^{1-n}; q^2)_n``."""
    slices = {}
    for l in range(n + 1):
        slices[l] = gauss_binomial(n, l).substitute_power(2).shift(-(n - l) * l)
    return BiSeries.from_slices(slices, None, inner="q", outer="z")


def cauchy_inverse_expansion(n: int, zmax: int) -> BiSeries:
    """``sum_l q^{-(n-1) l} [n-1+l, l]_{q^2} z^l``, the expansion of ``1/(z q^{1-n}; q^2)_n``."""
    slices = {}
    for l in range(zmax + 1):
        if n == 0:
            slices[l] = ZPoly([1]) if l == 0 else ZPoly()
        else:
            slices[l] = gauss_binomial(n - 1 + l, l).substitute_power(2).shift(-(n - 1) * l)
    return BiSeries.from_slices(slices, zmax, inner="q", outer="z")
