"""Jacobi-form series for genus-0 Gromov-Witten invariants of Hilb^d(K3).

All builders use inner variable ``y`` and outer variable ``q``.  The closed
forms below have every fractional power of ``q`` and ``y`` already cancelled;
:class:`FracSeries` recomputes the same objects from ``eta`` and ``theta_1``
with exact rational offsets so the cancellation can be checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from ..series import BiSeries, apply_q_ddq, pochhammer, series_inv

__all__ = [
    "OB_KINDS",
    "catalan",
    "oberdieck_series",
    "FracSeries",
    "eta",
    "eta_2tau",
    "theta1",
    "a_from_theta",
    "n_from_theta",
]

OB_KINDS = ("A", "B", "N", "N1", "N3")

_Y = dict(inner="y", outer="q")


def catalan(n: int) -> int:
    num = comb(2 * n, n)
    c, r = divmod(num, n + 1)
    assert r == 0
    return c


def _y_poly(terms: dict[tuple[int, int], int]) -> BiSeries:
    return BiSeries.from_terms(terms, None, **_Y)


_Y_PLUS_2 = {(-1, 0): 1, (0, 0): 2, (1, 0): 1}


def _qq_power(s: BiSeries, k: int, step: int = 1) -> BiSeries:
    """Multiply by ``(q^step; q^step)_inf ** k`` (``k`` may be negative)."""
    top = s.omax
    for j in range(step, top + 1, step):
        for _ in range(abs(k)):
            s = s.mul_factor(-1, 0, j) if k > 0 else s.div_factor(-1, 0, j)
    return s


def _theta_core(s: BiSeries, power: int) -> BiSeries:
    """Multiply by ``(-yq, -y^-1 q; q)_inf ** power`` (``power >= 0``)."""
    for j in range(1, s.omax + 1):
        for _ in range(power):
            s = s.mul_factor(1, 1, j).mul_factor(1, -1, j)
    return s


@lru_cache(maxsize=None)
def _series_a(omax: int) -> BiSeries:
    s = BiSeries.one(omax, **_Y) * _y_poly(_Y_PLUS_2)
    return _qq_power(_theta_core(s, 2), -3)


@lru_cache(maxsize=None)
def _series_b(omax: int) -> BiSeries:
    p2 = BiSeries.one(omax, **_Y)
    for j in range(1, omax + 1):
        for _ in range(2):
            p2 = p2.mul_factor(1, 0, j).mul_factor(1, 1, j).mul_factor(1, -1, j)
    total = p2
    for m in range(1, omax + 1):
        # (y^-1 + 2 + y)(4 q^m + (y^-1 + y)(1 + q^{2m})) q^m
        inner = _y_poly({(0, m): 4, (-1, 0): 1, (1, 0): 1, (-1, 2 * m): 1, (1, 2 * m): 1})
        lead = _y_poly(_Y_PLUS_2) * inner
        body = p2.truncate(omax - m)
        for _ in range(2):
            body = body.div_factor(1, -1, m).div_factor(1, 1, m)
        total = total + (body * lead).shift(0, m)
    return total


@lru_cache(maxsize=None)
def _g_power(d: int, omax: int) -> BiSeries:
    """``G^{d-1}`` with ``G = B (q;q)^-2 (q^2;q^2)^-2``."""
    g = _qq_power(_qq_power(_series_b(omax), -2), -2, step=2)
    return g ** (d - 1) if d > 1 else BiSeries.one(omax, **_Y)


@lru_cache(maxsize=None)
def oberdieck_series(kind: str, d: int | None, omax: int) -> BiSeries:
    """The normalized series ``A``, ``B`` (Proposition-level objects) and the
    generating series ``N``, ``N1``, ``N3`` of ``N_{d,h,k}`` at ``y^k q^{h-1}``."""
    if kind == "A":
        return _series_a(omax)
    if kind == "B":
        return _series_b(omax)
    if kind not in OB_KINDS:
        raise ValueError(f"unknown series {kind!r}")
    if d is None or d < 1:
        raise ValueError("d must be >= 1")
    w = omax + 1  # room for the q^-1 prefactor
    if kind == "N":
        s = BiSeries.one(w, **_Y)
        for _ in range(d - 1):
            s = s * _y_poly(_Y_PLUS_2)
        s = _qq_power(_theta_core(s, 2 * d - 2), -4 * d - 20)
    elif kind == "N1":
        s = _qq_power(_g_power(d, w), -24)
    else:
        s = _qq_power(apply_q_ddq(_g_power(d, w)), -24) * catalan(d - 1)
    return s.shift(0, -1)


# ---------------------------------------------------------------------- fractional offsets


@dataclass(frozen=True)
class FracSeries:
    """``q^qoff y^yoff * body`` with rational offsets and an integral body."""

    qoff: Fraction
    yoff: Fraction
    body: BiSeries

    def __mul__(self, other: "FracSeries") -> "FracSeries":
        return FracSeries(self.qoff + other.qoff, self.yoff + other.yoff, self.body * other.body)

    def __pow__(self, k: int) -> "FracSeries":
        body = self.body ** k if k >= 0 else series_inv(self.body) ** (-k)
        return FracSeries(self.qoff * k, self.yoff * k, body)

    def scale_q(self, e: Fraction) -> "FracSeries":
        return FracSeries(self.qoff + e, self.yoff, self.body)

    def to_series(self, omax: int) -> BiSeries:
        if self.qoff.denominator != 1 or self.yoff.denominator != 1:
            raise ValueError(f"offsets do not cancel: q^{self.qoff} y^{self.yoff}")
        return self.body.shift(int(self.yoff), int(self.qoff)).truncate(omax)


def eta(omax: int) -> FracSeries:
    """``q^{1/24} (q;q)_inf``."""
    return FracSeries(Fraction(1, 24), Fraction(0), pochhammer(-1, 0, 1, 1, None, omax, **_Y))


def eta_2tau(omax: int) -> FracSeries:
    """``q^{1/12} (q^2;q^2)_inf``."""
    return FracSeries(Fraction(1, 12), Fraction(0), pochhammer(-1, 0, 2, 2, None, omax, **_Y))


def theta1(omax: int) -> FracSeries:
    """``q^{1/8} (y^-1/2 + y^1/2) (q, -yq, -y^-1 q; q)_inf``."""
    body = _y_poly({(0, 0): 1, (1, 0): 1})
    body = body * pochhammer(-1, 0, 1, 1, None, omax, **_Y)
    body = body * pochhammer(1, 1, 1, 1, None, omax, **_Y)
    body = body * pochhammer(1, -1, 1, 1, None, omax, **_Y)
    return FracSeries(Fraction(1, 8), Fraction(-1, 2), body.truncate(omax))


def a_from_theta(omax: int) -> BiSeries:
    """``q^{-1/24} eta^-5 theta_1^2`` from the raw definitions."""
    return ((eta(omax) ** -5) * (theta1(omax) ** 2)).scale_q(Fraction(-1, 24)).to_series(omax)


def n_from_theta(d: int, omax: int) -> BiSeries:
    """``eta^-24 (theta_1 / eta^3)^{2d-2}`` from the raw definitions."""
    w = omax + 2
    th = theta1(w) * (eta(w) ** -3)
    return ((eta(w) ** -24) * (th ** (2 * d - 2))).to_series(omax)
