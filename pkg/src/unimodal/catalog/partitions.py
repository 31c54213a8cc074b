"""Rank-type generating functions: plane partitions, colour partitions,
crank / k-rank, concave and convex compositions and the Kim-Lim-Lovejoy
series.  All are built in the ``(z, q)`` orientation except the plane
partition series, whose inner variable is ``q`` and outer variable ``t``."""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Sequence

from ..series import BiSeries, pochhammer

__all__ = [
    "INF",
    "plane_partition_series",
    "color_series",
    "crank_series",
    "k_rank_series",
    "COMPOSITION_KINDS",
    "composition_series",
    "kll_series",
    "unimodal_rank_u",
    "unimodal_rank_uw",
    "odd_unimodal_ou",
    "odd_strongly_unimodal_ou_star",
]

INF = math.inf


def _is_inf(b) -> bool:
    return b is None or b == INF


@lru_cache(maxsize=None)
def plane_partition_series(delta: int, omax: int) -> BiSeries:
    """``sum b_delta(l, n) q^l t^n`` from its product over ``m >= 1, 0 <= k < m``."""
    s = BiSeries.one(omax, inner="q", outer="t")
    for m in range(1, omax + 1):
        for k in range(m):
            s = s.div_factor(-1, 2 * k + 1 - m + delta, m)
    return s


def color_series(kind: str, a: int | None, b, S: Sequence[int], omax: int) -> BiSeries:
    """Refined colour-partition series over the multiset ``S``.

    ``kind='P'`` (three colours) and ``'R'`` (four colours) take ``a`` in {1, 2}
    and ``b`` a nonnegative integer or infinity; ``kind='D'`` is the product of
    ``(1 + z q^l)(1 + z^-1 q^l)``.
    """
    return _color_series(kind, a, None if _is_inf(b) else b, tuple(sorted(S)), omax)


@lru_cache(maxsize=None)
def _color_series(kind, a, b, S, omax):
    if any(l < 1 for l in S):
        raise ValueError("parts must be positive")
    s = BiSeries.one(omax)
    if kind == "D":
        for l in S:
            s = s.mul_factor(1, 1, l).mul_factor(1, -1, l)
        return s
    if kind not in ("P", "R"):
        raise ValueError(f"unknown colour kind {kind!r}")
    if a not in (1, 2):
        raise ValueError("a must be 1 or 2")
    if b is not None and b < 0:
        raise ValueError("b must be >= 0 or infinite")
    for l in S:
        if l > omax:
            continue
        s = s.mul_factor(-1, 0, (3 - a) * l).div_factor(-1, 0, l)
        if b is not None:
            s = s.mul_factor(-1, b + 1, (b + 1) * l).mul_factor(-1, -(b + 1), (b + 1) * l)
        s = s.div_factor(-1, 1, l).div_factor(-1, -1, l)
        if kind == "R":
            s = s.div_factor(-1, 0, l)
    return s


@lru_cache(maxsize=None)
def crank_series(omax: int) -> BiSeries:
    """``(q;q)_inf / (xq, x^-1 q; q)_inf``."""
    s = pochhammer(-1, 0, 1, 1, None, omax)
    for j in range(1, omax + 1):
        s = s.div_factor(-1, 1, j).div_factor(-1, -1, j)
    return s


def _rank_tuples(k: int, omax: int):
    """Nondecreasing ``(n_1, ..., n_{k-1})`` with ``sum n_i^2 <= omax``."""

    def rec(prefix, budget, lo, left):
        if left == 0:
            yield tuple(prefix)
            return
        v = lo
        # remaining entries are all >= v, so they cost at least left * v^2
        while left * v * v <= budget:
            yield from rec(prefix + [v], budget - v * v, v, left - 1)
            v += 1

    yield from rec([], omax, 0, k - 1)


@lru_cache(maxsize=None)
def k_rank_series(k: int, omax: int) -> BiSeries:
    """Garvan's k-rank series; ``k = 2`` is Dyson's rank."""
    if k < 2:
        raise ValueError("k must be >= 2")
    total = BiSeries.zero(omax)
    for ns in _rank_tuples(k, omax):
        e = sum(v * v for v in ns)
        term = BiSeries.one(omax - e)
        n1 = ns[0]
        for j in range(1, n1 + 1):
            term = term.div_factor(-1, 1, j).div_factor(-1, -1, j)
        for lo, hi in zip(ns, ns[1:]):
            for j in range(1, hi - lo + 1):
                term = term.div_factor(-1, 0, j)
        total = total + term.shift(0, e)
    return total


COMPOSITION_KINDS = ("V", "VD", "X", "XD", "VO", "VOD", "XO", "XOD")


@lru_cache(maxsize=None)
def composition_series(kind: str, omax: int) -> BiSeries:
    """Rank generating function of (odd) concave / convex compositions.

    ``V``/``VD``: concave / strictly concave, ``X``/``XD``: convex / strictly
    convex, and the ``O`` variants restrict every part to odd integers.
    """
    if kind not in COMPOSITION_KINDS:
        raise ValueError(f"unknown composition kind {kind!r}")
    odd = "O" in kind
    strict = kind.endswith("D")
    step = 2 if odd else 1
    total = BiSeries.zero(omax)
    if kind.startswith("V"):
        # centre c with all flanking parts > c; walk c downward so the flank
        # product only ever gains factors
        top = omax if not odd or omax % 2 else omax - 1
        flank = BiSeries.one(omax)
        for c in range(top, -1 if not odd else 0, -step):
            total = total + flank.shift(0, c)
            if c >= 1:
                flank = _flank_factor(flank, c, strict)
    else:
        # centre c with all flanking parts < c; walk c upward
        flank = BiSeries.one(omax)
        for c in range(1, omax + 1, step):
            total = total + flank.shift(0, c)
            flank = _flank_factor(flank, c, strict)
    return total


def _flank_factor(s: BiSeries, part: int, strict: bool) -> BiSeries:
    if strict:
        return s.mul_factor(1, 1, part).mul_factor(1, -1, part)
    return s.div_factor(-1, 1, part).div_factor(-1, -1, part)


KLL_KINDS = ("UOB", "W_NEGQ", "Z")


@lru_cache(maxsize=None)
def kll_series(kind: str, omax: int) -> BiSeries:
    """``U_ob(z, q)``, ``W(z, -q)`` and ``Z(z, q)`` as truncated series."""
    total = BiSeries.zero(omax)
    term = BiSeries.one(omax).div_factor(-1, 0, 1)  # the n = 0 summand, 1/(1-q)
    n = 0
    while True:
        e = 2 * n if kind == "W_NEGQ" else n
        if e > omax:
            break
        total = total + term.shift(0, e)
        n += 1
        if kind == "UOB":
            term = term.mul_factor(1, 1, n).mul_factor(1, -1, n).div_factor(-1, 0, 2 * n + 1)
        elif kind == "Z":
            term = (term.mul_factor(1, 1, n).mul_factor(1, -1, n)
                    .div_factor(-1, 0, 2 * n).div_factor(-1, 0, 2 * n + 1))
        elif kind == "W_NEGQ":
            # (q; -q)_{2n+1} gains (1 + q^{2n}) (1 - q^{2n+1})
            term = (term.mul_factor(1, 1, 2 * n - 1).mul_factor(1, -1, 2 * n - 1)
                    .div_factor(1, 0, 2 * n).div_factor(-1, 0, 2 * n + 1))
        else:
            raise ValueError(f"unknown series {kind!r}")
    return total


# Aliases between composition ranks and unimodal-sequence ranks.

def unimodal_rank_u(m: int, n: int) -> int:
    """Strongly unimodal sequences of size ``n`` and rank ``m``: ``X_d(m, n)``."""
    return composition_series("XD", max(n, 0)).coeff(m, n)


def unimodal_rank_uw(m: int, n: int) -> int:
    """Unimodal sequences of size ``n`` and rank ``m``: ``X(m, n + 1)``."""
    return composition_series("X", n + 1).coeff(m, n + 1)


def odd_unimodal_ou(m: int, n: int) -> int:
    """Odd unimodal sequences: ``XO(m, n + 2)``."""
    return composition_series("XO", n + 2).coeff(m, n + 2)


def odd_strongly_unimodal_ou_star(m: int, n: int) -> int:
    """Odd strongly unimodal sequences: ``XO_d(m, n)``."""
    return composition_series("XOD", max(n, 0)).coeff(m, n)
