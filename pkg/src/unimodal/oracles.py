"""Brute-force enumerators that serve as ground truth for the catalog.

Nothing here touches series arithmetic: every count comes from listing the
combinatorial objects one by one.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .series import ZPoly

__all__ = [
    "BOUNDS",
    "BoundExceeded",
    "Histogram",
    "count_partitions",
    "enum_partitions",
    "enum_plane_partitions",
    "plane_partition_histogram",
    "enum_f_partitions",
    "enum_compositions",
    "enum_color_partitions",
]

# Default enumeration limits, chosen to keep the full oracle pass well under two minutes.
BOUNDS = {
    "partitions": 60,
    "plane_partitions": 12,
    "f_partitions": 6,
    "compositions": 18,
    "color_partitions": 15,
}


class BoundExceeded(ValueError):
    """Requested size is beyond the configured enumeration bound."""


def _check(kind: str, n: int, bound: int | None = None) -> None:
    limit = BOUNDS[kind] if bound is None else bound
    if n > limit:
        raise BoundExceeded(f"{kind} enumeration bound is {limit}, got {n}")


@dataclass
class Histogram:
    """Counts of a statistic ``m`` over a finite family of objects."""

    counts: Counter = field(default_factory=Counter)

    @classmethod
    def of(cls, values: Iterable[int]) -> "Histogram":
        return cls(Counter(values))

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def __getitem__(self, m: int) -> int:
        return self.counts.get(m, 0)

    def as_dict(self) -> dict[int, int]:
        return {m: c for m, c in sorted(self.counts.items()) if c}

    def to_zpoly(self) -> ZPoly:
        return ZPoly.from_terms(self.counts)

    def is_symmetric(self) -> bool:
        return all(self[-m] == c for m, c in self.counts.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Histogram):
            return self.as_dict() == other.as_dict()
        if isinstance(other, dict):
            return self.as_dict() == {m: c for m, c in other.items() if c}
        return NotImplemented


# ---------------------------------------------------------------------- partitions


def enum_partitions(
    n: int,
    parts: Iterable[int] | None = None,
    distinct: bool = False,
    max_mult: int | None = None,
    bound: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """Partitions of ``n`` as nonincreasing tuples, optionally restricted to a
    set of allowed parts, distinct parts or a multiplicity cap."""
    _check("partitions", n, bound)
    if n < 0:
        return
    allowed = sorted(set(range(1, n + 1) if parts is None else (p for p in parts if 1 <= p <= n)),
                     reverse=True)
    cap = 1 if distinct else max_mult

    def rec(rem: int, idx: int, acc: list[int]):
        if rem == 0:
            yield tuple(acc)
            return
        for k in range(idx, len(allowed)):
            p = allowed[k]
            if p > rem:
                continue
            most = rem // p if cap is None else min(cap, rem // p)
            for mult in range(most, 0, -1):
                acc.extend([p] * mult)
                yield from rec(rem - p * mult, k + 1, acc)
                del acc[-mult:]

    yield from rec(n, 0, [])


def count_partitions(n: int) -> int:
    """``p(n)`` by listing partitions."""
    return sum(1 for _ in enum_partitions(n))


# ---------------------------------------------------------------------- plane partitions


def _rows_under(prev: Sequence[int], rem: int) -> Iterator[tuple[int, ...]]:
    """Nonempty nonincreasing rows of sum ``<= rem`` fitting entrywise under ``prev``."""

    def rec(j: int, cap: int, left: int, acc: list[int]):
        if acc:
            yield tuple(acc)
        if j >= len(prev):
            return
        for v in range(min(cap, prev[j], left), 0, -1):
            acc.append(v)
            yield from rec(j + 1, v, left - v, acc)
            acc.pop()

    yield from rec(0, rem, rem, [])


def enum_plane_partitions(n: int, bound: int | None = None) -> list[tuple[int, int, int]]:
    """Diagonal weight triples ``(w_-, w_0, w_+)`` of every plane partition of ``n``.

    ``w_-`` sums entries strictly above the diagonal (row < column).
    """
    _check("plane_partitions", n, bound)
    out: list[tuple[int, int, int]] = []

    def rec(rows: list[tuple[int, ...]], rem: int):
        if rem == 0:
            out.append(_diag_weights(rows))
            return
        prev = rows[-1] if rows else (rem,) * rem
        for row in _rows_under(prev, rem):
            rows.append(row)
            rec(rows, rem - sum(row))
            rows.pop()

    rec([], n)
    return out


def _diag_weights(rows: list[tuple[int, ...]]) -> tuple[int, int, int]:
    wm = w0 = wp = 0
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if i < j:
                wm += v
            elif i == j:
                w0 += v
            else:
                wp += v
    return wm, w0, wp


def plane_partition_histogram(delta: int, n: int) -> Histogram:
    """Histogram of ``w_- - w_+ + delta * w_0``."""
    return Histogram.of(wm - wp + delta * w0 for wm, w0, wp in enum_plane_partitions(n))


# ---------------------------------------------------------------------- Frobenius partitions


def enum_f_partitions(m: int, n: int, j: int) -> int:
    """Two-row arrays with strictly decreasing rows, top entries ``< m``, bottom
    entries ``< n``, and weight ``r + sum(top) + sum(bottom) == j``."""
    _check("f_partitions", max(m, n))
    if j > m * n:
        raise BoundExceeded(f"j must be <= m*n = {m * n}")
    count = 0
    for r in range(min(m, n) + 1):
        for top in combinations(range(m), r):
            st = sum(top)
            for bottom in combinations(range(n), r):
                if r + st + sum(bottom) == j:
                    count += 1
    return count


# ---------------------------------------------------------------------- compositions


COMPOSITION_KINDS = ("V", "VD", "X", "XD", "VO", "VOD", "XO", "XOD")


def _side_lengths(w: int, allowed: list[int], distinct: bool) -> Counter:
    """Number-of-parts distribution over partitions of ``w`` into ``allowed`` parts."""
    if w == 0:
        return Counter({0: 1})
    if not allowed:
        return Counter()
    return Counter(len(p) for p in enum_partitions(w, allowed, distinct, bound=math.inf))


def enum_compositions(kind: str, n: int) -> Histogram:
    """Rank histogram (parts after the centre minus parts before) of the
    concave (``V``) or convex (``X``) compositions of ``n``; ``D`` = strict,
    ``O`` = all parts odd."""
    if kind not in COMPOSITION_KINDS:
        raise ValueError(f"unknown composition kind {kind!r}")
    _check("compositions", n)
    odd = "O" in kind
    distinct = kind.endswith("D")
    concave = kind.startswith("V")
    hist: Counter = Counter()
    lowest = 1 if (odd or not concave) else 0
    for c in range(lowest, n + 1):
        if odd and c % 2 == 0:
            continue
        if concave:
            allowed = [p for p in range(c + 1, n + 1)]
        else:
            allowed = [p for p in range(1, c)]
        if odd:
            allowed = [p for p in allowed if p % 2]
        rest = n - c
        for left in range(rest + 1):
            lhs = _side_lengths(left, allowed, distinct)
            if not lhs:
                continue
            rhs = _side_lengths(rest - left, allowed, distinct)
            for R, a in lhs.items():
                for S, b in rhs.items():
                    hist[S - R] += a * b
    return Histogram(hist)


# ---------------------------------------------------------------------- colour partitions


def enum_color_partitions(kind: str, a: int | None, b, S: Sequence[int], n: int) -> Histogram:
    """Histogram of (#green parts - #blue parts) over coloured partitions of ``n``.

    Every copy of a value in the multiset ``S`` is its own part type.  ``P``:
    red (at most ``2 - a`` each), green and blue (at most ``b`` each);
    ``R`` adds unrestricted yellow; ``D``: at most one green and one blue each.
    """
    _check("color_partitions", n)
    if kind == "D":
        caps = {"red": 0, "yellow": 0, "gb": 1}
    elif kind in ("P", "R"):
        if a not in (1, 2):
            raise ValueError("a must be 1 or 2")
        caps = {
            "red": 2 - a,
            "yellow": None if kind == "R" else 0,
            "gb": None if b is None or b == math.inf else int(b),
        }
    else:
        raise ValueError(f"unknown colour kind {kind!r}")
    types = [l for l in S if l >= 1]
    hist: Counter = Counter()

    def upto(cap, l, rem):
        most = rem // l
        return range(most + 1 if cap is None else min(cap, most) + 1)

    def rec(idx: int, rem: int, diff: int, ways: int):
        if idx == len(types):
            if rem == 0:
                hist[diff] += ways
            return
        l = types[idx]
        for red in upto(caps["red"], l, rem):
            r1 = rem - red * l
            for yel in upto(caps["yellow"], l, r1):
                r2 = r1 - yel * l
                for g in upto(caps["gb"], l, r2):
                    r3 = r2 - g * l
                    for u in upto(caps["gb"], l, r3):
                        rec(idx + 1, r3 - u * l, diff + g - u, ways)

    rec(0, n, 0, 1)
    return Histogram(hist)
