"""Exact truncated bivariate Laurent series with integer coefficients.

A :class:`BiSeries` is ``sum c[i, j] x**i t**j`` where ``x`` is the *inner*
variable (the one unimodality is checked in) and ``t`` is the *outer*
variable (the one the series is truncated in).  Coefficients with outer
exponent ``j <= omax`` are exact; nothing beyond ``omax`` is represented.
``omax=None`` marks an exact finite Laurent polynomial.

Storage is a dense 2-D numpy array of Python ints (``dtype=object``): row
``r`` holds the slice at outer exponent ``omin + r`` and column ``k`` the
inner exponent ``imin + k``.  Values are never mutated after construction.

The workhorses are :meth:`BiSeries.mul_factor` and
:meth:`BiSeries.div_factor`, multiplication and division by a binomial
``1 + c x**a t**b`` in time linear in the size of the series; Pochhammer
products and the catalog builders are assembled from them.
"""

from __future__ import annotations

import math
import os
from typing import Iterable, Iterator, Mapping

import numpy as np

__all__ = [
    "ZPoly",
    "BiSeries",
    "TruncationError",
    "OrientationError",
    "MemoryLimitError",
    "series_add",
    "series_mul",
    "series_inv",
    "geom_inv",
    "pochhammer",
    "transpose",
    "apply_y_ddy",
    "apply_q_ddq",
    "ct_z",
]

# Rough per-cell footprint of an object array holding small Python ints.
_BYTES_PER_CELL = 40


class TruncationError(ValueError):
    """An operation needed coefficients beyond a series' truncation order."""


class OrientationError(ValueError):
    """Operands disagree on which variable is inner and which is outer."""


class MemoryLimitError(MemoryError):
    """A builder would exceed the ``US_MAX_MEMORY_MB`` soft cap."""


def _alloc(rows: int, cols: int) -> np.ndarray:
    cap = os.environ.get("US_MAX_MEMORY_MB")
    if cap:
        need = rows * cols * _BYTES_PER_CELL
        if need > float(cap) * 2**20:
            raise MemoryLimitError(
                f"{rows}x{cols} coefficient block needs ~{need / 2**20:.1f} MB "
                f"(US_MAX_MEMORY_MB={cap})"
            )
    return np.zeros((max(rows, 0), max(cols, 0)), dtype=object)


def _fmt_term(c: int, var: str, e: int) -> str:
    if e == 0:
        return str(c)
    mono = var if e == 1 else f"{var}^{e}"
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    return f"{c}*{mono}"


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


class ZPoly:
    """Finite Laurent polynomial in one variable, stored densely.

    ``ZPoly([1, 2, 1], lo=-1)`` is ``x^-1 + 2 + x``.  Leading and trailing
    zeros are stripped, so equal polynomials compare and hash equal.  The zero
    polynomial has ``lo == 0`` and ``hi == -1``.
    """

    __slots__ = ("lo", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), lo: int = 0):
        c = [int(v) for v in coeffs]
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        self.coeffs: tuple[int, ...] = tuple(c[start:end])
        self.lo: int = lo + start if self.coeffs else 0

    @classmethod
    def from_terms(cls, terms: Mapping[int, int]) -> "ZPoly":
        terms = {int(e): int(c) for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def monomial(cls, c: int, e: int = 0) -> "ZPoly":
        return cls([c], e)

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, e: int) -> int:
        k = e - self.lo
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def terms(self) -> dict[int, int]:
        return {self.lo + k: c for k, c in enumerate(self.coeffs) if c}

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self.terms().items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = ZPoly([other])
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.lo, self.coeffs))

    def __repr__(self) -> str:
        return f"ZPoly({self.to_str()})"

    def to_str(self, var: str = "x") -> str:
        return _join([_fmt_term(c, var, e) for e, c in sorted(self.terms().items())])

    def __neg__(self) -> "ZPoly":
        return ZPoly([-c for c in self.coeffs], self.lo)

    def __add__(self, other: "ZPoly | int") -> "ZPoly":
        if isinstance(other, int):
            other = ZPoly([other])
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        return ZPoly([self[e] + other[e] for e in range(lo, hi + 1)], lo)

    __radd__ = __add__

    def __sub__(self, other: "ZPoly | int") -> "ZPoly":
        if isinstance(other, int):
            other = ZPoly([other])
        return self + (-other)

    def __mul__(self, other: "ZPoly | int") -> "ZPoly":
        if isinstance(other, int):
            return ZPoly([c * other for c in self.coeffs], self.lo)
        if not self.coeffs or not other.coeffs:
            return ZPoly()
        a, b = self.coeffs, other.coeffs
        if len(a) * len(b) > 400:
            out = np.convolve(np.array(a, dtype=object), np.array(b, dtype=object))
            return ZPoly(out.tolist(), self.lo + other.lo)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return ZPoly(out, self.lo + other.lo)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ZPoly":
        out = ZPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "ZPoly":
        """Multiply by ``x**k``."""
        return ZPoly(self.coeffs, self.lo + k)

    def mirror(self) -> "ZPoly":
        """Substitute ``x -> 1/x``."""
        return ZPoly(self.coeffs[::-1], -self.hi) if self.coeffs else ZPoly()

    def at_one(self) -> int:
        return sum(self.coeffs)

    def substitute_power(self, k: int) -> "ZPoly":
        """Substitute ``x -> x**k`` (``k >= 1``)."""
        return ZPoly.from_terms({e * k: c for e, c in self.terms().items()})

    def contract_power(self, k: int) -> "ZPoly":
        """Inverse of :meth:`substitute_power`; every exponent must divide by ``k``."""
        terms = self.terms()
        bad = [e for e in terms if e % k]
        if bad:
            raise ValueError(f"exponent {bad[0]} is not divisible by {k}")
        return ZPoly.from_terms({e // k: c for e, c in terms.items()})


class BiSeries:
    """Truncated bivariate Laurent series; see the module docstring."""

    __slots__ = ("_data", "omin", "imin", "omax", "inner", "outer")

    def __init__(
        self,
        data: np.ndarray,
        omin: int = 0,
        imin: int = 0,
        omax: int | None = None,
        inner: str = "z",
        outer: str = "q",
    ):
        if inner == outer:
            raise OrientationError("inner and outer variables must differ")
        data = np.asarray(data, dtype=object)
        if data.ndim != 2:
            raise ValueError("coefficient block must be 2-D")
        if omax is not None and data.shape[0] > omax - omin + 1:
            data = data[: max(omax - omin + 1, 0)]
        if data.size:
            nz = data != 0
            rows = np.flatnonzero(nz.any(axis=1))
            cols = np.flatnonzero(nz.any(axis=0))
        else:
            rows = cols = ()
        if len(rows) == 0:
            data = _alloc(0, 0)
            omin = imin = 0
        else:
            r0, r1, c0, c1 = rows[0], rows[-1], cols[0], cols[-1]
            data = data[r0 : r1 + 1, c0 : c1 + 1].copy()
            omin += int(r0)
            imin += int(c0)
        data.flags.writeable = False
        self._data = data
        self.omin = omin
        self.imin = imin
        self.omax = omax
        self.inner = inner
        self.outer = outer

    # ------------------------------------------------------------------ constructors

    @classmethod
    def zero(cls, omax: int | None = None, inner: str = "z", outer: str = "q") -> "BiSeries":
        return cls(_alloc(0, 0), omax=omax, inner=inner, outer=outer)

    @classmethod
    def one(cls, omax: int | None = None, inner: str = "z", outer: str = "q") -> "BiSeries":
        return cls.monomial(1, 0, 0, omax, inner, outer)

    @classmethod
    def monomial(
        cls, c: int, i: int, j: int, omax: int | None = None, inner: str = "z", outer: str = "q"
    ) -> "BiSeries":
        data = _alloc(1, 1)
        data[0, 0] = int(c)
        return cls(data, j, i, omax, inner, outer)

    @classmethod
    def from_terms(
        cls,
        terms: Mapping[tuple[int, int], int],
        omax: int | None = None,
        inner: str = "z",
        outer: str = "q",
    ) -> "BiSeries":
        """Build from ``{(inner_exp, outer_exp): coeff}``."""
        terms = {k: int(v) for k, v in terms.items() if v}
        if not terms:
            return cls.zero(omax, inner, outer)
        imin = min(i for i, _ in terms)
        omin = min(j for _, j in terms)
        data = _alloc(max(j for _, j in terms) - omin + 1, max(i for i, _ in terms) - imin + 1)
        for (i, j), c in terms.items():
            data[j - omin, i - imin] += c
        return cls(data, omin, imin, omax, inner, outer)

    @classmethod
    def from_slices(
        cls,
        slices: Mapping[int, ZPoly],
        omax: int | None = None,
        inner: str = "z",
        outer: str = "q",
    ) -> "BiSeries":
        terms = {}
        for j, p in slices.items():
            for i, c in p.terms().items():
                terms[(i, j)] = c
        return cls.from_terms(terms, omax, inner, outer)

    @classmethod
    def from_outer_poly(
        cls, p: ZPoly, omax: int | None = None, inner: str = "z", outer: str = "q"
    ) -> "BiSeries":
        """Embed a univariate polynomial in the outer variable."""
        return cls.from_terms({(0, e): c for e, c in p.terms().items()}, omax, inner, outer)

    def _like(self, data: np.ndarray, omin: int, imin: int, omax: int | None) -> "BiSeries":
        return BiSeries(data, omin, imin, omax, self.inner, self.outer)

    # ------------------------------------------------------------------ accessors

    @property
    def data(self) -> np.ndarray:
        """Read-only coefficient block (rows = outer, columns = inner)."""
        return self._data

    @property
    def orientation(self) -> str:
        return f"inner-{self.inner}"

    @property
    def exact(self) -> bool:
        return self.omax is None

    def is_zero(self) -> bool:
        return self._data.shape[0] == 0

    @property
    def top(self) -> int:
        """Highest outer exponent with a stored (nonzero) slice, or ``omin - 1``."""
        return self.omin + self._data.shape[0] - 1

    @property
    def imax(self) -> int:
        return self.imin + self._data.shape[1] - 1

    @property
    def window(self) -> tuple[int, int]:
        return (self.omin, self.top if self.omax is None else self.omax)

    def low(self) -> int | None:
        """Lowest outer exponent carrying a nonzero slice (None for the zero series)."""
        return None if self.is_zero() else self.omin

    def coeff(self, i: int, j: int) -> int:
        if self.omax is not None and j > self.omax:
            raise TruncationError(f"{self.outer}^{j} lies beyond the truncation order {self.omax}")
        r, k = j - self.omin, i - self.imin
        if 0 <= r < self._data.shape[0] and 0 <= k < self._data.shape[1]:
            return self._data[r, k]
        return 0

    def slice(self, j: int) -> ZPoly:
        """Inner polynomial at outer exponent ``j``."""
        if self.omax is not None and j > self.omax:
            raise TruncationError(f"{self.outer}^{j} lies beyond the truncation order {self.omax}")
        r = j - self.omin
        if 0 <= r < self._data.shape[0]:
            return ZPoly(self._data[r].tolist(), self.imin)
        return ZPoly()

    __getitem__ = slice

    def slices(self) -> Iterator[tuple[int, ZPoly]]:
        """Stored slices in increasing outer exponent (zero slices between are included)."""
        for r in range(self._data.shape[0]):
            yield self.omin + r, ZPoly(self._data[r].tolist(), self.imin)

    def terms(self) -> dict[tuple[int, int], int]:
        out = {}
        for r, k in zip(*np.nonzero(self._data != 0)):
            out[(self.imin + int(k), self.omin + int(r))] = self._data[r, k]
        return out

    def outer_poly(self) -> ZPoly:
        """The series as a polynomial in the outer variable; inner support must be {0}."""
        if not self.is_zero() and (self.imin != 0 or self._data.shape[1] != 1):
            raise ValueError("series depends on the inner variable")
        if self.is_zero():
            return ZPoly()
        return ZPoly(self._data[:, 0].tolist(), self.omin)

    def column_sums(self) -> ZPoly:
        """Specialize the inner variable to 1."""
        if self.is_zero():
            return ZPoly()
        return ZPoly(self._data.sum(axis=1).tolist(), self.omin)

    def __repr__(self) -> str:
        return f"BiSeries({self.to_str()})"

    def to_str(self) -> str:
        parts = []
        for j, p in self.slices():
            if not p:
                continue
            body = p.to_str(self.inner)
            if j == 0:
                parts.append(body if len(p.coeffs) == 1 else f"({body})")
            else:
                mono = self.outer if j == 1 else f"{self.outer}^{j}"
                parts.append(mono if body == "1" else f"({body})*{mono}")
        s = " + ".join(parts) if parts else "0"
        if self.omax is not None:
            s += f" + O({self.outer}^{self.omax + 1})"
        return s

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return (
            self.inner == other.inner
            and self.outer == other.outer
            and self.omax == other.omax
            and self.omin == other.omin
            and self.imin == other.imin
            and self._data.shape == other._data.shape
            and bool(np.all(self._data == other._data))
        )

    def __hash__(self) -> int:
        return hash((self.inner, self.outer, self.omax, self.omin, self.imin,
                     self._data.shape, tuple(self._data.flat)))

    # ------------------------------------------------------------------ structural ops

    def _check_same(self, other: "BiSeries") -> None:
        if (self.inner, self.outer) != (other.inner, other.outer):
            raise OrientationError(
                f"orientation mismatch: ({self.inner}, {self.outer}) vs ({other.inner}, {other.outer})"
            )

    def truncate(self, omax: int) -> "BiSeries":
        if self.omax is not None and omax > self.omax:
            raise TruncationError(f"cannot extend truncation order {self.omax} to {omax}")
        return self._like(self._data, self.omin, self.imin, omax)

    def shift(self, di: int = 0, dj: int = 0) -> "BiSeries":
        """Multiply by the monomial ``x**di t**dj``."""
        omax = None if self.omax is None else self.omax + dj
        return self._like(self._data, self.omin + dj, self.imin + di, omax)

    def scale(self, c: int) -> "BiSeries":
        return self._like(self._data * int(c), self.omin, self.imin, self.omax)

    def map_slices(self, fn) -> "BiSeries":
        """Apply ``fn(j, row_array) -> row_array`` to each stored slice."""
        data = self._data.copy()
        for r in range(data.shape[0]):
            data[r] = fn(self.omin + r, data[r])
        return self._like(data, self.omin, self.imin, self.omax)

    def with_names(self, inner: str, outer: str) -> "BiSeries":
        """Relabel the variables without touching coefficients."""
        return BiSeries(self._data, self.omin, self.imin, self.omax, inner, outer)

    # ------------------------------------------------------------------ arithmetic

    def __neg__(self) -> "BiSeries":
        return self.scale(-1)

    def __add__(self, other: "BiSeries | int") -> "BiSeries":
        if isinstance(other, int):
            other = BiSeries.monomial(other, 0, 0, None, self.inner, self.outer)
        return series_add(self, other)

    __radd__ = __add__

    def __sub__(self, other: "BiSeries | int") -> "BiSeries":
        if isinstance(other, int):
            other = BiSeries.monomial(other, 0, 0, None, self.inner, self.outer)
        return series_add(self, -other)

    def __mul__(self, other: "BiSeries | int") -> "BiSeries":
        if isinstance(other, int):
            return self.scale(other)
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiSeries":
        if k < 0:
            return series_inv(self) ** (-k)
        out = BiSeries.one(None, self.inner, self.outer)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def mul_factor(self, c: int, a: int, b: int) -> "BiSeries":
        """Multiply by ``1 + c x**a t**b``."""
        if c == 0:
            return self
        if self.is_zero():
            omax = None if self.omax is None else self.omax + min(b, 0)
            return BiSeries.zero(omax, self.inner, self.outer)
        omax = None if self.omax is None else self.omax + min(b, 0)
        nr, nc = self._data.shape
        omin = self.omin + min(b, 0)
        imin = self.imin + min(a, 0)
        out = _alloc(nr + abs(b), nc + abs(a))
        r0, c0 = self.omin - omin, self.imin - imin
        out[r0 : r0 + nr, c0 : c0 + nc] += self._data
        r1, c1 = r0 + b, c0 + a
        out[r1 : r1 + nr, c1 : c1 + nc] += self._data * c
        return self._like(out, omin, imin, omax)

    def div_factor(self, c: int, a: int, b: int) -> "BiSeries":
        """Divide by ``1 + c x**a t**b``; needs ``b >= 1`` and a truncated series."""
        if b < 1:
            raise ValueError("division by 1 + c*x^a*t^b needs b >= 1 to converge t-adically")
        if self.omax is None:
            raise TruncationError("dividing an exact polynomial needs a truncation order")
        if c == 0 or self.is_zero():
            return self
        nrows = self.omax - self.omin + 1
        if nrows <= 0:
            return self
        steps = (nrows - 1) // b
        nr, nc = self._data.shape
        width = nc + abs(a) * steps
        imin = self.imin + (a * steps if a < 0 else 0)
        g = _alloc(nrows, width)
        c0 = self.imin - imin
        g[:nr, c0 : c0 + nc] = self._data
        if a >= 0:
            for n in range(b, nrows):
                src = g[n - b, : width - a]
                g[n, a:] -= src * c
        else:
            for n in range(b, nrows):
                src = g[n - b, -a:]
                g[n, : width + a] -= src * c
        return self._like(g, self.omin, imin, self.omax)

    def euler(self, which: str) -> "BiSeries":
        """Apply ``v d/dv`` for ``which`` in {'inner', 'outer'}."""
        data = self._data.copy()
        if which == "inner":
            weights = np.arange(self.imin, self.imin + data.shape[1], dtype=object)
            data = data * weights[None, :]
        elif which == "outer":
            weights = np.arange(self.omin, self.omin + data.shape[0], dtype=object)
            data = data * weights[:, None]
        else:
            raise ValueError("which must be 'inner' or 'outer'")
        return self._like(data, self.omin, self.imin, self.omax)


# ---------------------------------------------------------------------- module-level API


def series_add(a: BiSeries, b: BiSeries) -> BiSeries:
    """Coefficientwise sum, truncated to the smaller truncation order."""
    a._check_same(b)
    omaxes = [o for o in (a.omax, b.omax) if o is not None]
    omax = min(omaxes) if omaxes else None
    if a.is_zero():
        return b if omax == b.omax else b.truncate(omax)
    if b.is_zero():
        return a if omax == a.omax else a.truncate(omax)
    omin = min(a.omin, b.omin)
    imin = min(a.imin, b.imin)
    top = max(a.top, b.top)
    imax = max(a.imax, b.imax)
    out = _alloc(top - omin + 1, imax - imin + 1)
    for s in (a, b):
        r, c = s.omin - omin, s.imin - imin
        out[r : r + s.data.shape[0], c : c + s.data.shape[1]] += s.data
    return BiSeries(out, omin, imin, omax, a.inner, a.outer)


def _product_omax(a: BiSeries, b: BiSeries) -> int | None:
    # unknown terms of a (beyond a.omax) meet b's lowest slice, and vice versa
    bounds = []
    for s, t in ((a, b), (b, a)):
        if s.omax is None:
            continue
        low = t.low()
        if low is None:
            if t.omax is None:
                continue  # exact zero kills the unknown tail
            low = t.omax + 1
        bounds.append(s.omax + low)
    return min(bounds) if bounds else None


def series_mul(a: BiSeries, b: BiSeries) -> BiSeries:
    """Cauchy product, exact up to the combined truncation order."""
    a._check_same(b)
    omax = _product_omax(a, b)
    if a.is_zero() or b.is_zero():
        return BiSeries.zero(omax, a.inner, a.outer)
    omin = a.omin + b.omin
    imin = a.imin + b.imin
    ra, rb = a.data.shape[0], b.data.shape[0]
    nrows = ra + rb - 1
    if omax is not None:
        nrows = min(nrows, omax - omin + 1)
    if nrows <= 0:
        return BiSeries.zero(omax, a.inner, a.outer)
    out = _alloc(nrows, a.data.shape[1] + b.data.shape[1] - 1)
    a_rows = [r for r in range(ra) if np.any(a.data[r] != 0)]
    b_rows = [s for s in range(rb) if np.any(b.data[s] != 0)]
    for r in a_rows:
        ar = a.data[r]
        for s in b_rows:
            if r + s >= nrows:
                break
            out[r + s] += np.convolve(ar, b.data[s])
    return BiSeries(out, omin, imin, omax, a.inner, a.outer)


def series_inv(s: BiSeries) -> BiSeries:
    """Reciprocal of a truncated series whose lowest slice is a monomial ``+-x**a``."""
    if s.omax is None:
        raise TruncationError("the reciprocal of a polynomial needs a truncation order")
    if s.is_zero():
        raise ZeroDivisionError("zero series")
    lead = s.slice(s.omin).terms()
    if len(lead) != 1 or abs(next(iter(lead.values()))) != 1:
        raise ValueError("lowest slice must be a unit monomial +-x^a")
    (a, c), = lead.items()
    e = s.omin
    u = s.shift(-a, -e)  # lowest slice is now the constant c
    n = u.omax + 1
    if n <= 0:
        return BiSeries.zero(s.omax - 2 * e, s.inner, s.outer)
    urows = [u.slice(j) for j in range(n)]
    # g_n = -c * sum_{k=1..n} u_k g_{n-k}  (c = 1/c for a unit)
    g: list[ZPoly] = [ZPoly([c])]
    for m in range(1, n):
        acc = ZPoly()
        for k in range(1, m + 1):
            if urows[k]:
                acc = acc + urows[k] * g[m - k]
        g.append(acc * (-c))
    inv = BiSeries.from_slices(dict(enumerate(g)), n - 1, s.inner, s.outer)
    return inv.shift(-a, -e)


def geom_inv(
    c: int, a: int, b: int, omax: int, inner: str = "z", outer: str = "q"
) -> BiSeries:
    """Expand ``1/(1 - c x**a t**b)`` as ``sum_k c**k x**(a k) t**(b k)``.

    With ``b >= 1`` the expansion is t-adic and exact to ``omax``.  With
    ``b <= 0`` but ``a >= 1`` it is x-adic instead: the result comes back in the
    transposed orientation (outer variable ``inner``), exact to ``omax`` in it.
    """
    if b >= 1:
        return BiSeries.one(omax, inner, outer).div_factor(-c, a, b)
    if a >= 1:
        return BiSeries.one(omax, outer, inner).div_factor(-c, b, a)
    raise ValueError(f"1/(1 - c*{inner}^{a}*{outer}^{b}) converges in neither variable")


def pochhammer(
    c: int,
    a: int,
    b: int,
    step: int,
    count: int | float | None,
    omax: int | None,
    *,
    inner_step: int = 0,
    inner: str = "z",
    outer: str = "q",
) -> BiSeries:
    """``prod_{j < count} (1 + c x**(a + j*inner_step) t**(b + j*step))``.

    ``count`` may be ``None``/``math.inf`` for the infinite product, which needs
    ``step >= 1`` and ``b >= 1``; only factors with ``b + j*step <= omax``
    are applied.  ``(q;q)_n`` is ``pochhammer(-1, 0, 1, 1, n, omax)``.
    """
    infinite = count is None or count == math.inf
    if infinite:
        if step < 1 or b < 1:
            raise ValueError("infinite product does not terminate t-adically (need b >= 1, step >= 1)")
        if omax is None:
            raise TruncationError("infinite product needs a truncation order")
        count = max(0, (omax - b) // step + 1)
    count = int(count)
    exps = [b + j * step for j in range(count)]
    # clip as we go unless some factor carries a negative outer exponent
    early = omax is not None and all(e >= 0 for e in exps)
    out = BiSeries.one(omax if early else None, inner, outer)
    for j, e in enumerate(exps):
        if early and e > omax:
            continue
        out = out.mul_factor(c, a + j * inner_step, e)
    if omax is not None and not early:
        out = out.truncate(omax)
    return out


def transpose(s: BiSeries) -> BiSeries:
    """Swap the roles of the inner and outer variables (exact series only)."""
    if s.omax is not None:
        raise TruncationError(
            "transposing a truncated series would leave its inner support unbounded; "
            "build it in the other orientation instead"
        )
    return BiSeries(s.data.T, s.imin, s.omin, None, s.outer, s.inner)


def apply_y_ddy(s: BiSeries) -> BiSeries:
    """Euler operator in the inner variable."""
    return s.euler("inner")


def apply_q_ddq(s: BiSeries) -> BiSeries:
    """Euler operator in the outer variable."""
    return s.euler("outer")


def ct_z(s: BiSeries) -> BiSeries:
    """Constant term in the inner variable ``z``, slice by slice."""
    if s.inner != "z":
        raise OrientationError(f"CT_z needs inner variable z, got {s.inner}")
    return BiSeries.from_terms(
        {(0, j): s.coeff(0, j) for j in range(s.omin, s.top + 1)}, s.omax, s.inner, s.outer
    )
