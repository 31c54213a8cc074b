"""Membership in the unimodality classes U^nu / T^nu and strictness lifting.

A Laurent polynomial ``sum c_i x^i`` is in ``U^nu`` when it is symmetric about
``x^0`` and, for each residue ``r < nu``, the sequence ``c_r, c_{r+nu}, ...`` is
nonnegative and nonincreasing.  ``T^nu`` additionally asks the positive part
of each such sequence to decrease strictly.  A residue class that vanishes
identically is accepted in both classes.  A bivariate series is a member when
every slice (fixed outer exponent) is.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator

from .series import BiSeries, ZPoly

__all__ = [
    "ClassSpec",
    "U1",
    "U2",
    "T1",
    "T2",
    "ALL_CLASSES",
    "Witness",
    "MembershipReport",
    "SupportProfile",
    "LiftReport",
    "check_slice",
    "check_membership",
    "support_profile",
    "strictness_lift",
    "random_member",
    "random_member_series",
    "centered",
    "is_symmetric_unimodal",
]

ASYMMETRIC = "asymmetric"
NEGATIVE = "negative-coefficient"
NON_MONOTONE = "non-monotone"
NOT_STRICT = "not-strict"


@dataclass(frozen=True)
class ClassSpec:
    nu: int
    strict: bool = False

    def __post_init__(self):
        if self.nu not in (1, 2):
            raise ValueError(f"nu must be 1 or 2, got {self.nu}")

    @property
    def label(self) -> str:
        return f"{'T' if self.strict else 'U'}^{self.nu}"

    def __str__(self) -> str:
        return self.label


U1, U2 = ClassSpec(1), ClassSpec(2)
T1, T2 = ClassSpec(1, True), ClassSpec(2, True)
ALL_CLASSES = (U1, U2, T1, T2)


@dataclass(frozen=True)
class Witness:
    """First violation found: slice ``outer``, inner index ``inner`` and the
    compared pair (``(c_-i, c_i)`` for asymmetry, else ``(c_i, c_{i+nu})``)."""

    outer: int | None
    inner: int
    pair: tuple[int, int]
    reason: str

    def to_dict(self) -> dict:
        return {"outer": self.outer, "inner": self.inner, "pair": list(self.pair), "reason": self.reason}


@dataclass(frozen=True)
class MembershipReport:
    status: str
    witness: Witness | None = None
    checked_window: tuple[int, int] | None = None

    @property
    def member(self) -> bool:
        return self.status == "member"

    def __bool__(self) -> bool:
        return self.member


def _slice_violation(p: ZPoly, spec: ClassSpec) -> tuple[int, tuple[int, int], str] | None:
    if not p:
        return None
    nu = spec.nu
    top = max(abs(p.lo), abs(p.hi))
    for i in range(top + 1):
        ci = p[i]
        if i and p[-i] != ci:
            return i, (p[-i], ci), ASYMMETRIC
        nxt = p[i + nu]
        if ci < 0:
            return i, (ci, nxt), NEGATIVE
        if ci < nxt:
            return i, (ci, nxt), NON_MONOTONE
        if spec.strict and ci > 0 and ci == nxt:
            return i, (ci, nxt), NOT_STRICT
    return None


def check_slice(p: ZPoly, spec: ClassSpec) -> MembershipReport:
    """Decide ``p in U^nu`` (or ``T^nu``); the witness is the smallest failing index."""
    bad = _slice_violation(p, spec)
    if bad is None:
        return MembershipReport("member")
    i, pair, reason = bad
    return MembershipReport("not-member", Witness(None, i, pair, reason))


def check_membership(s: BiSeries | ZPoly, spec: ClassSpec) -> MembershipReport:
    """Check every slice in the series' window; report the first failing one."""
    if isinstance(s, ZPoly):
        return check_slice(s, spec)
    window = s.window
    for j, p in s.slices():
        bad = _slice_violation(p, spec)
        if bad is not None:
            i, pair, reason = bad
            return MembershipReport("not-member", Witness(j, i, pair, reason), window)
    return MembershipReport("member", None, window)


def centered(p: ZPoly) -> ZPoly:
    """Recentre a polynomial about ``x^0`` after ``x -> x^2`` (half-integer centres allowed)."""
    if not p:
        return p
    return p.substitute_power(2).shift(-(p.lo + p.hi))


def is_symmetric_unimodal(p: ZPoly) -> bool:
    """Symmetric about its own centre with nonnegative unimodal coefficients."""
    # doubling puts every coefficient in the even class, so U^2 == plain unimodality
    return check_slice(centered(p), U2).member


# ---------------------------------------------------------------------- profiles


@dataclass(frozen=True)
class SupportProfile:
    """``levels[n][t]`` is the largest ``|i|`` with ``i = t (mod nu)`` and
    ``c_{i,n} != 0``, or ``None`` when that residue class of slice ``n`` is empty."""

    nu: int
    levels: dict[int, tuple[int | None, ...]] = field(default_factory=dict)

    def ell(self, n: int, t: int) -> int | None:
        row = self.levels.get(n)
        return None if row is None else row[t]

    def m(self, n: int, t: int) -> int | None:
        """Running maximum of ``ell(r, t)`` over ``r <= n``."""
        vals = [row[t] for r, row in self.levels.items() if r <= n and row[t] is not None]
        return max(vals) if vals else None


def _levels(p: ZPoly, nu: int) -> tuple[int | None, ...]:
    out: list[int | None] = [None] * nu
    for i in p.terms():
        a = abs(i)
        t = a % nu
        if out[t] is None or a > out[t]:
            out[t] = a
    return tuple(out)


def support_profile(s: BiSeries, nu: int) -> SupportProfile:
    report = check_membership(s, ClassSpec(nu))
    if not report.member:
        raise ValueError(f"support profile needs a U^{nu} member; first violation {report.witness}")
    lo, hi = s.window
    levels = {n: _levels(s.slice(n), nu) for n in range(lo, hi + 1)}
    return SupportProfile(nu, levels)


@dataclass(frozen=True)
class LiftReport:
    """Outcome of the strictness lift for ``(1 - t)^-1 * s``.

    ``criterion`` is the verdict read off the data of ``s`` (first failing
    ``(t, i, n)`` in ``failure``); ``report`` is the direct membership check of
    the explicitly computed product.
    """

    criterion: bool
    failure: tuple[int, int, int] | None
    report: MembershipReport
    product: BiSeries = field(repr=False, compare=False)

    @property
    def status(self) -> str:
        return self.report.status

    @property
    def consistent(self) -> bool:
        return self.criterion == self.report.member


def strictness_lift(s: BiSeries, spec: ClassSpec, omax: int | None = None) -> LiftReport:
    """Decide whether ``(1 - t)^-1 s`` lands in ``T^nu`` for ``s`` in ``U^nu``.

    For each residue ``t`` and slice ``n`` the criterion asks, for every
    ``i = t (mod nu)`` reached by some earlier slice, that some ``r <= n``
    with ``ell_r >= i`` has ``c_{i,r} > c_{i+nu,r}``.
    """
    nu = spec.nu
    if s.omin < 0:
        raise ValueError("strictness lift expects a power series in the outer variable")
    if omax is None:
        omax = s.omax if s.omax is not None else max(s.top, 0) + 2 * nu + 1
    elif s.omax is not None and omax > s.omax:
        raise ValueError(f"window {omax} exceeds the series' truncation order {s.omax}")
    s = s.truncate(omax)
    prof = support_profile(s, nu)
    slices = {n: s.slice(n) for n in range(0, omax + 1)}

    failure = None
    for t in range(nu):
        # best[i] = max over processed r with ell_r(t) >= i of c_{i,r} - c_{i+nu,r}
        best: dict[int, int] = {}
        for n in range(0, omax + 1):
            ell = prof.ell(n, t)
            if ell is not None:
                p = slices[n]
                for i in range(t, ell + 1, nu):
                    d = p[i] - p[i + nu]
                    if i not in best or d > best[i]:
                        best[i] = d
            bad = [i for i, d in sorted(best.items()) if d <= 0]
            if bad:
                failure = (t, bad[0], n)
                break
        if failure:
            break

    product = s.div_factor(-1, 0, 1)
    report = check_membership(product, ClassSpec(nu, True))
    return LiftReport(failure is None, failure, report, product)


# ---------------------------------------------------------------------- generators


def random_member(spec: ClassSpec, seed: int, size: int = 6, max_coeff: int = 20) -> ZPoly:
    """Deterministic pseudo-random slice in ``spec`` with support inside ``[-size, size]``."""
    rng = random.Random(seed)
    coeffs: dict[int, int] = {}
    for r in range(spec.nu):
        idx = list(range(r, size + 1, spec.nu))
        if not idx:
            continue
        # residue 0 always carries the centre so the result is never the zero slice
        length = rng.randint(1 if r == 0 else 0, len(idx))
        if length == 0:
            continue
        if spec.strict:
            hi = max(max_coeff, length)
            vals = sorted(rng.sample(range(1, hi + 1), length), reverse=True)
        else:
            vals = sorted((rng.randint(1, max_coeff) for _ in range(length)), reverse=True)
        for i, v in zip(idx, vals):
            coeffs[i] = v
            coeffs[-i] = v
    return ZPoly.from_terms(coeffs)


def random_member_series(
    spec: ClassSpec, seed: int, omax: int = 4, size: int = 4, inner: str = "z", outer: str = "q"
) -> BiSeries:
    """Series whose slices are independent :func:`random_member` draws (some left zero)."""
    rng = random.Random(seed)
    slices = {}
    for j in range(omax + 1):
        if rng.random() < 0.8:
            slices[j] = random_member(spec, rng.randrange(2**32), rng.randint(0, size))
    return BiSeries.from_slices(slices, omax, inner, outer)


def iter_violations(s: BiSeries, spec: ClassSpec) -> Iterator[Witness]:
    """Every slice-level first violation, in outer order (for witness audits)."""
    for j, p in s.slices():
        bad = _slice_violation(p, spec)
        if bad is not None:
            i, pair, reason = bad
            yield Witness(j, i, pair, reason)
