"""Named generating functions, addressable through :class:`SeriesId`."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any

from ..series import BiSeries
from .gauss import (
    cauchy_expansion,
    cauchy_inverse_expansion,
    g_series,
    gauss_binomial,
    gen_gauss,
    gen_gauss_q2,
    gen_gauss_r_direct,
)
from .hilbert import c_coefficient, f_nu, g_factor, hilbert_series, multichoose, poincare_unsigned
from .jacobi import OB_KINDS, FracSeries, a_from_theta, catalan, eta, n_from_theta, oberdieck_series, theta1
from .partitions import (
    COMPOSITION_KINDS,
    INF,
    KLL_KINDS,
    color_series,
    composition_series,
    crank_series,
    k_rank_series,
    kll_series,
    odd_strongly_unimodal_ou_star,
    odd_unimodal_ou,
    plane_partition_series,
    unimodal_rank_u,
    unimodal_rank_uw,
)

__all__ = [
    "Family",
    "SeriesId",
    "build",
    "INF",
    "COMPOSITION_KINDS",
    "KLL_KINDS",
    "OB_KINDS",
    "gauss_binomial",
    "g_series",
    "gen_gauss",
    "gen_gauss_q2",
    "gen_gauss_r_direct",
    "cauchy_expansion",
    "cauchy_inverse_expansion",
    "plane_partition_series",
    "color_series",
    "crank_series",
    "k_rank_series",
    "composition_series",
    "kll_series",
    "hilbert_series",
    "poincare_unsigned",
    "g_factor",
    "f_nu",
    "multichoose",
    "c_coefficient",
    "oberdieck_series",
    "catalan",
    "FracSeries",
    "eta",
    "theta1",
    "a_from_theta",
    "n_from_theta",
    "unimodal_rank_u",
    "unimodal_rank_uw",
    "odd_unimodal_ou",
    "odd_strongly_unimodal_ou_star",
]


class Family(str, enum.Enum):
    GAUSS_BINOMIAL = "GAUSS_BINOMIAL"
    G_DN = "G_DN"
    GEN_GAUSS_R = "GEN_GAUSS_R"
    GEN_GAUSS_C = "GEN_GAUSS_C"
    PLANE_PARTITION = "PLANE_PARTITION"
    COLOR_P = "COLOR_P"
    COLOR_R = "COLOR_R"
    COLOR_D = "COLOR_D"
    CRANK = "CRANK"
    KRANK = "KRANK"
    COMP_V = "COMP_V"
    COMP_VD = "COMP_VD"
    COMP_X = "COMP_X"
    COMP_XD = "COMP_XD"
    COMP_VO = "COMP_VO"
    COMP_VOD = "COMP_VOD"
    COMP_XO = "COMP_XO"
    COMP_XOD = "COMP_XOD"
    KLL_UOB = "KLL_UOB"
    KLL_W_NEGQ = "KLL_W_NEGQ"
    KLL_Z = "KLL_Z"
    HILBERT_BETTI = "HILBERT_BETTI"
    OB_A = "OB_A"
    OB_B = "OB_B"
    OB_N = "OB_N"
    OB_N1 = "OB_N1"
    OB_N3 = "OB_N3"


@dataclass(frozen=True)
class SeriesId:
    """A family tag plus its parameters, hashable so builds can be cached.

    ``SeriesId.of("KRANK", k=3)``; the multiset ``S`` of colour families is
    stored as a sorted tuple.
    """

    family: Family
    params: tuple[tuple[str, Any], ...] = field(default=())

    @classmethod
    def of(cls, family: str | Family, **params: Any) -> "SeriesId":
        if "S" in params:
            params["S"] = tuple(sorted(params["S"]))
        return cls(Family(family), tuple(sorted(params.items())))

    def get(self, name: str, default: Any = None) -> Any:
        return dict(self.params).get(name, default)

    def __str__(self) -> str:
        inner = ", ".join(f"{k}={v}" for k, v in self.params)
        return f"{self.family.value}({inner})"


def _need(sid: SeriesId, *names: str) -> list[Any]:
    vals = []
    for n in names:
        v = sid.get(n)
        if v is None:
            raise ValueError(f"{sid.family.value} needs parameter {n!r}")
        vals.append(v)
    return vals


def build(sid: SeriesId, omax: int | None = None) -> BiSeries:
    """Construct the series named by ``sid``.

    ``omax`` is the truncation order in the outer variable; for ``G_DN`` it is
    the ``z`` bound and for the finite families it may be left as ``None``.
    """
    f = sid.family
    if f is Family.GAUSS_BINOMIAL:
        n, m = _need(sid, "n", "m")
        return BiSeries.from_outer_poly(gauss_binomial(n, m))
    if f is Family.G_DN:
        (n,) = _need(sid, "n")
        return g_series(sid.get("d"), n, _omax(sid, omax))
    if f in (Family.GEN_GAUSS_R, Family.GEN_GAUSS_C):
        k, m, n = _need(sid, "k", "m", "n")
        kind = "r" if f is Family.GEN_GAUSS_R else "c"
        p = gen_gauss_q2(kind, k, m, n) if sid.get("q2") else gen_gauss(kind, k, m, n)
        return BiSeries.from_outer_poly(p)
    omax = _omax(sid, omax)
    if f is Family.PLANE_PARTITION:
        return plane_partition_series(sid.get("delta", 0), omax)
    if f in (Family.COLOR_P, Family.COLOR_R, Family.COLOR_D):
        kind = f.value[-1]
        return color_series(kind, sid.get("a"), sid.get("b", INF), sid.get("S", ()), omax)
    if f is Family.CRANK:
        return crank_series(omax)
    if f is Family.KRANK:
        return k_rank_series(sid.get("k", 2), omax)
    if f.value.startswith("COMP_"):
        return composition_series(f.value[5:], omax)
    if f.value.startswith("KLL_"):
        return kll_series(f.value[4:], omax)
    if f is Family.HILBERT_BETTI:
        b0, b1, b2 = _need(sid, "b0", "b1", "b2")
        return hilbert_series(b0, b1, b2, omax)
    if f.value.startswith("OB_"):
        return oberdieck_series(f.value[3:], sid.get("d"), omax)
    raise ValueError(f"no builder for {f}")  # pragma: no cover


def _omax(sid: SeriesId, omax: int | None) -> int:
    if omax is None:
        raise ValueError(f"{sid.family.value} needs a truncation order")
    if omax < 0:
        raise ValueError("truncation order must be >= 0")
    return omax
