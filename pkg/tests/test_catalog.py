import itertools
from math import comb

import pytest

from unimodal.catalog import (
    COMPOSITION_KINDS,
    INF,
    Family,
    SeriesId,
    build,
    catalan,
    cauchy_expansion,
    cauchy_inverse_expansion,
    color_series,
    composition_series,
    crank_series,
    g_series,
    gauss_binomial,
    gen_gauss,
    gen_gauss_q2,
    gen_gauss_r_direct,
    hilbert_series,
    k_rank_series,
    kll_series,
    oberdieck_series,
    odd_strongly_unimodal_ou_star,
    odd_unimodal_ou,
    plane_partition_series,
    poincare_unsigned,
    unimodal_rank_u,
    unimodal_rank_uw,
)
from unimodal.membership import U1, U2, check_membership, check_slice, is_symmetric_unimodal
from unimodal.oracles import count_partitions
from unimodal.series import BiSeries, ZPoly, pochhammer


def zp(terms):
    return ZPoly.from_terms(terms)


# ---------------------------------------------------------------- Gauss family


def test_gauss_binomial_examples():
    assert gauss_binomial(2, 1) == ZPoly([1, 1])
    assert gauss_binomial(4, 2) == ZPoly([1, 1, 2, 1, 1])
    assert gauss_binomial(7, 0) == ZPoly([1])
    assert gauss_binomial(3, 5).is_zero()
    assert all(gauss_binomial(n, m).at_one() == comb(n, m) for n in range(10) for m in range(n + 1))


def test_g_series_examples():
    assert g_series(2, 0, 5) == BiSeries.one(5, "q", "z")
    assert g_series(1, 1, 6).truncate(6) == BiSeries.from_terms({(0, 0): 1, (0, 1): 1}, 6, "q", "z")
    g12 = g_series(1, 2, 6)
    assert g12 == BiSeries.from_terms({(0, 0): 1, (1, 1): 1, (-1, 1): 1, (0, 2): 1}, 6, "q", "z")


def test_gen_gauss_examples():
    assert gen_gauss("c", 1, 1, 1) == ZPoly([1, 1])
    assert gen_gauss("c", 2, 1, 1) == ZPoly([1, 4, 1])
    assert gen_gauss("r", 2, 1, 1) == ZPoly([1, 1, 1])
    with pytest.raises(ValueError):
        gen_gauss("x", 1, 1, 1)


@pytest.mark.parametrize("m,n", list(itertools.product(range(9), range(9))))
def test_generalized_reduce_to_gauss_at_k1(m, n):
    g = gauss_binomial(m + n, m)
    assert gen_gauss("r", 1, m, n) == g
    assert gen_gauss("c", 1, m, n) == g


def test_r_kind_reduction_matches_direct_constant_term():
    for k, m, n in itertools.product(range(1, 5), range(5), range(5)):
        assert gen_gauss_q2("r", k, m, n) == gen_gauss_r_direct(k, m, n).substitute_power(2)


def test_r3_parity_examples():
    for m, n in [(1, 2), (2, 3), (3, 4), (1, 4)]:
        p = gen_gauss("r", 3, m, n).shift(-(3 * m * n) // 2)
        assert check_slice(p, U2).member


def test_g3_factorization():
    zmax = 12
    for n in range(7):
        half = g_series(1, n, zmax // 2)
        doubled = BiSeries.from_terms({(2 * i, 2 * j): c for (i, j), c in half.terms().items()}, zmax, "q", "z")
        assert g_series(3, n, zmax) == doubled * g_series(1, n, zmax)


def test_cauchy_expansions():
    for n in range(7):
        direct = pochhammer(1, 1 - n, 1, 0, n, None, inner_step=2, inner="q", outer="z")
        assert cauchy_expansion(n) == direct
        assert cauchy_inverse_expansion(n, 8) == g_series(None, n, 8)


def test_ggpv_finite_identity():
    for m, n in itertools.product(range(7), range(7)):
        lhs = pochhammer(-1, 1, 2, 2, m, None) * pochhammer(-1, -1, 0, 2, n, None)
        rhs = pochhammer(-1, 1, 2 - 2 * n, 2, m + n, None)
        rhs = rhs * BiSeries.monomial((-1) ** n, -n, n * (n - 1))
        assert lhs == rhs


def test_ck_polynomials_small_cases_unimodal():
    for k, m, n in itertools.product(range(1, 4), range(5), range(5)):
        assert is_symmetric_unimodal(gen_gauss("c", k, m, n))


# ---------------------------------------------------------------- plane partitions


def test_plane_partition_examples():
    s = plane_partition_series(0, 4)
    assert s.slice(1) == ZPoly([1])
    assert s.slice(2) == zp({-1: 1, 0: 1, 1: 1})
    assert plane_partition_series(1, 3).coeff(1, 1) == 1


def test_plane_partition_specialization():
    # q = 1 gives MacMahon's prod (1 - t^m)^-m
    mac = BiSeries.one(12)
    for m in range(1, 13):
        for _ in range(m):
            mac = mac.div_factor(-1, 0, m)
    sums = plane_partition_series(0, 12).column_sums()
    assert [sums[n] for n in range(13)] == [mac.coeff(0, n) for n in range(13)]
    assert sums[5] == 24


# ---------------------------------------------------------------- colour partitions


def test_color_examples():
    s = color_series("P", 2, 1, [1], 6)
    assert s == BiSeries.from_terms({(0, 0): 1, (1, 1): 1, (-1, 1): 1, (0, 2): 1}, 6)
    assert color_series("D", None, None, [1], 6) == s
    assert color_series("R", 1, 2, [], 5) == BiSeries.one(5)
    with pytest.raises(ValueError):
        color_series("P", 3, 1, [1], 5)
    with pytest.raises(ValueError):
        color_series("P", 1, 1, [0], 5)


def test_color_infinite_b():
    s = color_series("P", 2, INF, [1], 4)
    # 1/((1 - zq)(1 - z^-1 q))
    t = BiSeries.one(4).div_factor(-1, 1, 1).div_factor(-1, -1, 1)
    assert s == t


# ---------------------------------------------------------------- crank / rank


def test_crank_examples():
    c = crank_series(6)
    assert c.slice(0) == ZPoly([1])
    assert c.slice(1) == zp({-1: 1, 0: -1, 1: 1})
    assert c.column_sums()[4] == 5


def test_rank_column_sums_are_partition_numbers():
    sums = k_rank_series(2, 12).column_sums()
    assert [sums[n] for n in range(13)] == [count_partitions(n) for n in range(13)]
    assert k_rank_series(2, 5).slice(0) == ZPoly([1])
    assert check_membership(k_rank_series(3, 20), U2).member
    with pytest.raises(ValueError):
        k_rank_series(1, 5)


# ---------------------------------------------------------------- compositions


def test_composition_examples():
    v = composition_series("V", 6)
    assert v.slice(0) == ZPoly([1])
    assert v.slice(2) == zp({-2: 1, -1: 1, 0: 2, 1: 1, 2: 1})
    assert composition_series("XD", 5).slice(3) == zp({-1: 1, 0: 1, 1: 1})
    with pytest.raises(ValueError):
        composition_series("Q", 5)


def test_vd_formula():
    s = composition_series("VD", 30)
    for m in range(0, 7):
        t = m * (m + 1) // 2
        for n in range(t, min(2 * m + 3 + t, 30) + 1):
            assert s.coeff(m, n) == count_partitions(n - t), (m, n)


def test_color_odd_s_parity():
    for b, S in [(1, (1,)), (2, (1, 3)), (INF, (3,))]:
        s = color_series("P", 2, b, S, 14)
        assert all((i - j) % 2 == 0 for i, j in s.terms()), (b, S)
    # the four-colour count keeps an unpaired 1/(1 - q^l): one yellow 1 gives r(0, 1) = 1
    r = color_series("R", 2, 1, (1,), 6)
    assert r == BiSeries.one(6).mul_factor(1, 1, 1).mul_factor(1, -1, 1).div_factor(-1, 0, 1)
    assert r.coeff(0, 1) == 1


def test_aliases():
    x = composition_series("X", 12)
    xd = composition_series("XD", 12)
    assert unimodal_rank_u(1, 3) == xd.coeff(1, 3) == 1
    assert unimodal_rank_uw(0, 5) == x.coeff(0, 6)
    assert odd_unimodal_ou(1, 3) == composition_series("XO", 5).coeff(1, 5)
    assert odd_strongly_unimodal_ou_star(0, 5) == composition_series("XOD", 5).coeff(0, 5)


def test_composition_column_sums_match_flat_series():
    # z = 1 in V gives sum_n q^n / (q^{n+1}; q)_inf^2
    for kind in COMPOSITION_KINDS:
        s = composition_series(kind, 10)
        flat = s.column_sums()
        assert all(flat[n] >= 0 for n in range(11))


# ---------------------------------------------------------------- KLL


def test_kll_examples():
    for kind in ("UOB", "W_NEGQ", "Z"):
        s = kll_series(kind, 30)
        assert s.slice(0) == ZPoly([1])
        assert check_membership(s, U1).member


# ---------------------------------------------------------------- Hilbert / Jacobi


def test_hilbert_examples():
    assert hilbert_series(2, 3, 4, 5).slice(0) == ZPoly([1])
    assert hilbert_series(1, 0, 22, 3).slice(1) == zp({-2: 1, 0: 22, 2: 1})
    assert hilbert_series(0, 0, 1, 5).slice(2) == ZPoly([2])
    for b in itertools.product(range(3), repeat=3):
        assert hilbert_series(*b, 3).slice(1) == poincare_unsigned(*b)


def test_oberdieck_examples():
    a = oberdieck_series("A", None, 5)
    assert a.slice(0) == zp({-1: 1, 0: 2, 1: 1})
    assert a.slice(1) == zp({-2: 2, -1: 7, 0: 10, 1: 7, 2: 2})
    assert oberdieck_series("B", None, 5).slice(0) == ZPoly([1])
    n1 = oberdieck_series("N", 1, 6)
    assert n1.omin == -1 and n1.coeff(0, -1) == 1
    assert n1.window == (-1, 6)


def test_catalan():
    assert [catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


# ---------------------------------------------------------------- SeriesId dispatch


def test_build_dispatch():
    assert build(SeriesId.of("CRANK"), 5) == crank_series(5)
    assert build(SeriesId.of(Family.KRANK, k=3), 6) == k_rank_series(3, 6)
    assert build(SeriesId.of("COMP_XOD"), 7) == composition_series("XOD", 7)
    assert build(SeriesId.of("KLL_Z"), 7) == kll_series("Z", 7)
    assert build(SeriesId.of("COLOR_P", a=1, b=2, S=[3, 1]), 6) == color_series("P", 1, 2, (1, 3), 6)
    assert build(SeriesId.of("OB_N", d=2), 4) == oberdieck_series("N", 2, 4)
    assert build(SeriesId.of("G_DN", d=3, n=4), 6) == g_series(3, 4, 6)
    assert build(SeriesId.of("GAUSS_BINOMIAL", n=4, m=2)).outer_poly() == gauss_binomial(4, 2)
    assert build(SeriesId.of("GEN_GAUSS_C", k=2, m=1, n=1)).outer_poly() == ZPoly([1, 4, 1])
    assert build(SeriesId.of("HILBERT_BETTI", b0=1, b1=0, b2=22), 3) == hilbert_series(1, 0, 22, 3)
    assert str(SeriesId.of("KRANK", k=3)) == "KRANK(k=3)"
    with pytest.raises(ValueError):
        build(SeriesId.of("CRANK"))
    with pytest.raises(ValueError):
        build(SeriesId.of("HILBERT_BETTI", b0=1), 3)
    with pytest.raises(ValueError):
        SeriesId.of("NOPE")
