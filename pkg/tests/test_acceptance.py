"""Acceptance criteria, one test per criterion, each under its time limit."""

import itertools
import time
from contextlib import contextmanager

import pytest

from unimodal.catalog import (
    COMPOSITION_KINDS,
    INF,
    a_from_theta,
    color_series,
    composition_series,
    crank_series,
    gauss_binomial,
    gen_gauss,
    n_from_theta,
    oberdieck_series,
    plane_partition_series,
)
from unimodal.membership import (
    ALL_CLASSES,
    U1,
    U2,
    Witness,
    check_membership,
    check_slice,
    is_symmetric_unimodal,
    random_member,
    random_member_series,
)
from unimodal.oracles import (
    enum_color_partitions,
    enum_compositions,
    enum_f_partitions,
    plane_partition_histogram,
)
from unimodal.series import ZPoly
from unimodal.verifier import PASS, WITNESS_OK, run_scenario


@contextmanager
def within(seconds: float):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < seconds, f"took {elapsed:.1f} s, limit {seconds} s"


def passes(*ids: str) -> None:
    for sid in ids:
        r = run_scenario(sid)
        assert r.status == PASS, (sid, r.witness, r.detail)


@pytest.mark.criterion(1, "F-partition counts equal Gauss coefficients, m, n <= 6")
def test_criterion_01_gauss_identity():
    with within(10):
        for m, n in itertools.product(range(7), range(7)):
            g = gauss_binomial(m + n, m)
            for j in range(m * n + 1):
                assert enum_f_partitions(m, n, j) == g[j], (m, n, j)


@pytest.mark.criterion(2, "c_k Gauss polynomials symmetric unimodal, k <= 4, m, n <= 8")
def test_criterion_02_ck_unimodal():
    with within(30):
        for k, m, n in itertools.product(range(1, 5), range(9), range(9)):
            p = gen_gauss("c", k, m, n)
            assert p.lo == 0 and p.hi == k * m * n
            assert is_symmetric_unimodal(p), (k, m, n)
        assert run_scenario("T-CK").status == PASS


@pytest.mark.criterion(3, "G_{k,n} in U^2 for odd k <= 11, n <= 10, zmax = 20")
def test_criterion_03_gkn_conjecture():
    with within(60):
        r = run_scenario("C-GKN")
        assert r.bounds == {"k": (3, 5, 7, 9, 11), "n": 10, "zmax": 20}
        assert r.status == PASS, r.witness


@pytest.mark.criterion(4, "b_0 theorem and unimodality scan for n <= 30")
def test_criterion_04_plane_partitions():
    with within(60):
        passes("T-PP", "C-PP")
        s = plane_partition_series(0, 30)
        assert check_membership(s, U1).member and check_membership(s, U2).member


COLOR_CASES = [
    ("P", 1, 1, (1, 2, 3)),
    ("P", 2, 2, (1, 2, 4)),
    ("P", 2, INF, (1, 3)),
    ("R", 1, 2, (1, 2, 2)),
    ("R", 2, 1, (1, 2, 3)),
    ("R", 1, INF, (2, 3)),
    ("D", None, None, (1, 2, 3, 5)),
]


@pytest.mark.criterion(5, "oracle equivalences: plane n <= 10, compositions n <= 18, colours n <= 15")
def test_criterion_05_oracles():
    with within(120):
        for delta in (0, 1, -1, 2):
            s = plane_partition_series(delta, 10)
            for n in range(11):
                assert plane_partition_histogram(delta, n).to_zpoly() == s.slice(n), (delta, n)
        for kind in COMPOSITION_KINDS:
            s = composition_series(kind, 18)
            for n in range(19):
                assert enum_compositions(kind, n).to_zpoly() == s.slice(n), (kind, n)
        for kind, a, b, S in COLOR_CASES:
            s = color_series(kind, a, b, S, 15)
            for n in range(16):
                assert enum_color_partitions(kind, a, b, S, n).to_zpoly() == s.slice(n), (kind, a, b, S, n)


@pytest.mark.criterion(6, "negative witnesses for the crank (U^2) and X (U^1)")
def test_criterion_06_witnesses():
    crank = check_membership(crank_series(10), U2)
    assert not crank.member
    assert crank.witness == Witness(1, 0, (-1, 0), "negative-coefficient")
    x = check_membership(composition_series("X", 10), U1)
    assert not x.member
    assert x.witness == Witness(5, 0, (2, 3), "non-monotone")
    for sid in ("W-CRANK", "W-X1"):
        assert run_scenario(sid).status == WITNESS_OK


@pytest.mark.criterion(7, "membership theorems at their listed bounds")
def test_criterion_07_theorems():
    with within(300):
        passes("T-KRANK", "T-COMP-U", "T-COMP-T", "T-ODD", "T-KLL", "T-COLOR", "T-D", "T-OB", "T-OB-N")


@pytest.mark.criterion(8, "strict-mode and U^1 composition numerics for n <= 50")
def test_criterion_08_strictness_numerics():
    with within(300):
        passes("N-COMP-T", "N-ODD-T", "C-V1")
        for sid in ("N-COMP-T", "N-ODD-T", "C-V1"):
            assert run_scenario(sid).bounds["omax"] == 50


def _diff_form(a: ZPoly, b: ZPoly, n: int, nu: int) -> int:
    # sum_{r >= 0} (a_{n-r} - a_{n+r+nu}) (b_r - b_{r+nu})
    top = max(abs(a.lo), abs(a.hi), abs(b.lo), abs(b.hi)) + abs(n) + nu + 1
    return sum((a[n - r] - a[n + r + nu]) * (b[r] - b[r + nu]) for r in range(top))


@pytest.mark.criterion(9, "semiring closure and the convolution identity, 1000 pairs per class")
def test_criterion_09_semiring():
    with within(30):
        for spec in ALL_CLASSES:
            for k in range(1000):
                seed = 7919 * k + 104729 * spec.nu + (1 if spec.strict else 0)
                a, b = random_member(spec, seed), random_member(spec, seed + 1)
                c = a * b
                assert check_slice(a + b, spec).member and check_slice(c, spec).member
                for n in range(0, c.hi + 1):
                    lhs = c[n] - c[n + spec.nu]
                    assert lhs == _diff_form(a, b, n, spec.nu) == _diff_form(b, a, n, spec.nu)
                if k % 10 == 0:
                    f = random_member_series(spec, seed, omax=3, size=3)
                    g = random_member_series(spec, seed + 1, omax=3, size=3)
                    assert check_membership(f + g, spec).member
                    assert check_membership(f * g, spec).member
        # the literal second expression with b_{n-t+nu} fails already here
        p = ZPoly.from_terms({-1: 1, 0: 1, 1: 1})
        c = p * p
        literal = sum((p[0 - t] - p[0 - t + 1]) * (p[t] - p[t + 1]) for t in range(4))
        assert c[0] - c[1] == 1 and literal == 0


@pytest.mark.criterion(10, "Betti-number iff scan over [0, 5]^3 at omax = 12, four classes")
def test_criterion_10_hilbert_iff():
    with within(180):
        for sid in ("T-HILB", "T-HILB-S"):
            r = run_scenario(sid)
            assert r.bounds == {"bmax": 5, "omax": 12}
            assert r.status == PASS, r.detail["mismatches"]
            agree = r.detail["agree"]
            assert agree["both"] + agree["neither"] == 2 * 6 ** 3
            assert agree["both"] > 0 and agree["neither"] > 0


@pytest.mark.criterion(11, "fractional-exponent recomputation of A and N (d = 2) to omax = 10")
def test_criterion_11_oberdieck_normalization():
    with within(30):
        assert a_from_theta(10) == oberdieck_series("A", None, 10)
        assert n_from_theta(2, 10) == oberdieck_series("N", 2, 10)
        assert run_scenario("I-OBNORM").status == PASS
