import pytest

from unimodal.catalog import color_series, composition_series, gauss_binomial, plane_partition_series
from unimodal.oracles import (
    BoundExceeded,
    Histogram,
    count_partitions,
    enum_color_partitions,
    enum_compositions,
    enum_f_partitions,
    enum_partitions,
    enum_plane_partitions,
    plane_partition_histogram,
)


def test_histogram_basics():
    h = Histogram.of([-1, 1, 1, 0])
    assert h.total == 4 and h[1] == 2 and h[7] == 0
    assert h == {-1: 1, 0: 1, 1: 2, 5: 0}
    assert not h.is_symmetric()
    assert Histogram.of([-2, 2, 0]).is_symmetric()
    assert h.to_zpoly()[1] == 2


def test_partition_enumeration():
    assert [count_partitions(n) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    assert sorted(enum_partitions(5, distinct=True)) == [(3, 2), (4, 1), (5,)]
    assert sorted(enum_partitions(4, parts=[1, 3])) == [(1, 1, 1, 1), (3, 1)]
    assert list(enum_partitions(3, max_mult=1, parts=[1])) == []
    with pytest.raises(BoundExceeded):
        next(enum_partitions(61))


def test_plane_partition_examples():
    assert len(enum_plane_partitions(3)) == 6
    assert plane_partition_histogram(0, 2) == {-1: 1, 0: 1, 1: 1}
    assert plane_partition_histogram(1, 1) == {1: 1}
    with pytest.raises(BoundExceeded):
        enum_plane_partitions(13)


def test_f_partitions_give_gauss_coefficients():
    for m in range(5):
        for n in range(5):
            g = gauss_binomial(m + n, m)
            assert [enum_f_partitions(m, n, j) for j in range(m * n + 1)] == [g[j] for j in range(m * n + 1)]
    with pytest.raises(BoundExceeded):
        enum_f_partitions(2, 2, 5)


def test_composition_examples():
    assert enum_compositions("V", 2) == {-2: 1, -1: 1, 0: 2, 1: 1, 2: 1}
    assert enum_compositions("XD", 3) == {-1: 1, 0: 1, 1: 1}
    assert enum_compositions("V", 0) == {0: 1}
    with pytest.raises(ValueError):
        enum_compositions("W", 3)


def test_color_examples():
    assert enum_color_partitions("P", 2, 1, [1], 1) == {-1: 1, 1: 1}
    assert enum_color_partitions("P", 2, 1, [1], 2) == {0: 1}
    assert enum_color_partitions("D", None, None, [1, 2], 3) == {-2: 1, 0: 2, 2: 1}
    with pytest.raises(ValueError):
        enum_color_partitions("P", 3, 1, [1], 2)


@pytest.mark.parametrize("kind", ["V", "VD", "X", "XD", "VO", "VOD", "XO", "XOD"])
def test_histograms_are_symmetric_and_match_series(kind):
    s = composition_series(kind, 10)
    for n in range(11):
        h = enum_compositions(kind, n)
        assert h.is_symmetric()
        assert h.to_zpoly() == s.slice(n)


def test_plane_and_color_histograms_match_series():
    for delta in (0, 1, -1):
        s = plane_partition_series(delta, 7)
        for n in range(8):
            h = plane_partition_histogram(delta, n)
            assert h.to_zpoly() == s.slice(n)
            # delta * w_0 breaks the reflection unless delta = 0
            assert h.is_symmetric() or delta != 0
    assert not plane_partition_histogram(1, 1).is_symmetric()
    s = color_series("R", 1, 2, (1, 2, 2), 8)
    for n in range(9):
        assert enum_color_partitions("R", 1, 2, (1, 2, 2), n).to_zpoly() == s.slice(n)
