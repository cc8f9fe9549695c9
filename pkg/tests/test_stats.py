"""Exact statistics and asymptotic-law comparisons."""

from __future__ import annotations

from fractions import Fraction

import pytest

from deutschpaths.paths import PathFamilyQuery, count_dp, enumerate_paths
from deutschpaths.stats import (
    LAWS,
    ZeroCount,
    area_total,
    asymptotic_report,
    avg_area,
    avg_elevation,
    avg_height,
    closed_count,
    height_total,
    open_count,
)


def brute_totals(n, family):
    end = 0 if family == "closed" else None
    paths = enumerate_paths(PathFamilyQuery("deutsch", n, end_level=end))
    return (
        sum(p.height for p in paths),
        sum(p.area for p in paths),
        sum(p.end_level for p in paths),
    )


class TestCounts:
    def test_sequences(self):
        assert [closed_count(n) for n in range(10)] == [1, 0, 1, 1, 3, 6, 15, 36, 91, 232]
        assert [open_count(n) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]

    @pytest.mark.parametrize("n", [0, 1, 5, 40])
    def test_counts_match_dp(self, n):
        assert closed_count(n) == count_dp(PathFamilyQuery("deutsch", n, end_level=0))
        assert open_count(n) == count_dp(PathFamilyQuery("deutsch", n))


class TestTotals:
    @pytest.mark.parametrize("n", range(9))
    def test_height_totals_match_enumeration(self, n):
        hc, _, _ = brute_totals(n, "closed")
        ho, _, _ = brute_totals(n, "open")
        assert height_total(n, "closed") == hc
        assert height_total(n, "open") == ho

    @pytest.mark.parametrize("n", range(9))
    def test_area_total_matches_enumeration(self, n):
        _, ac, _ = brute_totals(n, "closed")
        assert area_total(n) == ac

    def test_first_height_totals(self):
        assert [height_total(n, "closed") for n in range(7)] == [0, 0, 1, 2, 6, 16, 44]
        assert [height_total(n, "open") for n in range(7)] == [0, 1, 3, 8, 22, 60, 165]

    def test_first_area_totals(self):
        assert [area_total(n) for n in range(7)] == [0, 0, 1, 3, 12, 39, 129]

    def test_large_n_runs_fast(self):
        # the W-table route has to be usable at n = 1000
        assert height_total(1000, "closed") > 0
        assert area_total(400) > 0

    def test_bad_family(self):
        with pytest.raises(ValueError):
            height_total(5, "reversed")


class TestAverages:
    def test_exact_values(self):
        # n=4: three closed paths with heights 3, 2, 1 and areas 6, 4, 2
        assert avg_height(4, "closed") == Fraction(6, 3)
        assert avg_area(4) == Fraction(12, 3)

    def test_avg_elevation_is_area_per_step(self):
        for n in range(2, 9):
            if closed_count(n) == 0:
                continue
            assert avg_elevation(n) == avg_area(n) / n
            _, ac, _ = brute_totals(n, "closed")
            assert avg_elevation(n) == Fraction(ac, n * closed_count(n))

    def test_rejects_n_below_one(self):
        for fn in (lambda: avg_height(0), lambda: avg_area(-1), lambda: avg_elevation(0)):
            with pytest.raises(ValueError):
                fn()

    def test_zero_count_raises(self):
        with pytest.raises(ZeroCount):
            avg_height(1, "closed")
        with pytest.raises(ZeroCount):
            avg_area(1)


class TestLaws:
    def test_catalog_names(self):
        assert set(LAWS) == {
            "avg_height_closed",
            "avg_height_open",
            "closed_height_vs_motzkin_height",
            "motzkin_count",
            "closed_count",
            "area_total",
            "avg_area",
            "avg_elevation",
        }

    def test_ratios_are_finite_floats(self):
        for name, law in LAWS.items():
            r = law.ratio(50)
            assert isinstance(r, float) and r == r and abs(r) != float("inf"), name

    def test_height_ratio_improves_with_n(self):
        law = LAWS["avg_height_closed"]
        assert abs(law.ratio(1000) - 1) < abs(law.ratio(100) - 1)
        assert 0.5 < law.ratio(1000) < 1.5

    def test_count_laws_near_one_at_400(self):
        assert 0.8 < LAWS["motzkin_count"].ratio(400) < 1.25
        assert 0.8 < LAWS["closed_count"].ratio(400) < 1.25
        assert 0.8 < LAWS["area_total"].ratio(400) < 1.25

    def test_factor_of_two_separation(self):
        # closed paths are about twice as high as Motzkin paths of equal length
        r = LAWS["closed_height_vs_motzkin_height"].ratio(1000)
        assert 1.5 < r < 2.5

    def test_float_range_guard(self):
        # 3^n leaves float range at n = 647; the guard must say so
        with pytest.raises(OverflowError, match="not evaluable"):
            LAWS["closed_count"].ratio(647)
        assert LAWS["closed_count"].ratio(646) > 0


class TestReport:
    def test_rows(self):
        rows = asymptotic_report([10, 50], ["avg_area", "motzkin_count"])
        assert len(rows) == 4
        assert {r.law for r in rows} == {"avg_area", "motzkin_count"}
        assert {r.n for r in rows} == {10, 50}
        for r in rows:
            assert r.ratio == LAWS[r.law].ratio(r.n)

    def test_unknown_law_rejected(self):
        with pytest.raises(KeyError):
            asymptotic_report([10], ["no_such_law"])
