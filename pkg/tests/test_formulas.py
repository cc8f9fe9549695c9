"""Generating-function catalog: identities, oracles, golden series."""

from __future__ import annotations

import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deutschpaths.algebra import KERNEL, Poly, RatFn, Series, expand_in_z
from deutschpaths.formulas import (
    BadParams,
    FormulaId,
    coeff_closed,
    coeff_open,
    coeff_reversed_formal,
    combinatorial_ids,
    formula,
    oracle_check,
)
from deutschpaths.paths import PathFamilyQuery, count_dp, enumerate_paths
from deutschpaths.reporting import MismatchFound

GOLDEN = json.loads((Path(__file__).parent / "data" / "golden_series.json").read_text())


class TestCatalogValues:
    def test_phi0_limit_series(self):
        s = expand_in_z(formula("phi0_limit"), 10)
        assert s.coeffs == (1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603)

    def test_area_series(self):
        s = expand_in_z(formula("area_A"), 10)
        assert s.coeffs == (0, 0, 1, 3, 12, 39, 129, 411, 1300, 4065, 12633)

    def test_open_sum_limit_is_motzkin(self):
        s = expand_in_z(formula("open_sum_limit"), 6)
        assert s.coeffs == (1, 1, 2, 4, 9, 21, 51)
        assert formula("open_sum_limit") == formula("motzkin_M") == RatFn(KERNEL)

    def test_psi0_equals_phi0_bounded(self):
        for h in range(6):
            assert formula(f"psi0({h})") == formula(f"phi0_bounded({h})")

    def test_phi_at_i0_equals_phi0_bounded(self):
        for h in range(6):
            assert formula(f"phi({h},0)") == formula(f"phi0_bounded({h})")

    def test_reversed_formal_is_one_minus_v_cubed(self):
        f = formula("reversed_limit_formal")
        assert f == RatFn(Poly((1, 0, 0, -1)))
        s = expand_in_z(f, 8)
        assert s.coeffs == (1, 0, 0, -1, -3, -9, -25, -69, -189)
        assert s.coeff(3) == -1  # first negative coefficient

    def test_height_sum_closed_small_values(self):
        s = formula("height_sum_closed(6)")
        # n=4: the three closed paths have heights 3, 2, 1
        assert s.coeff(4) == 6
        assert s.coeffs == (0, 0, 1, 2, 6, 16, 44)

    def test_height_sum_open_small_values(self):
        s = formula("height_sum_open(6)")
        assert s.coeffs == (0, 1, 3, 8, 22, 60, 165)

    def test_closed_height_ge_picks_out_tall_paths(self):
        # the single closed path of length 3 (U U D2) has height 2
        s = expand_in_z(formula("closed_height_ge(1)"), 3)
        assert s.coeff(3) == 1
        s = expand_in_z(formula("closed_height_ge(2)"), 3)
        assert s.coeff(3) == 1
        s = expand_in_z(formula("closed_height_ge(3)"), 3)
        assert s.coeff(3) == 0


class TestIdentities:
    @pytest.mark.parametrize("h", range(40))
    def test_telescoping_height_split(self, h):
        lhs = formula("phi0_limit") - formula(f"phi0_bounded({h})")
        assert lhs == formula(f"closed_height_ge({h + 1})")

    @pytest.mark.parametrize("h", range(21))
    def test_phi_sum_closed_form(self, h):
        total = formula(f"phi({h},0)")
        for i in range(1, h + 1):
            total = total + formula(f"phi({h},{i})")
        assert total == formula(f"open_sum({h})")

    @pytest.mark.parametrize("h", range(21))
    def test_psi_sum_closed_form(self, h):
        total = formula(f"psi0({h})")
        for i in range(1, h + 1):
            total = total + formula(f"psi({h},{i})")
        assert total == formula(f"reversed_sum({h})")

    @pytest.mark.parametrize("h", [0, 5, 17, 30])
    def test_bounded_matches_limit_below_h(self, h):
        bounded = expand_in_z(formula(f"phi0_bounded({h})"), h)
        limit = expand_in_z(formula("phi0_limit"), h)
        assert bounded == limit

    def test_alternating_identity_to_50(self):
        s = expand_in_z(formula("reversed_limit_formal"), 50)
        for n in range(51):
            assert s.coeff(n) == coeff_reversed_formal(n)

    def test_psi1_denominator_carries_one_plus_v(self):
        f = formula("psi(3,1)")
        assert (f.den % Poly((1, 1))).is_zero()


class TestCoefficientFormulas:
    def test_examples(self):
        assert coeff_closed(4) == 3
        assert coeff_closed(0) == 1
        assert coeff_open(4) == 9

    def test_against_series_to_50(self):
        sc = expand_in_z(formula("phi0_limit"), 50)
        so = expand_in_z(formula("open_sum_limit"), 50)
        for n in range(51):
            assert coeff_closed(n) == sc.coeff(n)
            assert coeff_open(n) == so.coeff(n)

    @given(st.integers(0, 200))
    @settings(max_examples=50, deadline=None)
    def test_closed_counts_are_nonnegative(self, n):
        assert coeff_closed(n) >= 0
        assert coeff_open(n) >= 1


class TestFormulaId:
    def test_parse_and_str(self):
        fid = FormulaId.parse(" phi(4, 1) ")
        assert fid == FormulaId("phi", (4, 1))
        assert str(fid) == "phi(4,1)"
        assert str(FormulaId.parse("motzkin_M")) == "motzkin_M"

    @pytest.mark.parametrize(
        "bad",
        [
            "phi(1,2)",  # i > h
            "psi(3,0)",  # psi starts at i = 1
            "psi(3,4)",
            "closed_height_ge(0)",
            "phi0_bounded(-1)",
            "phi(1)",  # wrong arity
            "motzkin_M(3)",
            "no_such_formula",
            "phi[2]",
        ],
    )
    def test_bad_params(self, bad):
        with pytest.raises(BadParams):
            formula(bad)

    def test_height_sum_orders_validated(self):
        with pytest.raises(BadParams):
            formula("height_sum_closed(-1)")


class TestGoldenSeries:
    def test_every_golden_series_matches(self):
        order = GOLDEN["order"]
        for name, coeffs in GOLDEN["series"].items():
            obj = formula(name)
            series = obj if isinstance(obj, Series) else expand_in_z(obj, order)
            assert [str(c) for c in series.coeffs] == coeffs, name

    def test_golden_file_covers_every_formula_name(self):
        names = {FormulaId.parse(k).name for k in GOLDEN["series"]}
        from deutschpaths.formulas import _SPECS

        assert names == set(_SPECS)


class TestOracle:
    def test_full_battery(self):
        report = oracle_check(enum_max=7, dp_max=25, h_max=4)
        assert report.ok
        assert report.data["formulas_checked"] == len(combinatorial_ids(4, 25))

    def test_counting_series_are_nonnegative_integers(self):
        for fid in combinatorial_ids(3, 20):
            obj = formula(fid)
            series = obj if isinstance(obj, Series) else expand_in_z(obj, 20)
            assert series.is_integral(), fid
            assert all(c >= 0 for c in series.coeffs), fid

    def test_mismatch_raises_with_witness(self, monkeypatch):
        import deutschpaths.formulas as formulas_mod

        wrong = RatFn(KERNEL, Poly((1, 2)))
        monkeypatch.setitem(
            formulas_mod._SPECS, "phi0_limit", (0, lambda: wrong)
        )
        with pytest.raises(MismatchFound) as exc:
            oracle_check(
                ids=[FormulaId("phi0_limit")], enum_max=5, dp_max=10, h_max=2
            )
        assert exc.value.report.failures
        assert "phi0_limit" in exc.value.report.failures[0].witness

    def test_threads_agree_with_serial(self):
        serial = oracle_check(enum_max=5, dp_max=12, h_max=2)
        threaded = oracle_check(enum_max=5, dp_max=12, h_max=2, threads=4)
        assert serial.ok and threaded.ok
        assert [c.name for c in serial.checks] == [c.name for c in threaded.checks]


class TestSingleFormulaOracleSpot:
    """Direct spot checks independent of the battery plumbing."""

    @pytest.mark.parametrize("h,i", [(1, 0), (2, 1), (4, 4), (5, 2)])
    def test_phi_counts_bounded_paths(self, h, i):
        s = expand_in_z(formula(f"phi({h},{i})"), 9)
        for n in range(10):
            q = PathFamilyQuery("deutsch", n, end_level=i, max_height=h)
            assert s.coeff(n) == len(enumerate_paths(q))

    @pytest.mark.parametrize("h,i", [(1, 1), (3, 1), (4, 2), (5, 5)])
    def test_psi_counts_reversed_paths(self, h, i):
        s = expand_in_z(formula(f"psi({h},{i})"), 9)
        for n in range(10):
            q = PathFamilyQuery("reversed", n, end_level=i, max_height=h)
            assert s.coeff(n) == count_dp(q)
