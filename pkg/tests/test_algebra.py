"""Exact arithmetic: Poly/RatFn normalization, series rules, substitution."""

from __future__ import annotations

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deutschpaths.algebra import (
    KERNEL,
    V,
    DivisionByZero,
    DivisorNotUnit,
    PoleAtOrigin,
    Poly,
    RatFn,
    Series,
    coeff_of_z,
    compose_with_v,
    expand_in_v,
    expand_in_z,
    load_cache,
    poly_gcd,
    save_cache,
    trinomial,
    trinomial_row,
    v_of_z,
)
from deutschpaths.paths import PathFamilyQuery, count_dp

MOTZKIN = (1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188)

small_polys = st.builds(
    Poly, st.lists(st.integers(-6, 6), min_size=0, max_size=6)
)
nonzero_polys = small_polys.filter(lambda p: not p.is_zero())


class TestPoly:
    def test_canonical_trailing_zeros(self):
        assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
        assert Poly(()).degree == -1
        assert Poly((0, 0)).is_zero()

    def test_fraction_coefficients_collapse_to_int(self):
        p = Poly((Fraction(4, 2), Fraction(1, 3)))
        assert p.coeffs == (2, Fraction(1, 3))

    def test_arithmetic(self):
        p, q = Poly((1, 1)), Poly((1, -1))
        assert p * q == Poly((1, 0, -1))
        assert p + q == Poly((2,))
        assert p - p == Poly()
        assert (1 - Poly.monomial(1, 3)) == Poly((1, 0, 0, -1))
        assert Poly.geometric(3) == Poly((1, 1, 1))

    def test_divmod_exact(self):
        num = Poly((1, 0, 0, 0, 0, 0, -1))  # 1 - v^6
        q, r = divmod(num, Poly((1, 0, -1)))
        assert r.is_zero() and q == Poly((1, 0, 1, 0, 1))
        assert num.exact_div(Poly((1, 0, 1, 0, 1))) == Poly((1, 0, -1))
        with pytest.raises(ValueError):
            Poly((1, 1, 1)).exact_div(Poly((1, 1)))

    def test_divide_by_zero(self):
        with pytest.raises(DivisionByZero):
            divmod(Poly((1,)), Poly())

    def test_evaluation(self):
        p = KERNEL
        assert p(2) == 7
        assert p(Fraction(1, 2)) == Fraction(7, 4)
        assert p(V) == KERNEL  # composition with identity

    def test_pow(self):
        assert Poly((1, 1)) ** 3 == Poly((1, 3, 3, 1))
        assert Poly((1, 1)) ** 0 == Poly((1,))

    @given(small_polys, small_polys, small_polys)
    @settings(max_examples=100, deadline=None)
    def test_ring_axioms(self, a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)

    @given(small_polys, nonzero_polys)
    @settings(max_examples=100, deadline=None)
    def test_division_identity(self, a, b):
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


class TestGcd:
    def test_cyclotomic_example(self):
        g = poly_gcd(Poly((1, 0, 0, 0, -1)), Poly((1, 0, 0, 0, 0, 0, -1)))
        assert g == Poly((1, 0, -1))  # 1 - v^2

    def test_normalization_is_primitive_with_positive_low_coeff(self):
        g = poly_gcd(Poly((-2, 0, 2)), Poly((-4, 4)))
        assert g == Poly((1, -1))  # content stripped, low coefficient positive

    @given(small_polys, small_polys)
    @settings(max_examples=100, deadline=None)
    def test_gcd_divides_both(self, a, b):
        g = poly_gcd(a, b)
        if g.is_zero():
            assert a.is_zero() and b.is_zero()
        else:
            assert (a % g).is_zero() and (b % g).is_zero()


class TestRatFn:
    def test_canonical_form(self):
        f = RatFn(Poly((1, 0, 0, -1)), Poly((1, -1)))  # (1-v^3)/(1-v)
        assert f.is_polynomial() and f.as_polynomial() == KERNEL
        # denominator is made monic
        g = RatFn(KERNEL, Poly((2, 2)))
        assert g.den == Poly((1, 1))
        assert g.num == Poly((Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)))

    def test_gcd_reduction(self):
        f = RatFn(Poly((1, 1)) * KERNEL, Poly((1, 1)) ** 2)
        assert f == RatFn(KERNEL, Poly((1, 1)))

    def test_zero_denominator_rejected(self):
        with pytest.raises(DivisionByZero):
            RatFn(Poly((1,)), Poly())
        with pytest.raises(DivisionByZero):
            RatFn(Poly((1,))) / RatFn(Poly())

    def test_arithmetic_and_pow(self):
        f = RatFn(KERNEL, Poly((1, 1)))
        assert f - f == RatFn(Poly())
        assert f / f == RatFn(Poly((1,)))
        assert f**-2 == RatFn(Poly((1, 1)) ** 2, KERNEL**2)
        assert (f + 1) * Poly((1, 1)) == RatFn(KERNEL + Poly((1, 1)))

    def test_evaluate(self):
        f = RatFn(KERNEL, Poly((1, 1)))
        assert f(Fraction(1, 2)) == Fraction(7, 6)
        with pytest.raises(DivisionByZero):
            f(-1)

    @given(nonzero_polys, nonzero_polys)
    @settings(max_examples=100, deadline=None)
    def test_self_division_is_one(self, a, b):
        f = RatFn(a, b)
        assert f / f == RatFn(Poly((1,)))


class TestSeries:
    def test_order_tracking(self):
        s = Series((1, 2, 3))
        assert s.order == 2 and s.coeff(2) == 3 and s.coeff(-1) == 0
        with pytest.raises(IndexError):
            s.coeff(3)
        with pytest.raises(IndexError):
            s.truncate(5)
        assert s.truncate(1).coeffs == (1, 2)

    def test_min_order_rule(self):
        a, b = Series((1, 2, 3)), Series((1, 1))
        assert (a + b).order == 1
        assert (a * b).order == 1
        assert (a - b).order == 1
        assert (a / b).order == 1
        # scalars do not truncate
        assert (a * 5).order == 2 and (a + 5).order == 2

    def test_multiplication(self):
        a = Series((1, 1, 1))
        assert (a * a).coeffs == (1, 2, 3)
        assert (a * 0).coeffs == (0, 0, 0)

    def test_division_requires_unit(self):
        with pytest.raises(DivisorNotUnit):
            Series((1, 2)) / Series((0, 1))
        one = Series((1, 0, 0, 0))
        geo = one / Series((1, -1, 0, 0))
        assert geo.coeffs == (1, 1, 1, 1)

    def test_json_roundtrip(self):
        s = Series((1, Fraction(1, 3), -2))
        assert Series.from_json(s.to_json()) == s

    @given(st.lists(st.integers(-9, 9), min_size=1, max_size=8))
    @settings(max_examples=100, deadline=None)
    def test_division_inverts_multiplication(self, coeffs):
        b = Series([1] + coeffs)  # unit constant term
        a = Series([2, 0, 1] + coeffs)
        n = min(a.order, b.order)
        assert ((a * b) / b).coeffs == a.coeffs[: n + 1]


class TestSubstitution:
    def test_v_series_is_shifted_motzkin(self):
        assert v_of_z(10).coeffs == (0,) + MOTZKIN[:10]

    def test_defining_equation(self):
        n = 60
        vv = v_of_z(n)
        z = Series((0, 1) + (0,) * (n - 1))
        assert z * (1 + vv + vv * vv) == vv

    def test_closed_form_square_identity(self):
        # v = (1 - z - sqrt(1-2z-3z^2))/(2z) rearranges to (2zv+z-1)^2 = 1-2z-3z^2
        n = 30
        vv = v_of_z(n)
        z = Series((0, 1) + (0,) * (n - 1))
        assert ((2 * z * vv + z - 1) ** 2).coeffs == (1, -2, -3) + (0,) * (n - 2)

    def test_substitution_roundtrip_order_200(self):
        back = expand_in_z(RatFn(V, KERNEL), 200)
        assert back.coeffs == (0, 1) + (0,) * 199

    def test_motzkin_expansion(self):
        assert expand_in_z(RatFn(KERNEL), 10).coeffs == MOTZKIN

    def test_closed_count_expansion(self):
        s = expand_in_z(RatFn(KERNEL, Poly((1, 1))), 10)
        assert s.coeffs == (1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603)

    def test_constant_expansion(self):
        assert expand_in_z(RatFn(Poly((1,))), 5).coeffs == (1, 0, 0, 0, 0, 0)

    def test_pole_at_origin(self):
        with pytest.raises(PoleAtOrigin):
            expand_in_z(RatFn(Poly((1,)), V), 5)
        with pytest.raises(PoleAtOrigin):
            expand_in_v(RatFn(Poly((1,)), V), 5)
        with pytest.raises(PoleAtOrigin):
            coeff_of_z(RatFn(Poly((1,)), V), 5)

    def test_motzkin_functional_equation(self):
        n = 30
        m = expand_in_z(RatFn(KERNEL), n)
        z = Series((0, 1) + (0,) * (n - 1))
        assert 1 + z * m + z * z * m * m == m

    @given(
        st.lists(st.integers(-4, 4), min_size=1, max_size=5),
        st.integers(1, 4),
        st.lists(st.integers(-4, 4), min_size=0, max_size=4),
    )
    @settings(max_examples=40, deadline=None)
    def test_two_pipelines_agree(self, num, den0, den_rest):
        f = RatFn(Poly(num), Poly([den0] + den_rest))
        direct = expand_in_z(f, 15)
        via_v = compose_with_v(expand_in_v(f, 15).coeffs, 15)
        assert direct == via_v

    @given(
        st.lists(st.integers(-4, 4), min_size=1, max_size=5),
        st.integers(1, 4),
        st.lists(st.integers(-4, 4), min_size=0, max_size=4),
        st.integers(0, 20),
    )
    @settings(max_examples=40, deadline=None)
    def test_single_coefficient_matches_series(self, num, den0, den_rest, n):
        f = RatFn(Poly(num), Poly([den0] + den_rest))
        assert coeff_of_z(f, n) == expand_in_z(f, 20).coeff(n)

    def test_single_coefficient_matches_dp_at_large_n(self):
        f = RatFn(KERNEL, Poly((1, 1)))
        assert coeff_of_z(f, 300) == count_dp(PathFamilyQuery("deutsch", 300, end_level=0))


class TestTrinomials:
    def test_examples(self):
        assert trinomial(0, 0) == 1
        assert trinomial(3, 3) == 7
        assert trinomial(3, 2) == 6
        assert trinomial(5, -1) == 0
        assert trinomial(5, 11) == 0

    def test_row_against_direct_expansion(self):
        for n in range(12):
            assert trinomial_row(n) == (KERNEL**n).coeffs

    @pytest.mark.parametrize("n", range(0, 51, 5))
    def test_row_identities(self, n):
        row = trinomial_row(n)
        assert len(row) == 2 * n + 1
        assert sum(row) == 3**n
        assert row == row[::-1]

    def test_motzkin_identity_to_50(self):
        m = expand_in_z(RatFn(KERNEL), 50)
        for n in range(51):
            assert m.coeff(n) == trinomial(n, n) - trinomial(n, n - 2)


class TestDiskCache:
    def test_save_load_roundtrip(self, tmp_path):
        trinomial_row(17)
        v_of_z(12)
        target = save_cache(tmp_path)
        assert target.exists()
        payload = json.loads(target.read_text())
        assert payload["format"] == "deutschpaths-cache"
        assert payload["version"] == 1
        assert payload["trinomial_rows"]["17"] == list(trinomial_row(17))
        assert load_cache(tmp_path) is True

    def test_missing_cache_is_fine(self, tmp_path):
        assert load_cache(tmp_path / "nowhere") is False

    def test_corrupt_cache_rejected(self, tmp_path):
        (tmp_path / "algebra_cache.json").write_text(json.dumps({"format": "other"}))
        with pytest.raises(ValueError):
            load_cache(tmp_path)
