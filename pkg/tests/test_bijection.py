"""Recursive correspondence between open paths and Motzkin paths."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from deutschpaths.bijection import (
    FirstReturnDecomposition,
    NotAPath,
    certify,
    decompose,
    from_motzkin,
    recompose,
    returns_count,
    to_motzkin,
)
from deutschpaths.paths import (
    DeutschPath,
    PathFamilyQuery,
    enumerate_paths,
    validate_path,
)


def deutsch_paths(n):
    return enumerate_paths(PathFamilyQuery("deutsch", n))


def motzkin_paths(n):
    return enumerate_paths(PathFamilyQuery("motzkin", n))


class TestDecompose:
    def test_no_return(self):
        p = validate_path("U U U", "deutsch")
        d = decompose(p)
        assert d.kind == "no_return"
        assert d.tail.tokens() == "U U"
        assert d.inner is None and d.remainder is None

    def test_returns(self):
        p = validate_path("U U D2 U", "deutsch")
        d = decompose(p)
        assert d.kind == "returns"
        assert d.inner.tokens() == "U"
        assert d.down_size == 2
        assert d.remainder.tokens() == "U"

    def test_empty_path(self):
        d = decompose(validate_path("", "deutsch"))
        assert d.kind == "empty"

    def test_recompose_inverts(self):
        for n in range(8):
            for p in deutsch_paths(n):
                assert recompose(decompose(p)).steps == p.steps

    def test_recompose_rejects_wrong_down_size(self):
        p = validate_path("U U D2", "deutsch")
        d = decompose(p)
        bad = FirstReturnDecomposition(
            kind=d.kind,
            tail=d.tail,
            inner=d.inner,
            down_size=d.down_size + 1,
            remainder=d.remainder,
        )
        with pytest.raises(NotAPath):
            recompose(bad)


class TestForwardMap:
    def test_empty(self):
        assert to_motzkin(validate_path("", "deutsch")).steps == ()

    def test_length_preserved(self):
        for n in range(9):
            for p in deutsch_paths(n):
                assert len(to_motzkin(p).steps) == n

    def test_image_is_motzkin(self):
        for n in range(9):
            for p in deutsch_paths(n):
                m = to_motzkin(p)
                assert m.end_level == 0
                assert all(s in (-1, 0, 1) for s in m.steps)

    def test_injective_and_onto(self):
        for n in range(9):
            images = {to_motzkin(p).steps for p in deutsch_paths(n)}
            assert len(images) == len(deutsch_paths(n))
            assert images == {m.steps for m in motzkin_paths(n)}

    def test_worked_example(self):
        p = validate_path("U U D2 U U U D1", "deutsch")
        m = to_motzkin(p)
        assert m.end_level == 0
        assert len(m.steps) == 7

    def test_accepts_token_string(self):
        assert to_motzkin("U D1").steps == to_motzkin(
            validate_path("U D1", "deutsch")
        ).steps

    def test_rejects_wrong_family(self):
        with pytest.raises(NotAPath):
            to_motzkin("U F D")


class TestBackwardMap:
    def test_roundtrip_both_ways(self):
        for n in range(9):
            for p in deutsch_paths(n):
                assert from_motzkin(to_motzkin(p)).steps == p.steps
            for m in motzkin_paths(n):
                assert to_motzkin(from_motzkin(m)).steps == m.steps

    def test_rejects_nonmotzkin_input(self):
        with pytest.raises(NotAPath):
            from_motzkin("U D2")


class TestStatistics:
    def test_up_steps_map_to_returns(self):
        for n in range(9):
            for m in motzkin_paths(n):
                ups = sum(1 for s in m.steps if s == 1)
                assert ups == returns_count(from_motzkin(m))

    def test_returns_count_examples(self):
        assert returns_count(validate_path("U D1 U U D2", "deutsch")) == 2
        assert returns_count(validate_path("U U U", "deutsch")) == 0
        assert returns_count(validate_path("", "deutsch")) == 0


class TestCertify:
    def test_battery(self):
        report = certify(8)
        assert report.ok
        assert report.data["counts"] == [1, 1, 2, 4, 9, 21, 51, 127, 323]

    def test_threaded_matches_serial(self):
        serial = certify(6)
        threaded = certify(6, threads=3)
        assert serial.ok and threaded.ok
        assert serial.data["counts"] == threaded.data["counts"]


@st.composite
def deutsch_steps(draw):
    steps, level = [], 0
    for _ in range(draw(st.integers(0, 24))):
        if level == 0:
            steps.append(1)
            level += 1
        else:
            k = draw(st.integers(0, level))
            if k == 0:
                steps.append(1)
                level += 1
            else:
                steps.append(-k)
                level -= k
    return tuple(steps)


class TestProperties:
    @given(deutsch_steps())
    @settings(max_examples=200, deadline=None)
    def test_roundtrip(self, steps):
        p = DeutschPath(steps)
        m = to_motzkin(p)
        assert len(m.steps) == len(steps)
        assert from_motzkin(m).steps == steps

    @given(deutsch_steps())
    @settings(max_examples=200, deadline=None)
    def test_flat_count_matches_forward_structure(self, steps):
        p = DeutschPath(steps)
        m = to_motzkin(p)
        ups = sum(1 for s in m.steps if s == 1)
        assert ups == returns_count(p)
