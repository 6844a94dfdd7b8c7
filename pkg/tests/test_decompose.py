"""Decomposition procedures: binary, generalized, and vertex strategies."""

import pytest

from fibexpr.decompose import (
    FixedMap,
    GdSpec,
    InvalidM,
    InvalidVertexChoice,
    Leftmost,
    MiddleHigh,
    MiddleLow,
    Seeded,
    decompose,
    decompose_gd,
    uniform_positions,
)
from fibexpr.expr import (
    Product,
    Sum,
    Term,
    UNIT,
    ZERO,
    a,
    expand,
    format_expression,
    metric_plus,
    metric_terms,
)
from fibexpr.graph import enumerate_paths, equivalent_by_sampling, path_count


def contains_sentinel(e):
    if e is UNIT or e is ZERO:
        return True
    if isinstance(e, (Sum, Product)):
        return any(contains_sentinel(c) for c in e.children)
    return False


class TestStrategies:
    def test_middle_low_odd_and_even(self):
        assert MiddleLow().choose(1, 9) == 5
        assert MiddleLow().choose(1, 4) == 2
        assert MiddleHigh().choose(1, 4) == 3
        assert MiddleHigh().choose(1, 9) == 5

    def test_seeded_is_deterministic(self):
        s = Seeded(17)
        picks = [s.choose(1, 100) for _ in range(5)]
        assert len(set(picks)) == 1
        assert 1 < picks[0] < 100
        assert decompose(12, Seeded(17)) == decompose(12, Seeded(17))

    def test_fixed_map_falls_back_to_middle(self):
        s = FixedMap({(1, 7): 3})
        assert s.choose(1, 7) == 3
        assert s.choose(1, 3) == 2

    def test_bad_choice_rejected(self):
        with pytest.raises(InvalidVertexChoice):
            decompose(5, FixedMap({(1, 5): 5}))


class TestDecompose:
    def test_single_edge(self):
        assert decompose(2, Seeded(0)) == Term(a(1))

    def test_paper_n9_optimal(self):
        e = decompose(9, MiddleLow())
        assert metric_terms(e) == 31
        assert metric_plus(e) == 11
        assert format_expression(e) == (
            "((a1a2+b1)(a3a4+b3)+a1b2a4)((a5a6+b5)(a7a8+b7)+a5b6a8)"
            "+(a1(a2a3+b2)+b1a3)b4(a6(a7a8+b7)+b6a8)")

    def test_paper_n7_first_step_at_3(self):
        e = decompose(7, FixedMap({(1, 7): 3}))
        assert metric_terms(e) == 20
        assert metric_plus(e) == 7

    @pytest.mark.parametrize("strategy", [MiddleLow(), MiddleHigh(), Leftmost(),
                                          Seeded(1), Seeded(2), Seeded(3)])
    def test_expansion_is_path_set(self, strategy):
        for n in range(2, 15):
            assert expand(decompose(n, strategy)) == frozenset(enumerate_paths(n))

    def test_large_n_against_modular_oracle(self):
        for n in (100, 300):
            assert equivalent_by_sampling(decompose(n), n, trials=16, seed=n)

    def test_no_sentinels_survive(self):
        for n in range(2, 20):
            assert not contains_sentinel(decompose(n, Seeded(n)))

    def test_leftmost_grows_like_path_count(self):
        for n in range(4, 25):
            assert metric_terms(decompose(n, Leftmost())) >= path_count(n) / 2


class TestUniformPositions:
    def test_binary_middle(self):
        assert uniform_positions(1, 9, 2) == [5]

    def test_equal_thirds(self):
        assert uniform_positions(1, 13, 3) == [5, 9]

    def test_m_capped_at_interval_span(self):
        assert uniform_positions(1, 4, 7) == [2, 3]

    def test_strictly_increasing_inside_interval(self):
        for q in range(3, 40):
            for m in range(2, 10):
                pos = uniform_positions(1, q, m)
                assert all(1 < i < q for i in pos)
                assert all(y > x for x, y in zip(pos, pos[1:]))
                assert len(pos) == min(m, q - 1) - 1


class TestDecomposeGd:
    def test_m2_is_binary_middle_structurally(self):
        for n in range(2, 30):
            assert decompose_gd(n, GdSpec(2)) == decompose(n, MiddleLow())

    def test_degenerate_m_equals_n_minus_1(self):
        e = decompose_gd(9, GdSpec(8))
        assert metric_terms(e) == 201
        assert metric_plus(e) == 33
        assert expand(e) == frozenset(enumerate_paths(9))

    @pytest.mark.parametrize("m", [3, 4, 5])
    def test_expansion_is_path_set(self, m):
        for n in range(2, 15):
            assert expand(decompose_gd(n, GdSpec(m))) == frozenset(enumerate_paths(n))

    def test_n7_m3_counts_recorded(self):
        e = decompose_gd(7, GdSpec(3))
        assert expand(e) == frozenset(enumerate_paths(7))
        assert len(expand(e)) == 13
        assert metric_terms(e) > 0 and metric_plus(e) > 0

    def test_first_positions_override(self):
        e = decompose_gd(9, GdSpec(3, first_positions=(3, 6)))
        assert expand(e) == frozenset(enumerate_paths(9))
        with pytest.raises(InvalidVertexChoice):
            decompose_gd(9, GdSpec(3, first_positions=(3, 9)))

    def test_invalid_m(self):
        with pytest.raises(InvalidM):
            decompose_gd(9, GdSpec(1))

    def test_no_sentinels_survive(self):
        for m in (3, 4):
            for n in range(2, 16):
                assert not contains_sentinel(decompose_gd(n, GdSpec(m)))

    def test_large_n_against_modular_oracle(self):
        assert equivalent_by_sampling(decompose_gd(200, GdSpec(3)), 200,
                                      trials=16, seed=0)
