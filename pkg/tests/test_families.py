import os
import sys
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from families import (
    all_cycles_with_paths,
    all_spiders,
    bound_regime,
    build,
    cycle_graph,
    cycle_with_paths,
    delta3_pendant_vs_path_gap,
    is_member,
    leg_partitions,
    path_graph,
    second_max_unicyclic_value,
    spider_tree,
    tree_bound,
    tree_index_by_k,
    tree_regime,
    tree_T,
    unicyclic_bound,
    unicyclic_index_by_k,
    unicyclic_regime,
    unicyclic_U,
)
from graph_core import classify, degree, is_isomorphic, make_graph, max_degree
from indices import chi_alpha
from numerics import f_theorem3, theorem3_slack
from type.errors import FamilyDomainError
from type.family import FamilyKind, FamilySpec, Regime
from type.graph import StructureTag

ALPHAS = [-1.7036, -1.7, -1.0, -0.5, -0.1]


class TestBasicFamilies:
    def test_k2(self):
        assert path_graph(2) == make_graph(2, [(0, 1)])

    def test_triangle(self):
        assert cycle_graph(3).degrees() == (2, 2, 2)

    def test_path_max_degree(self):
        assert max_degree(path_graph(5)) == 2

    def test_short_cycle(self):
        with pytest.raises(FamilyDomainError):
            cycle_graph(2)


class TestTreeT:
    def test_star_when_delta_is_n_minus_1(self):
        g = tree_T(6, 5)
        assert degree(g, 0) == 5
        assert all(degree(g, v) == 1 for v in range(1, 6))

    def test_shape(self):
        g = tree_T(10, 6)
        assert g.n == 10
        assert max_degree(g) == 6
        assert classify(g).tag is StructureTag.TREE
        neighbours = [degree(g, w) for w in g.adjacency[0]]
        assert neighbours.count(1) == 2 * 6 + 1 - 10
        assert neighbours.count(2) == 10 - 6 - 1

    @pytest.mark.parametrize("n,delta", [(6, 2), (7, 3), (5, 5), (2, 1)])
    def test_domain(self, n, delta):
        with pytest.raises(FamilyDomainError):
            tree_T(n, delta)


class TestUnicyclicU:
    def test_u43(self):
        assert is_isomorphic(unicyclic_U(4, 3), make_graph(4, [(0, 1), (1, 2), (2, 0), (0, 3)]))

    def test_shape(self):
        g = unicyclic_U(9, 6)
        info = classify(g)
        assert info.tag is StructureTag.UNICYCLIC
        assert len(info.cycle) == 3
        assert max_degree(g) == 6

    @pytest.mark.parametrize("n,delta", [(6, 3), (5, 5), (3, 2)])
    def test_domain(self, n, delta):
        with pytest.raises(FamilyDomainError):
            unicyclic_U(n, delta)


class TestSpidersAndCycles:
    def test_spider_222(self):
        g = spider_tree([2, 2, 2])
        assert g.n == 7
        assert max_degree(g) == 3
        assert chi_alpha(g, -1) == pytest.approx(1.6)

    @pytest.mark.parametrize("alpha", [-1.0, -0.5])
    def test_spider_2222_matches_bound(self, alpha):
        assert chi_alpha(spider_tree([2, 2, 2, 2]), alpha) == pytest.approx(tree_bound(9, 4, alpha))

    @pytest.mark.parametrize("legs", [[1, 2, 2], [2, 2], [3, 0, 4]])
    def test_spider_rejects(self, legs):
        with pytest.raises(FamilyDomainError):
            spider_tree(legs)

    @pytest.mark.parametrize("alpha", [-1.0, -0.5, -0.1])
    def test_second_max_shapes(self, alpha):
        assert chi_alpha(cycle_with_paths(3, [2]), alpha) == pytest.approx(4 ** alpha + 3 * 5 ** alpha + 3 ** alpha)
        assert chi_alpha(cycle_with_paths(4, [2]), alpha) == pytest.approx(
            2 * 4 ** alpha + 3 * 5 ** alpha + 3 ** alpha
        )

    @pytest.mark.parametrize("cycle_len,legs", [(3, [1]), (3, []), (2, [2])])
    def test_cycle_with_paths_rejects(self, cycle_len, legs):
        with pytest.raises(FamilyDomainError):
            cycle_with_paths(cycle_len, legs)

    def test_cycle_with_paths_shape(self):
        g = cycle_with_paths(5, [2, 3])
        assert g.n == 10
        assert degree(g, 0) == 4
        assert classify(g).tag is StructureTag.UNICYCLIC

    def test_leg_partitions(self):
        assert list(leg_partitions(8, 4)) == [(2, 2, 2, 2)]
        assert list(leg_partitions(9, 3)) == [(2, 2, 5), (2, 3, 4), (3, 3, 3)]
        assert list(leg_partitions(3, 2)) == []

    def test_all_cycles_with_paths_8_3(self):
        assert len(all_cycles_with_paths(8, 3)) == 4


class TestRegimes:
    def test_tiling(self):
        for n in range(3, 20):
            tree_high = [d for d in range(2, n) if tree_regime(n, d) is Regime.HIGH]
            assert tree_high == list(range(max(2, (n + 1) // 2), n))
            uni_high = [d for d in range(2, n) if unicyclic_regime(n, d) is Regime.HIGH]
            assert uni_high == [d for d in range(2, n) if 2 * d >= n + 2]

    def test_boundaries(self):
        assert tree_regime(8, 4) is Regime.HIGH
        assert tree_regime(9, 4) is Regime.LOW
        assert unicyclic_regime(8, 5) is Regime.HIGH
        assert unicyclic_regime(9, 5) is Regime.LOW

    def test_bound_regime(self):
        ctx = bound_regime("unicyclic", 7, 5, -0.5)
        assert ctx.regime is Regime.HIGH
        with pytest.raises(ValueError):
            bound_regime("bicyclic", 7, 5, -0.5)

    def test_delta_out_of_range(self):
        with pytest.raises(FamilyDomainError):
            tree_bound(6, 6, -1)
        with pytest.raises(FamilyDomainError):
            unicyclic_bound(6, 1, -1)


class TestBounds:
    @pytest.mark.parametrize("alpha", [-1.0, -0.5, -1.7])
    def test_tree_t_6_4(self, alpha):
        expected = (6 ** alpha - 5 ** alpha + 3 ** alpha) + 4 * 5 ** alpha
        assert tree_bound(6, 4, alpha) == pytest.approx(expected)
        assert chi_alpha(tree_T(6, 4), alpha) == pytest.approx(expected)

    @pytest.mark.parametrize("n", [5, 8, 11])
    def test_tree_delta_two_is_path(self, n):
        assert tree_bound(n, 2, -0.5) == pytest.approx(chi_alpha(path_graph(n), -0.5))

    def test_tree_bound_9_4(self):
        assert tree_bound(9, 4, -1) == pytest.approx(2.0)

    @pytest.mark.parametrize("n", [5, 8, 11])
    def test_unicyclic_delta_two_is_cycle(self, n):
        assert unicyclic_bound(n, 2, -0.5) == pytest.approx(n * 4 ** -0.5)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_unicyclic_5_4(self, alpha):
        expected = 2 * 6 ** alpha + 2 * 5 ** alpha + 4 ** alpha
        assert unicyclic_bound(5, 4, alpha) == pytest.approx(expected)
        assert chi_alpha(unicyclic_U(5, 4), alpha) == pytest.approx(expected)

    @pytest.mark.parametrize("n", [5, 6, 9])
    def test_unicyclic_delta_three(self, n):
        alpha = -0.5
        assert unicyclic_bound(n, 3, alpha) == pytest.approx(3 ** alpha + 3 * 5 ** alpha + (n - 4) * 4 ** alpha)

    def test_second_max(self):
        assert second_max_unicyclic_value(5, -1) == pytest.approx(1.183333, abs=1e-6)
        assert second_max_unicyclic_value(5, -0.5) == pytest.approx(chi_alpha(cycle_with_paths(3, [2]), -0.5))
        with pytest.raises(FamilyDomainError):
            second_max_unicyclic_value(4, -1)

    @pytest.mark.parametrize("alpha", [-1.0, -0.75, -0.5, -0.25, -0.1])
    def test_second_max_below_cycle(self, alpha):
        for n in range(5, 15):
            assert second_max_unicyclic_value(n, alpha) < n * 4 ** alpha

    @pytest.mark.parametrize("alpha", [-1.0, -0.5, -0.1])
    def test_delta3_gap_negative(self, alpha):
        assert delta3_pendant_vs_path_gap(9, alpha) == pytest.approx(2 * 4 ** alpha - 5 ** alpha - 3 ** alpha)
        assert delta3_pendant_vs_path_gap(9, alpha) < 0


class TestFormulaConstructorAgreement:
    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_high_regimes(self, alpha):
        for n in range(3, 15):
            for delta in range(2, n):
                if tree_regime(n, delta) is Regime.HIGH:
                    assert chi_alpha(tree_T(n, delta), alpha) == pytest.approx(tree_bound(n, delta, alpha), rel=1e-12)
                if n >= 4 and unicyclic_regime(n, delta) is Regime.HIGH:
                    assert chi_alpha(unicyclic_U(n, delta), alpha) == pytest.approx(
                        unicyclic_bound(n, delta, alpha), rel=1e-12
                    )

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_spiders(self, alpha):
        for n in range(7, 13):
            for delta in range(3, n):
                if tree_regime(n, delta) is not Regime.LOW:
                    continue
                bound = tree_bound(n, delta, alpha)
                spiders = all_spiders(n, delta)
                assert spiders
                for g in spiders:
                    assert chi_alpha(g, alpha) == pytest.approx(bound, rel=1e-12)

    @pytest.mark.parametrize("alpha", ALPHAS)
    def test_cycles_with_paths(self, alpha):
        for n in range(5, 12):
            for delta in range(3, n):
                if unicyclic_regime(n, delta) is not Regime.LOW:
                    continue
                bound = unicyclic_bound(n, delta, alpha)
                graphs = all_cycles_with_paths(n, delta)
                assert graphs
                for g in graphs:
                    assert chi_alpha(g, alpha) == pytest.approx(bound, rel=1e-12)

    @pytest.mark.parametrize("alpha", [-1.0, -0.5])
    def test_index_by_k_peaks_at_bound(self, alpha):
        n = 11
        for delta in range(3, n):
            if tree_regime(n, delta) is Regime.HIGH:
                assert tree_index_by_k(n, delta, n - delta - 1, alpha) == pytest.approx(tree_bound(n, delta, alpha))
            else:
                assert tree_index_by_k(n, delta, delta, alpha) == pytest.approx(tree_bound(n, delta, alpha))
            if unicyclic_regime(n, delta) is Regime.HIGH:
                k = n - delta - 1
                assert unicyclic_index_by_k(n, delta, k, alpha) == pytest.approx(unicyclic_bound(n, delta, alpha))
            else:
                assert unicyclic_index_by_k(n, delta, delta - 2, alpha) == pytest.approx(
                    unicyclic_bound(n, delta, alpha)
                )

    @pytest.mark.parametrize("alpha", [-1.0, -0.5, -0.1])
    def test_high_regime_slack_identity(self, alpha):
        for n in range(4, 14):
            for delta in range(2, n):
                if unicyclic_regime(n, delta) is Regime.HIGH:
                    slack = theorem3_slack(n, delta, alpha)
                    assert slack < 0
                    assert unicyclic_bound(n, delta, alpha) == pytest.approx(
                        float(f_theorem3(delta, n, alpha)) + slack
                    )


class TestMembership:
    def test_tree_t(self):
        assert is_member(tree_T(7, 4), FamilySpec(FamilyKind.T_STAR, n=7, delta=4))

    def test_path_is_not_spider(self):
        assert not is_member(path_graph(7), FamilySpec(FamilyKind.SPIDER))

    def test_wrong_cycle_length(self):
        assert not is_member(cycle_with_paths(4, [2]), FamilySpec(FamilyKind.CYCLE_WITH_PATHS, cycle_len=3))
        assert is_member(cycle_with_paths(4, [2]), FamilySpec(FamilyKind.CYCLE_WITH_PATHS, cycle_len=4))

    def test_spider_legs(self):
        g = spider_tree([2, 3, 4])
        assert is_member(g, FamilySpec(FamilyKind.SPIDER, n=10, delta=3))
        assert is_member(g, FamilySpec(FamilyKind.SPIDER, legs=(4, 3, 2)))
        assert not is_member(g, FamilySpec(FamilyKind.SPIDER, delta=4))

    def test_tree_t_with_pendant_is_not_spider(self):
        assert not is_member(tree_T(7, 4), FamilySpec(FamilyKind.SPIDER))

    def test_u_star_delegates_to_isomorphism(self):
        assert is_member(unicyclic_U(6, 4), FamilySpec(FamilyKind.U_STAR))
        assert not is_member(cycle_with_paths(3, [2]), FamilySpec(FamilyKind.U_STAR, delta=4))

    def test_path_and_cycle(self):
        assert is_member(path_graph(5), FamilySpec(FamilyKind.PATH, n=5))
        assert is_member(cycle_graph(5), FamilySpec(FamilyKind.CYCLE))
        assert not is_member(cycle_graph(5), FamilySpec(FamilyKind.PATH))

    def test_build_and_describe(self):
        spec = FamilySpec(FamilyKind.CYCLE_WITH_PATHS, cycle_len=4, legs=(3, 2))
        assert build(spec) == cycle_with_paths(4, [2, 3])
        assert spec.describe() == "C_4+paths(legs=2,3)"
        assert FamilySpec(FamilyKind.T_STAR, n=6, delta=4).describe() == "T_{6,4}"
