"""Closed-form values, identities between them, and domain errors."""

import pytest

from satnum import DomainError, UnsupportedParameterError
from satnum.formulas import (
    CoronaStats,
    corona_bounds,
    s_chain_cycles,
    s_chain_paths,
    s_corona_cycle,
    s_corona_empty,
    s_corona_path,
    s_cycle,
    s_cycle_minus_edge,
    s_k1_corona_bounds,
    s_k1_corona_cycle,
    s_k1_corona_path,
    s_kbar_corona,
    s_link_cycles,
    s_link_paths,
    s_path,
    s_path_minus_edge_exact,
    s_path_minus_edge_paper,
    s_sq,
    s_tri,
    s_wheel,
)


class TestPathCycleWheel:
    @pytest.mark.parametrize("n,want", [(1, 0), (2, 1), (3, 1), (4, 1), (5, 2), (7, 2), (9, 3)])
    def test_path(self, n, want):
        assert s_path(n) == want

    @pytest.mark.parametrize("n,want", [(3, 1), (4, 2), (5, 2), (6, 2), (7, 3), (8, 3)])
    def test_cycle(self, n, want):
        assert s_cycle(n) == want

    @pytest.mark.parametrize("n,want", [(4, 2), (5, 2), (10, 4)])
    def test_wheel(self, n, want):
        assert s_wheel(n) == want

    def test_path_monotone_with_unit_steps(self):
        values = [s_path(n) for n in range(1, 101)]
        for a, b in zip(values, values[1:]):
            assert a <= b <= a + 1

    def test_cycle_at_least_path(self):
        for n in range(3, 101):
            assert s_cycle(n) >= s_path(n)

    def test_domain_errors(self):
        for fn, bad in [(s_path, 0), (s_cycle, 2), (s_wheel, 3)]:
            with pytest.raises(DomainError):
                fn(bad)


class TestEdgeDeletion:
    @pytest.mark.parametrize("n,want", [(5, 2), (6, 2), (7, 2)])
    def test_cycle_minus_edge(self, n, want):
        assert s_cycle_minus_edge(n) == want

    @pytest.mark.parametrize("n,i,want", [(8, 4, 2), (7, 2, 3), (9, 3, 3)])
    def test_paper_rule(self, n, i, want):
        assert s_path_minus_edge_paper(n, i) == want

    @pytest.mark.parametrize("n,i,want", [(8, 4, 2), (14, 4, 4), (3, 1, 1)])
    def test_exact_rule(self, n, i, want):
        assert s_path_minus_edge_exact(n, i) == want

    def test_known_divergence(self):
        assert s_path_minus_edge_paper(14, 4) == 5
        assert s_path_minus_edge_exact(14, 4) == 4

    def test_index_out_of_range(self):
        with pytest.raises(DomainError):
            s_path_minus_edge_paper(8, 8)
        with pytest.raises(DomainError):
            s_path_minus_edge_exact(8, 0)


class TestCorona:
    def test_stats_derived_fields(self):
        st = CoronaStats(n=5, alpha_prime=2)
        assert st.l == 1 and not st.has_perfect
        st = CoronaStats(n=4, alpha_prime=2)
        assert st.l == 0 and st.has_perfect
        with pytest.raises(DomainError):
            CoronaStats(n=3, alpha_prime=2)

    def test_corona_empty(self):
        assert s_corona_empty(CoronaStats(5, 2), 2) == 3  # cycle of order 5
        assert s_corona_empty(CoronaStats(4, 2), 3) == 2  # perfect matching case
        assert s_corona_empty(CoronaStats(3, 0), 1) == 3  # edgeless core

    def test_corona_empty_constant_in_m(self):
        st = CoronaStats(6, 2)
        assert len({s_corona_empty(st, m) for m in range(1, 6)}) == 1

    def test_corona_path(self):
        assert s_corona_path(CoronaStats(4, 2), 4) == 6
        assert s_corona_path(CoronaStats(3, 1), 3) == 3
        assert s_corona_path(CoronaStats(1, 0), 4) == 2

    def test_corona_cycle(self):
        assert s_corona_cycle(CoronaStats(4, 2), 3) == 6
        assert s_corona_cycle(CoronaStats(3, 1), 4) == 6
        assert s_corona_cycle(CoronaStats(1, 0), 6) == 3

    def test_k1_sandwich(self):
        assert s_k1_corona_bounds(2) == (2, 3)
        assert s_k1_corona_bounds(0) == (0, 1)

    def test_k1_examples(self):
        assert s_k1_corona_path(4) == 2
        assert s_k1_corona_path(6) == 2
        assert s_k1_corona_cycle(6) == 3
        assert s_k1_corona_cycle(7) == 3

    def test_kbar_corona(self):
        assert s_kbar_corona(3, 3) == 9
        assert s_kbar_corona(1, 5) == 5
        assert s_kbar_corona(2, 2) == 4

    def test_corona_bounds(self):
        assert corona_bounds(3, 2, 1, 1) == (6, 8)
        assert corona_bounds(1, 1, 0, 1) == (1, 2)
        assert corona_bounds(4, 0, 2, 0) == (0, 2)
        with pytest.raises(DomainError):
            corona_bounds(4, 1, 1, 3)  # 2*1 + 3 != 4


class TestLinksAndChains:
    @pytest.mark.parametrize("m,n,want", [(3, 4, 4), (4, 4, 5), (5, 2, 3)])
    def test_link_paths(self, m, n, want):
        assert s_link_paths(m, n) == want

    def test_link_paths_identity(self):
        for m in range(1, 31):
            for n in range(1, 31):
                if m * n <= 120:
                    assert s_link_paths(m, n) == s_path(m * n), (m, n)

    @pytest.mark.parametrize("m,n,want", [(3, 3, 2), (4, 5, 5), (5, 4, 6)])
    def test_chain_paths(self, m, n, want):
        assert s_chain_paths(m, n) == want

    def test_chain_paths_identity(self):
        assert s_chain_paths(1, 1) == 0
        for m in range(2, 31):
            for n in range(1, 31):
                assert s_chain_paths(m, n) == s_path(n * (m - 1) + 1), (m, n)

    def test_chain_paths_degenerate(self):
        with pytest.raises(DomainError):
            s_chain_paths(1, 2)

    @pytest.mark.parametrize(
        "m,n,d,want",
        [(6, 5, 1, 10), (7, 5, 3, 13), (7, 5, 2, 11), (8, 5, 1, 13)],
    )
    def test_link_cycles_figure_values(self, m, n, d, want):
        assert s_link_cycles(m, n, d) == want

    @pytest.mark.parametrize(
        "m,n,d,want",
        [(3, 4, 1, 3), (4, 3, 2, 4), (6, 2, 3, 4)],
    )
    def test_chain_cycles(self, m, n, d, want):
        assert s_chain_cycles(m, n, d) == want

    def test_unsupported_rows_error(self):
        # order 12 = 0 mod 3 allows d <= 5 only; d = 6 is a distance but unlisted
        with pytest.raises(UnsupportedParameterError):
            s_link_cycles(12, 2, 6)
        with pytest.raises(UnsupportedParameterError):
            s_chain_cycles(13, 2, 6)

    def test_non_distance_d_rejected(self):
        with pytest.raises(DomainError):
            s_link_cycles(6, 2, 4)  # 4 > 6//2
        with pytest.raises(DomainError):
            s_chain_cycles(5, 2, 0)

    def test_tri_sq(self):
        assert s_tri(1) == 1
        assert s_tri(5) == 3
        assert s_sq(4) == 5
        assert [s_tri(n) for n in range(1, 7)] == [1, 2, 2, 3, 3, 4]

    def test_cactus_rows_match_named_formulas(self):
        for n in range(1, 31):
            assert s_tri(n) == s_chain_cycles(3, n, 1)
            assert s_sq(n) == s_chain_cycles(4, n, 2)
