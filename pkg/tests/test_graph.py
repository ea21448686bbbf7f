"""Graph construction, matching predicates, structural products, edge-list IO."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from satnum import (
    GraphError,
    Matching,
    ParseError,
    build_family,
    chain,
    corona,
    delete_edge,
    disjoint_union,
    erdos_renyi,
    from_edgelist_text,
    is_independent,
    is_matching,
    is_maximal_matching,
    is_perfect_matching,
    link,
    matching_defect,
    new_graph,
    to_edgelist_text,
    uncovered,
)


def P(n):
    return new_graph(n, [(i, i + 1) for i in range(n - 1)])


def C(n):
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


class TestConstruction:
    def test_triangle(self):
        g = new_graph(3, [(0, 1), (1, 2), (2, 0)])
        assert g.n == 3 and g.edge_count == 3

    def test_single_vertex(self):
        g = new_graph(1, [])
        assert g.n == 1 and g.edge_count == 0

    def test_orientation_collapse(self):
        g = new_graph(2, [(0, 1), (1, 0)])
        assert g.edge_count == 1

    def test_out_of_range_endpoint(self):
        with pytest.raises(GraphError):
            new_graph(3, [(0, 3)])

    def test_self_loop(self):
        with pytest.raises(GraphError):
            new_graph(3, [(1, 1)])

    def test_structural_cap(self):
        with pytest.raises(GraphError):
            new_graph(65, [])
        assert new_graph(65, [], max_n=None).n == 65

    def test_equality_and_hash(self):
        a = new_graph(3, [(0, 1), (1, 2)])
        b = new_graph(3, [(1, 2), (1, 0)])
        assert a == b and hash(a) == hash(b)

    def test_adjacency_symmetric(self):
        g = new_graph(4, [(0, 2), (2, 3)])
        assert g.has_edge(2, 0) and g.has_edge(3, 2)
        assert g.neighbors[2] == (0, 3)


class TestMatchingPredicates:
    def test_disjoint_edges(self):
        assert is_matching(P(4), [(0, 1), (2, 3)])

    def test_shared_vertex(self):
        assert not is_matching(P(4), [(0, 1), (1, 2)])
        assert "share vertex 1" in matching_defect(P(4), [(0, 1), (1, 2)])

    def test_empty_set_is_matching(self):
        assert is_matching(C(5), [])

    def test_foreign_edge_diagnosed(self):
        assert matching_defect(P(4), [(0, 2)]) == "edge (0,2) is not an edge of the graph"

    def test_maximal_center_edge(self):
        assert is_maximal_matching(P(4), [(1, 2)])

    def test_not_maximal_leaf_edge(self):
        assert not is_maximal_matching(P(4), [(0, 1)])

    def test_maximal_on_cycle(self):
        assert is_maximal_matching(C(6), [(0, 1), (3, 4)])

    def test_perfect(self):
        assert is_perfect_matching(P(4), [(0, 1), (2, 3)])
        assert is_perfect_matching(C(6), [(0, 1), (2, 3), (4, 5)])

    def test_odd_order_never_perfect(self):
        g = P(3)
        for m in ([], [(0, 1)], [(1, 2)]):
            assert not is_perfect_matching(g, m)

    def test_uncovered(self):
        assert uncovered(P(4), [(1, 2)]) == {0, 3}
        assert uncovered(C(6), [(0, 1), (2, 3), (4, 5)]) == frozenset()
        assert uncovered(C(5), [(0, 1), (2, 3)]) == {4}

    def test_uncovered_rejects_non_matching(self):
        with pytest.raises(GraphError):
            uncovered(P(4), [(0, 1), (1, 2)])

    def test_is_independent(self):
        assert is_independent(P(4), [0, 2])
        assert not is_independent(P(4), [0, 1])
        assert is_independent(new_graph(5, []), range(5))

    def test_matching_type_validates(self):
        m = Matching(P(4), frozenset({(1, 2)}))
        assert m.size == 1 and m.is_maximal() and not m.is_perfect()
        with pytest.raises(GraphError):
            Matching(P(4), frozenset({(0, 1), (1, 2)}))


class TestProducts:
    def test_union_counts(self):
        g = disjoint_union(P(3), P(2))
        assert (g.n, g.edge_count) == (5, 3)
        assert disjoint_union(new_graph(1, []), new_graph(1, [])).edge_count == 0
        g = disjoint_union(C(3), C(3))
        assert (g.n, g.edge_count) == (6, 6)

    def test_union_offsets(self):
        g = disjoint_union(P(2), P(2))
        assert g.edges == frozenset({(0, 1), (2, 3)})

    def test_union_component_count_additive(self):
        def components(g):
            seen = set()
            count = 0
            for start in range(g.n):
                if start in seen:
                    continue
                count += 1
                stack = [start]
                while stack:
                    v = stack.pop()
                    if v in seen:
                        continue
                    seen.add(v)
                    stack.extend(g.neighbors[v])
            return count

        cases = [
            (P(4), C(3)),
            (new_graph(3, []), C(5)),
            (disjoint_union(P(2), P(2)), P(3)),
        ]
        for g1, g2 in cases:
            assert components(disjoint_union(g1, g2)) == components(g1) + components(g2)

    def test_delete_edge(self):
        g = delete_edge(C(5), (0, 1))
        assert g.edge_count == 4
        degs = sorted(g.degree(v) for v in range(5))
        assert degs == [1, 1, 2, 2, 2]  # a path, up to labels

    def test_delete_edge_missing(self):
        with pytest.raises(GraphError):
            delete_edge(P(4), (0, 2))

    def test_delete_then_restore(self):
        g = C(7)
        again = new_graph(7, list(delete_edge(g, (2, 3)).edge_list) + [(2, 3)])
        assert again == g

    def test_corona_pendant_path(self):
        g = corona(P(2), new_graph(1, []))
        assert (g.n, g.edge_count) == (4, 3)
        assert sorted(g.degree(v) for v in range(4)) == [1, 1, 2, 2]

    def test_corona_counts(self):
        g = corona(C(3), new_graph(2, []))
        assert (g.n, g.edge_count) == (9, 9)

    def test_corona_wheel(self):
        assert corona(new_graph(1, []), C(4)) == build_family("wheel(5)")

    def test_corona_count_formulas(self):
        import random

        for seed in range(100):
            rng = random.Random(seed)
            g1 = erdos_renyi(rng.randint(1, 5), 0.5, seed * 2 + 1)
            g2 = erdos_renyi(rng.randint(1, 5), 0.5, seed * 2 + 2)
            g = corona(g1, g2)
            assert g.n == g1.n * (1 + g2.n)
            assert g.edge_count == g1.edge_count + g1.n * (g2.edge_count + g2.n)

    def test_link_of_paths_is_path(self):
        g = link([(P(2), 0, 1)] * 3)
        assert g == P(6)

    def test_link_single_part(self):
        assert link([(C(4), 0, 2)]) == C(4)

    def test_link_counts(self):
        g = link([(C(3), 0, 1), (C(3), 0, 1)])
        assert (g.n, g.edge_count) == (6, 7)

    def test_link_bad_anchor(self):
        with pytest.raises(GraphError):
            link([(C(3), 0, 3)])

    def test_chain_of_paths(self):
        g = chain([(P(3), 0, 2)] * 3)
        assert g == P(7)

    def test_chain_triangles(self):
        g = chain([(C(3), 0, 1)] * 4)
        assert (g.n, g.edge_count) == (9, 12)

    def test_chain_single_part(self):
        assert chain([(C(5), 0, 2)]) == C(5)

    def test_chain_rejects_interior_degeneracy(self):
        with pytest.raises(GraphError):
            chain([(P(3), 0, 2), (P(3), 1, 1), (P(3), 0, 2)])

    def test_chain_allows_unused_anchor_degeneracy(self):
        # first block's entry and last block's exit are unused
        g = chain([(P(3), 0, 0), (P(3), 0, 0)])
        assert g.n == 5

    def test_link_chain_count_formulas(self, sweep_graphs):
        from satnum import parse_family

        for expr, g in sweep_graphs:
            spec = parse_family(expr)
            if spec.name == "linkcyc":
                m, k, d = spec.args
                assert (g.n, g.edge_count) == (m * k, m * k + (k - 1)), expr
            elif spec.name == "chaincyc":
                m, k, d = spec.args
                assert (g.n, g.edge_count) == (k * (m - 1) + 1, m * k), expr
            elif spec.name == "linkpath":
                m, k = spec.args
                assert (g.n, g.edge_count) == (m * k, m * k - 1), expr
            elif spec.name == "chainpath":
                m, k = spec.args
                assert (g.n, g.edge_count) == (k * (m - 1) + 1, k * (m - 1)), expr

    def test_mixed_attach_distances(self):
        # per-part distances are available through the library API even though
        # the expression grammar only offers a uniform d
        parts = [(C(7), 0, 1), (C(7), 0, 3), (C(7), 0, 2)]
        g = link(parts)
        assert (g.n, g.edge_count) == (21, 23)
        h = chain([(C(6), 0, 2), (C(6), 0, 3), (C(6), 0, 1)])
        assert (h.n, h.edge_count) == (16, 18)


class TestEdgelistFormat:
    def test_round_trip(self):
        g = build_family("corona(cycle(4),path(2))")
        assert from_edgelist_text(to_edgelist_text(g)) == g

    def test_text_shape(self):
        text = to_edgelist_text(P(3))
        assert text == "3 2\n0 1\n1 2\n"

    def test_comments_and_whitespace(self):
        text = "# a comment\n3 2  \n0 1\n# another\n 1 2 \n"
        assert from_edgelist_text(text) == P(3)

    def test_bad_header(self):
        with pytest.raises(ParseError):
            from_edgelist_text("3\n0 1\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            from_edgelist_text("3 2\n0 1\n")

    def test_bad_edge_line(self):
        with pytest.raises(ParseError):
            from_edgelist_text("3 1\n0 x\n")


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    picks = draw(st.lists(st.sampled_from(pairs), max_size=14) if pairs else st.just([]))
    return new_graph(n, picks)


@given(graphs())
@settings(max_examples=60, deadline=None)
def test_uncovered_by_greedy_maximal_is_independent(g):
    # any maximal matching leaves an independent set uncovered
    taken = []
    used = set()
    for u, v in g.edge_list:
        if u not in used and v not in used:
            taken.append((u, v))
            used.update((u, v))
    assert is_maximal_matching(g, taken)
    assert is_independent(g, uncovered(g, taken))
