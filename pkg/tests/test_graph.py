import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import complete, cycle, empty, path, star
from domseq.graph import (
    Graph,
    GraphError,
    classify_vertex,
    complement,
    components,
    degree_profile,
    disjoint_union,
    find_twins,
    format_edge_list,
    induced_subgraph,
    is_tree,
    join,
    parse_edge_list,
)


@st.composite
def graphs(draw, max_n=10):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    edges = [p for p in pairs if draw(st.booleans())]
    return Graph(n, edges)


class TestParse:
    def test_path_on_three(self):
        g = parse_edge_list("3\n0 1\n1 2")
        assert g.n == 3 and g.edges() == [(0, 1), (1, 2)]

    def test_isolated_pair(self):
        g = parse_edge_list("2\n")
        assert g.n == 2 and g.edge_count == 0

    def test_duplicate_edges_collapse(self):
        g = parse_edge_list("3\n0 1\n0 1")
        assert g.edges() == [(0, 1)]
        assert g.degree(2) == 0

    def test_comments_and_blank_lines(self):
        g = parse_edge_list("# header\n3\n\n0 1  # inline\n")
        assert g.edges() == [(0, 1)]

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("3\n0 1 2", "line 2"),
            ("3\n0 5", "line 2"),
            ("3\n0 1\n1 1", "line 3"),
            ("x", "line 1"),
            ("", "missing"),
        ],
    )
    def test_errors_name_lines(self, text, fragment):
        with pytest.raises(GraphError, match=fragment):
            parse_edge_list(text)

    def test_round_trip(self):
        g = cycle(5)
        assert parse_edge_list(format_edge_list(g)) == g


class TestComplement:
    def test_complete_to_empty(self):
        assert complement(complete(3)) == empty(3)

    def test_path5_complement_is_house(self):
        got = complement(path(5))
        assert set(got.edges()) == {(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)}

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_involution(self, g):
        assert complement(complement(g)) == g

    def test_involution_large(self, rng):
        n = 64
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Graph(n, edges)
        assert complement(complement(g)) == g


class TestInducedSubgraph:
    def test_middle_of_path4(self):
        sub, mapping = induced_subgraph(path(4), [1, 2])
        assert sub == complete(2) and mapping == {1: 0, 2: 1}

    def test_identity(self):
        sub, mapping = induced_subgraph(cycle(5), range(5))
        assert sub == cycle(5)

    def test_cycle5_minus_vertex_is_path(self):
        for v in range(5):
            sub, _ = induced_subgraph(cycle(5), [x for x in range(5) if x != v])
            assert sorted(sub.degree(w) for w in range(4)) == [1, 1, 2, 2]
            assert is_tree(sub)

    def test_out_of_range(self):
        with pytest.raises(GraphError):
            induced_subgraph(path(3), [0, 7])


class TestDegreeProfile:
    def test_complete(self):
        p = degree_profile(complete(4))
        assert (p.min_degree, p.max_degree, p.isolated, p.has_isolated) == (3, 3, frozenset(), False)

    def test_isolated_pair(self):
        p = degree_profile(empty(2))
        assert p.has_isolated and p.isolated == {0, 1} and p.min_degree == 0

    def test_star(self):
        p = degree_profile(star(3))
        assert (p.min_degree, p.max_degree, p.has_isolated) == (1, 3, False)


class TestComponents:
    def test_two_edges(self):
        g = Graph(4, [(0, 1), (2, 3)])
        assert components(g) == [frozenset({0, 1}), frozenset({2, 3})]

    def test_connected(self):
        assert len(components(cycle(6))) == 1

    def test_empty_graph(self):
        assert components(empty(3)) == [frozenset({0}), frozenset({1}), frozenset({2})]


class TestTwins:
    def test_triangle_all_true(self):
        assert find_twins(complete(3)) == [(0, 1, "true"), (0, 2, "true"), (1, 2, "true")]

    def test_isolated_pair_false(self):
        assert find_twins(empty(2)) == [(0, 1, "false")]

    def test_path4_none(self):
        assert find_twins(path(4)) == []

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_matches_direct_comparison(self, g):
        reported = {(u, v): kind for u, v, kind in find_twins(g)}
        for u in range(g.n):
            for v in range(u + 1, g.n):
                closed_eq = set(g.adj[u]) | {u} == set(g.adj[v]) | {v}
                open_eq = set(g.adj[u]) == set(g.adj[v])
                expect = "true" if closed_eq else "false" if open_eq else None
                assert reported.get((u, v)) == expect
                assert not (closed_eq and open_eq)


class TestClassifyVertex:
    def test_star_center_universal(self):
        flags = classify_vertex(star(3), 0)
        assert flags.universal and not flags.pendant and not flags.isolated

    def test_star_leaf_pendant(self):
        flags = classify_vertex(star(3), 2)
        assert flags.pendant and flags.pendant_neighbor == 0

    def test_isolated(self):
        assert classify_vertex(empty(2), 0).isolated

    def test_single_vertex_is_both(self):
        flags = classify_vertex(Graph(1), 0)
        assert flags.isolated and flags.universal

    @given(graphs())
    @settings(max_examples=40, deadline=None)
    def test_isolated_excludes_others(self, g):
        for v in range(g.n):
            flags = classify_vertex(g, v)
            if flags.isolated and g.n > 1:
                assert not flags.pendant and not flags.universal


class TestIsTree:
    def test_examples(self):
        assert is_tree(path(5))
        assert not is_tree(cycle(5))
        assert is_tree(Graph(1))
        assert not is_tree(Graph(2))


def test_union_and_join_shapes():
    u = disjoint_union(complete(2), complete(2))
    assert u.edges() == [(0, 1), (2, 3)]
    j = join(empty(2), empty(2))
    assert j == Graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
