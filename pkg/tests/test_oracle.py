import random

import pytest

from conftest import complete, complete_bipartite, cycle, empty, path, star
from domseq.classgen import random_graph
from domseq.graph import Graph, complement, disjoint_union
from domseq.oracle import (
    IsolatedVertexError,
    OracleLimitError,
    oracle_double_domination,
    oracle_gddn,
    oracle_grundy_domination,
    oracle_mdns,
)
from domseq.sequence import footprint


class TestMdns:
    def test_path5(self):
        assert oracle_mdns(path(5)).value == 5

    def test_cycle5(self):
        # a fifth step would need a witness of degree at most one
        assert oracle_mdns(cycle(5)).value == 4

    def test_empty3(self):
        res = oracle_mdns(empty(3))
        assert res.value == 3 and set(res.witness) == {0, 1, 2}

    def test_limit(self):
        with pytest.raises(OracleLimitError):
            oracle_mdns(empty(5), limit=4)

    def test_witness_verifies(self):
        rng = random.Random(1)
        for _ in range(25):
            g = random_graph(rng, rng.randint(1, 9), 0.4)
            res = oracle_mdns(g)
            cert = footprint(g, res.witness)
            assert cert.is_dns and len(res.witness) == res.value

    def test_isolated_identity(self):
        # with at least one edge, the value splits into the isolated count
        # plus the double-domination value of the rest
        rng = random.Random(2)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 9), 0.3)
            isolated = [v for v in range(g.n) if not g.adj[v]]
            if g.edge_count == 0 or not isolated:
                continue
            res = oracle_mdns(g)
            assert set(isolated) <= set(res.witness)
            from domseq.graph import induced_subgraph

            rest, _ = induced_subgraph(g, [v for v in range(g.n) if g.adj[v]])
            assert res.value == oracle_gddn(rest).value + len(isolated)


class TestGddn:
    def test_complete4(self):
        assert oracle_gddn(complete(4)).value == 2

    def test_complete_bipartite32(self):
        assert oracle_gddn(complete_bipartite(3, 2)).value == 4

    def test_house(self):
        house = complement(path(5))
        res = oracle_gddn(house)
        assert res.value == 4 and footprint(house, res.witness).is_dds

    def test_rejects_isolated(self):
        with pytest.raises(IsolatedVertexError):
            oracle_gddn(empty(2))

    def test_equals_mdns_on_isolated_free(self):
        rng = random.Random(3)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 9), 0.5)
            if any(not g.adj[v] for v in range(g.n)):
                continue
            res = oracle_gddn(g)
            assert res.value == oracle_mdns(g).value
            assert footprint(g, res.witness).is_dds


class TestGrundyDomination:
    def test_complete(self):
        for n in range(1, 6):
            assert oracle_grundy_domination(complete(n)).value == 1

    def test_path4(self):
        assert oracle_grundy_domination(path(4)).value == 3

    def test_empty3(self):
        assert oracle_grundy_domination(empty(3)).value == 3

    def test_witness_is_legal_and_dominating(self):
        rng = random.Random(4)
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 9), 0.5)
            res = oracle_grundy_domination(g)
            dominated = 0
            for v in res.witness:
                assert g.closed_bits[v] & ~dominated
                dominated |= g.closed_bits[v]
            assert dominated == (1 << g.n) - 1


class TestDoubleDomination:
    def test_complete4(self):
        assert oracle_double_domination(complete(4)).value == 2

    def test_cycle5(self):
        assert oracle_double_domination(cycle(5)).value == 4

    def test_star4(self):
        # every leaf needs itself plus the center
        assert oracle_double_domination(star(4)).value == 5

    def test_rejects_isolated(self):
        with pytest.raises(IsolatedVertexError):
            oracle_double_domination(disjoint_union(complete(2), empty(1)))

    def test_witness_double_dominates_and_is_dds(self):
        rng = random.Random(5)
        for _ in range(20):
            g = random_graph(rng, rng.randint(2, 8), 0.6)
            if any(not g.adj[v] for v in range(g.n)):
                continue
            res = oracle_double_domination(g)
            cert = footprint(g, res.witness)
            assert min(cert.counts) == 2
            assert cert.is_dds


def naive_longest_dns(g: Graph) -> int:
    """Order-by-order enumeration with no memoization; independent of the
    subset DP."""
    counts = [0] * g.n
    closed = [(v,) + g.adj[v] for v in range(g.n)]

    def rec(played: set) -> int:
        best = len(played)
        for v in range(g.n):
            if v in played:
                continue
            if not any(counts[w] < 2 for w in closed[v]):
                continue
            played.add(v)
            for w in closed[v]:
                counts[w] += 1
            best = max(best, rec(played))
            for w in closed[v]:
                counts[w] -= 1
            played.remove(v)
        return best

    return rec(set())


def naive_longest_dds(g: Graph) -> int:
    """Longest sequence whose prefix steps are legal and whose final set
    double-dominates; order-by-order, no memoization."""
    counts = [0] * g.n
    closed = [(v,) + g.adj[v] for v in range(g.n)]

    def rec(played: set) -> int:
        best = len(played) if all(min(c, 2) >= 2 for c in counts) else -1
        for v in range(g.n):
            if v in played:
                continue
            if not any(counts[w] < 2 for w in closed[v]):
                continue
            played.add(v)
            for w in closed[v]:
                counts[w] += 1
            best = max(best, rec(played))
            for w in closed[v]:
                counts[w] -= 1
            played.remove(v)
        return best

    return rec(set())


def test_dp_matches_naive_enumeration_small():
    rng = random.Random(6)
    for _ in range(60):
        g = random_graph(rng, rng.randint(1, 6), rng.choice([0.2, 0.5, 0.8]))
        assert oracle_mdns(g).value == naive_longest_dns(g)


def test_dds_dp_matches_naive_enumeration_small():
    rng = random.Random(7)
    checked = 0
    while checked < 30:
        g = random_graph(rng, rng.randint(2, 6), rng.choice([0.4, 0.7]))
        if any(not g.adj[v] for v in range(g.n)):
            continue
        assert oracle_gddn(g).value == naive_longest_dds(g)
        checked += 1
