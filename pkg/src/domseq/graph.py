"""Immutable simple undirected graphs and the structural primitives
(neighborhoods, degrees, twins, connectivity) every solver consumes.

Vertices are dense integers 0..n-1.  Adjacency is kept both as sorted
tuples, for iteration, and as integer bitmasks, so neighborhood unions
and intersections are single word operations at desk scale.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Mapping


class GraphError(ValueError):
    """Malformed graph input or an out-of-range vertex."""


class Graph:
    """Simple undirected graph, immutable after construction.

    Duplicate edges collapse silently; self-loops are rejected.
    """

    __slots__ = ("n", "adj", "open_bits", "closed_bits")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        neigh: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            neigh[u].add(v)
            neigh[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(tuple(sorted(s)) for s in neigh))
        open_bits = tuple(sum(1 << w for w in s) for s in neigh)
        object.__setattr__(self, "open_bits", open_bits)
        object.__setattr__(
            self, "closed_bits", tuple(b | (1 << v) for v, b in enumerate(open_bits))
        )

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.open_bits[u] & (1 << v))

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range for n={self.n}")

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.open_bits == other.open_bits
        )

    def __hash__(self) -> int:
        return hash((self.n, self.open_bits))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


@dataclass(frozen=True)
class DegreeProfile:
    min_degree: int
    max_degree: int
    isolated: frozenset[int]
    has_isolated: bool


@dataclass(frozen=True)
class VertexFlags:
    isolated: bool
    pendant: bool
    universal: bool
    pendant_neighbor: int | None


def parse_edge_list(text: str) -> Graph:
    """Parse the canonical edge-list format.

    First non-comment line is the vertex count; each following line is an
    edge "u v".  A '#' starts a comment anywhere on a line.  Errors name
    the offending line number.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            if len(line.split()) != 1:
                raise GraphError(f"line {lineno}: expected a single vertex count")
            try:
                n = int(line)
            except ValueError:
                raise GraphError(f"line {lineno}: vertex count is not an integer") from None
            if n < 0:
                raise GraphError(f"line {lineno}: vertex count must be non-negative")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: edge endpoints are not integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"line {lineno}: vertex out of range [0, {n})")
        if u == v:
            raise GraphError(f"line {lineno}: self-loop at vertex {u}")
        edges.append((u, v))
    if n is None:
        raise GraphError("missing vertex count line")
    return Graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def complement(g: Graph) -> Graph:
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v)
    ]
    return Graph(g.n, edges)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on `keep` plus the old->new relabeling map.

    The map lets callers lift sequences computed in the subgraph back to
    the ambient graph's vertex ids.
    """
    kept = sorted(set(keep))
    for v in kept:
        if not (0 <= v < g.n):
            raise GraphError(f"vertex {v} out of range for n={g.n}")
    old_to_new = {v: i for i, v in enumerate(kept)}
    edges = [
        (old_to_new[u], old_to_new[v])
        for u in kept
        for v in g.adj[u]
        if u < v and v in old_to_new
    ]
    return Graph(len(kept), edges), old_to_new


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n == 0:
        raise GraphError("degree profile of the empty graph is undefined")
    degrees = [g.degree(v) for v in range(g.n)]
    isolated = frozenset(v for v, d in enumerate(degrees) if d == 0)
    return DegreeProfile(min(degrees), max(degrees), isolated, bool(isolated))


def has_isolated_vertex(g: Graph) -> bool:
    return any(not g.adj[v] for v in range(g.n))


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen = [False] * g.n
    out: list[frozenset[int]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        queue = deque([start])
        seen[start] = True
        comp = [start]
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def find_twins(g: Graph) -> list[tuple[int, int, str]]:
    """All unordered twin pairs, tagged "true" (equal closed neighborhoods)
    or "false" (equal open neighborhoods).

    A pair can satisfy at most one kind: true twins are necessarily
    adjacent, false twins necessarily non-adjacent.
    """
    out = []
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if g.closed_bits[u] == g.closed_bits[v]:
                out.append((u, v, "true"))
            elif g.open_bits[u] == g.open_bits[v]:
                out.append((u, v, "false"))
    return out


def classify_vertex(g: Graph, v: int) -> VertexFlags:
    """Isolated / pendant / universal flags; a pendant also reports its
    unique neighbor.  The one-vertex graph counts as both isolated and
    universal."""
    g.check_vertex(v)
    deg = g.degree(v)
    isolated = deg == 0
    pendant = deg == 1
    universal = deg == g.n - 1
    return VertexFlags(isolated, pendant, universal, g.adj[v][0] if pendant else None)


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and len(components(g)) == 1 and g.edge_count == g.n - 1


def disjoint_union(a: Graph, b: Graph) -> Graph:
    """Disjoint union; vertices of `b` are shifted up by a.n."""
    edges = a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph(a.n + b.n, edges)


def join(a: Graph, b: Graph) -> Graph:
    """Join: disjoint union plus every edge between the two parts."""
    edges = a.edges() + [(u + a.n, v + a.n) for u, v in b.edges()]
    edges += [(u, v + a.n) for u in range(a.n) for v in range(b.n)]
    return Graph(a.n + b.n, edges)
