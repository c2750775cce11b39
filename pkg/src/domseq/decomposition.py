"""Recursive modular structure: disjoint-union and join splitting, spider
and quasi-spider recognition, and the three special five-vertex leaves.

A spider partitions into a stable set S and clique C of equal size r plus
a head H complete to C and anticomplete to S, the S-C edges forming a
matching (thin) or co-matching (thick, r >= 3; at r = 2 both readings
give a path on four vertices, labeled thin here).  A quasi-spider is a
spider plus one true or false twin of the last S- or C-vertex.

Recognition is polynomial, not linear: S is pinned down by degrees (the
degree-1 vertices of a thin spider, the minimum-degree class of a thick
one), the rest follows from adjacency to S, and a full check against the
definition validates the candidate.  decompose() never guesses: a
modular piece matching nothing yields None, so solvers stay sound and
complete exactly on the supported catalogue.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Union

from .graph import Graph, complement, components, find_twins, induced_subgraph


@dataclass(frozen=True)
class SpiderPartition:
    """Spider structure; s_vertices and c_vertices are aligned so index i
    pairs s_i with c_i (its matched neighbor when thin, its unique
    non-neighbor when thick).  For a quasi-spider the twin sits next to
    the last pair and `quasi` records which variant."""

    kind: str  # "thin" | "thick"
    s_vertices: tuple[int, ...]
    c_vertices: tuple[int, ...]
    head: tuple[int, ...]
    quasi: str = "none"  # none | S_f | S_t | C_f | C_t
    twin_vertex: int | None = None

    @property
    def weight(self) -> int:
        return len(self.s_vertices)

    def all_vertices(self) -> frozenset[int]:
        extra = () if self.twin_vertex is None else (self.twin_vertex,)
        return frozenset(self.s_vertices + self.c_vertices + self.head + extra)


@dataclass(frozen=True)
class Leaf:
    vertex: int


@dataclass(frozen=True)
class UnionNode:
    children: tuple["DecompTree", ...]


@dataclass(frozen=True)
class JoinNode:
    children: tuple["DecompTree", ...]


@dataclass(frozen=True)
class SpiderNode:
    partition: SpiderPartition
    head: Optional["DecompTree"]


@dataclass(frozen=True)
class SpecialNode:
    name: str  # "P5" | "house" | "C5"
    labeling: tuple[int, ...]  # canonical position -> ambient vertex


DecompTree = Union[Leaf, UnionNode, JoinNode, SpiderNode, SpecialNode]

# Canonical 5-vertex patterns: P5 the path 0-1-2-3-4, house its complement,
# C5 the cycle closing the path.
SPECIAL_EDGES: dict[str, frozenset[tuple[int, int]]] = {
    "P5": frozenset({(0, 1), (1, 2), (2, 3), (3, 4)}),
    "house": frozenset({(0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)}),
    "C5": frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}),
}


def tree_vertices(node: DecompTree) -> frozenset[int]:
    if isinstance(node, Leaf):
        return frozenset((node.vertex,))
    if isinstance(node, (UnionNode, JoinNode)):
        out: frozenset[int] = frozenset()
        for child in node.children:
            out |= tree_vertices(child)
        return out
    if isinstance(node, SpiderNode):
        return node.partition.all_vertices()
    return frozenset(node.labeling)


def match_special(g: Graph) -> tuple[str, tuple[int, ...]] | None:
    """Isomorphism test against the three special five-vertex graphs.
    Returns the name and a labeling sending canonical positions to the
    graph's vertices, or None."""
    if g.n != 5:
        return None
    degrees = sorted(g.degree(v) for v in range(5))
    for name, pattern in SPECIAL_EDGES.items():
        pat_deg = [0] * 5
        for a, b in pattern:
            pat_deg[a] += 1
            pat_deg[b] += 1
        if sorted(pat_deg) != degrees:
            continue
        for perm in itertools.permutations(range(5)):
            if all(
                g.has_edge(perm[i], perm[j]) == ((i, j) in pattern)
                for i in range(5)
                for j in range(i + 1, 5)
            ):
                return name, perm
    return None


def _valid_spider(g: Graph, part: SpiderPartition) -> bool:
    s, c, h = part.s_vertices, part.c_vertices, part.head
    r = len(s)
    if len(c) != r or r < 2 or (part.kind == "thick" and r < 3):
        return False
    all_v = set(s) | set(c) | set(h)
    if len(all_v) != len(s) + len(c) + len(h) or all_v != set(range(g.n)):
        return False
    if any(g.has_edge(a, b) for i, a in enumerate(s) for b in s[i + 1 :]):
        return False  # S must be stable
    if any(not g.has_edge(a, b) for i, a in enumerate(c) for b in c[i + 1 :]):
        return False  # C must be a clique
    if any(not g.has_edge(a, b) for a in c for b in h):
        return False
    if any(g.has_edge(a, b) for a in s for b in h):
        return False
    want_equal = part.kind == "thin"
    return all(
        g.has_edge(s[i], c[j]) == ((i == j) == want_equal)
        for i in range(r)
        for j in range(r)
    )


def _thin_candidate(g: Graph) -> SpiderPartition | None:
    s = [v for v in range(g.n) if g.degree(v) == 1]
    if len(s) < 2:
        return None
    c = [g.adj[v][0] for v in s]
    if len(set(c)) != len(c) or set(s) & set(c):
        return None
    head = sorted(set(range(g.n)) - set(s) - set(c))
    part = SpiderPartition("thin", tuple(s), tuple(c), tuple(head))
    return part if _valid_spider(g, part) else None


def _thick_candidate(g: Graph) -> SpiderPartition | None:
    if g.n < 6:
        return None
    d = min(g.degree(v) for v in range(g.n))
    s = [v for v in range(g.n) if g.degree(v) == d]
    r = len(s)
    if r < 3 or d != r - 1:
        return None
    s_set = set(s)
    c = [-1] * r
    head = []
    for v in range(g.n):
        if v in s_set:
            continue
        missing = [i for i, w in enumerate(s) if not g.has_edge(v, w)]
        if len(missing) == r:
            head.append(v)
        elif len(missing) == 1:
            if c[missing[0]] != -1:
                return None
            c[missing[0]] = v
        else:
            return None
    if -1 in c:
        return None
    part = SpiderPartition("thick", tuple(s), tuple(c), tuple(head))
    return part if _valid_spider(g, part) else None


def recognize_spider(g: Graph) -> SpiderPartition | None:
    """The unique spider partition of g, or None.  In a thin spider S is
    exactly the degree-1 set; in a thick one exactly the minimum-degree
    class, so one candidate per kind suffices."""
    if g.n < 4:
        return None
    return _thin_candidate(g) or _thick_candidate(g)


def recognize_quasi_spider(g: Graph) -> SpiderPartition | None:
    """Find a twin pair, drop one side, and ask for a spider; the kept
    twin must land in S or C, which it is then rotated to the end of.
    Symmetric placements can tie; the first valid partition wins."""
    if g.n < 5:
        return None
    for u, v, twin_kind in find_twins(g):
        for keep, drop in ((u, v), (v, u)):
            sub, old_to_new = induced_subgraph(g, [x for x in range(g.n) if x != drop])
            part = recognize_spider(sub)
            if part is None:
                continue
            new_to_old = {nw: od for od, nw in old_to_new.items()}
            s = [new_to_old[x] for x in part.s_vertices]
            c = [new_to_old[x] for x in part.c_vertices]
            head = tuple(sorted(new_to_old[x] for x in part.head))
            if keep in s:
                i = s.index(keep)
                tag = "S_t" if twin_kind == "true" else "S_f"
            elif keep in c:
                i = c.index(keep)
                tag = "C_t" if twin_kind == "true" else "C_f"
            else:
                continue
            s.append(s.pop(i))
            c.append(c.pop(i))
            return SpiderPartition(
                part.kind, tuple(s), tuple(c), head, quasi=tag, twin_vertex=drop
            )
    return None


def decompose(g: Graph) -> DecompTree | None:
    """Recursive modular decomposition over the supported catalogue.

    Disconnected graphs split into a union, co-disconnected ones into a
    join; modular pieces must be a single vertex, one of the special
    five-vertex graphs, or a (quasi-)spider whose head decomposes in
    turn.  Returns None (not an error) when a piece matches nothing.
    """
    if g.n == 0:
        return None
    return _decompose_subset(g, tuple(range(g.n)))


def _decompose_subset(g: Graph, verts: tuple[int, ...]) -> DecompTree | None:
    if len(verts) == 1:
        return Leaf(verts[0])
    sub, old_to_new = induced_subgraph(g, verts)
    new_to_old = {nw: od for od, nw in old_to_new.items()}

    def lift(xs) -> tuple[int, ...]:
        return tuple(sorted(new_to_old[x] for x in xs))

    comps = components(sub)
    if len(comps) > 1:
        children = []
        for comp in sorted(comps, key=min):
            child = _decompose_subset(g, lift(comp))
            if child is None:
                return None
            children.append(child)
        return UnionNode(tuple(children))
    co_comps = components(complement(sub))
    if len(co_comps) > 1:
        children = []
        for comp in sorted(co_comps, key=min):
            child = _decompose_subset(g, lift(comp))
            if child is None:
                return None
            children.append(child)
        return JoinNode(tuple(children))
    if len(verts) == 5:
        special = match_special(sub)
        if special is not None:
            name, labeling = special
            return SpecialNode(name, tuple(new_to_old[x] for x in labeling))
    part = recognize_spider(sub) or recognize_quasi_spider(sub)
    if part is not None:
        lifted = SpiderPartition(
            part.kind,
            tuple(new_to_old[x] for x in part.s_vertices),
            tuple(new_to_old[x] for x in part.c_vertices),
            lift(part.head),
            quasi=part.quasi,
            twin_vertex=None if part.twin_vertex is None else new_to_old[part.twin_vertex],
        )
        head_tree = None
        if lifted.head:
            head_tree = _decompose_subset(g, lifted.head)
            if head_tree is None:
                return None
        return SpiderNode(lifted, head_tree)
    return None


def tree_to_json(node: DecompTree) -> dict:
    """Flat serialization: a node array with child indices plus the root."""
    nodes: list[dict] = []

    def emit(cur: DecompTree) -> int:
        idx = len(nodes)
        nodes.append({})
        if isinstance(cur, Leaf):
            nodes[idx] = {"kind": "leaf", "vertex": cur.vertex}
        elif isinstance(cur, (UnionNode, JoinNode)):
            kind = "union" if isinstance(cur, UnionNode) else "join"
            nodes[idx] = {"kind": kind, "children": [emit(ch) for ch in cur.children]}
        elif isinstance(cur, SpiderNode):
            p = cur.partition
            nodes[idx] = {
                "kind": "spider",
                "spider_kind": p.kind,
                "quasi": p.quasi,
                "weight": p.weight,
                "s": list(p.s_vertices),
                "c": list(p.c_vertices),
                "head_vertices": list(p.head),
                "twin": p.twin_vertex,
                "head": emit(cur.head) if cur.head is not None else None,
            }
        else:
            nodes[idx] = {
                "kind": "special",
                "name": cur.name,
                "labeling": list(cur.labeling),
            }
        return idx

    root = emit(node)
    return {"root": root, "nodes": nodes}
