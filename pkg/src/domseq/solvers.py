"""Constructive maximum-DNS solvers: union/join combinators, the spider
and quasi-spider value formulas, tree, threshold, cograph, and P4-tidy
front ends, and an auto dispatcher with an oracle fallback.

All sequences are in the ambient graph's vertex ids; sub-results lift
through concatenation, so no relabeling happens here.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, replace
from typing import Iterable, Optional

from .decomposition import (
    DecompTree,
    JoinNode,
    Leaf,
    SpecialNode,
    SpiderNode,
    SpiderPartition,
    UnionNode,
    decompose,
    tree_vertices,
)
from .graph import Graph, is_tree
from .oracle import DEFAULT_LIMIT, oracle_mdns
from .sequence import VertexSeq, concat, footprint


class SolverError(ValueError):
    """Solver applied outside its preconditions."""


class UnsupportedGraphError(SolverError):
    """No structural solver applies and the graph exceeds the oracle limit."""


@dataclass(frozen=True)
class SolveResult:
    value: int
    sequence: VertexSeq
    method: str

    def to_json(self, g: Graph) -> dict:
        return {
            "value": self.value,
            "method": self.method,
            "certificate": footprint(g, self.sequence).to_json(),
        }


EMPTY_RESULT = SolveResult(0, (), "empty")

# Maximum-DNS step orders for the special five-vertex leaves, as canonical
# pattern positions.  The path order is the level order of the path rooted
# at an end; the cycle and house orders were fixed once against the oracle.
_SPECIAL_ORDERS = {
    "P5": (0, 1, 2, 3, 4),
    "C5": (0, 2, 4, 1),
    "house": (1, 2, 3, 0),
}


def _subset_mask(vertices: Iterable[int]) -> int:
    return sum(1 << v for v in vertices)


def _has_isolated_within(g: Graph, vertices: Iterable[int]) -> bool:
    verts = list(vertices)
    mask = _subset_mask(verts)
    return any(not (g.open_bits[v] & mask) for v in verts)


def mdns_union(a: SolveResult, b: SolveResult) -> SolveResult:
    """Disjoint union: values add and witnesses concatenate."""
    return SolveResult(a.value + b.value, concat(a.sequence, b.sequence), "union")


def mdns_join(
    g_joined: Graph,
    left: Iterable[int],
    a: SolveResult,
    right: Iterable[int],
    b: SolveResult,
) -> SolveResult:
    """Join of two labeled parts of `g_joined`.

    The value is the larger of the parts' values each raised by one for
    an isolated vertex; the winning part's witness carries over, followed
    by one arbitrary vertex of the other part exactly when the winner has
    an isolated vertex (which that appended step re-dominates).
    """
    left = sorted(left)
    right = sorted(right)
    if not left or not right:
        raise SolverError("join parts must be non-empty")
    if set(left) & set(right):
        raise SolverError("join parts overlap")
    for u in left:
        bits = g_joined.open_bits[u]
        if any(not (bits >> v & 1) for v in right):
            raise SolverError("inconsistent labeling: parts are not fully joined")
    a_iso = _has_isolated_within(g_joined, left)
    b_iso = _has_isolated_within(g_joined, right)
    score_a = a.value + a_iso
    score_b = b.value + b_iso
    if score_a >= score_b:
        seq = concat(a.sequence, (right[0],)) if a_iso else a.sequence
        return SolveResult(score_a, seq, "join")
    seq = concat(b.sequence, (left[0],)) if b_iso else b.sequence
    return SolveResult(score_b, seq, "join")


def mdns_spider(p: SpiderPartition, head: Optional[SolveResult] = None) -> SolveResult:
    """Plain spider: thin gives 2r extra steps (clique first, then the
    stable set), thick gives r + 2 (stable set, then two clique vertices),
    in both cases appended after the head's witness."""
    if p.quasi != "none":
        raise SolverError("partition carries a twin; use mdns_quasi_spider")
    head = head or EMPTY_RESULT
    s, c = p.s_vertices, p.c_vertices
    if p.kind == "thin":
        tail: tuple[int, ...] = c + s
        gain = 2 * p.weight
    else:
        tail = s + c[:2]
        gain = p.weight + 2
    return SolveResult(head.value + gain, concat(head.sequence, tail), "spider")


def mdns_quasi_spider(
    p: SpiderPartition,
    head: Optional[SolveResult] = None,
    head_has_isolated: bool = False,
) -> SolveResult:
    """Quasi-spider case table.

    Thin spiders: a false S-twin always joins the tail; a true S-twin
    joins only when the head is empty or has an isolated vertex; C-twins
    join only when the head is empty.  Thick spiders: S-twins join, and
    C-twins never do.
    """
    if p.quasi == "none":
        raise SolverError("partition has no twin; use mdns_spider")
    if p.twin_vertex is None:
        raise SolverError("quasi partition is missing its twin vertex")
    head = head or EMPTY_RESULT
    s, c, t, r = p.s_vertices, p.c_vertices, p.twin_vertex, p.weight
    empty_head = head.value == 0
    if p.kind == "thin":
        if p.quasi == "S_f":
            tail: tuple[int, ...] = c + s + (t,)
        elif p.quasi == "S_t":
            if empty_head or head_has_isolated:
                tail = (s[-1], t, c[-1]) + c[:-1] + s[:-1]
            else:
                tail = c + s
        else:  # C_f / C_t
            if empty_head:
                tail = (s[-1], c[-1], t) + c[:-1] + s[:-1]
            else:
                tail = c + s
        gain = len(tail)
    else:
        if p.quasi in ("S_f", "S_t"):
            tail = s + (t,) + c[:2]
        else:
            tail = s + c[:2]
        gain = len(tail)
    return SolveResult(head.value + gain, concat(head.sequence, tail), "quasi_spider")


def solve_tree(g: Graph) -> SolveResult:
    """Trees: the value is the vertex count and a breadth-first level
    order from any root is a witness (each step either reaches an
    untouched child or re-dominates the leaf itself)."""
    if not is_tree(g):
        raise SolverError("input is not a tree")
    order = []
    seen = [False] * g.n
    queue = deque([0])
    seen[0] = True
    while queue:
        v = queue.popleft()
        order.append(v)
        for w in g.adj[v]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return SolveResult(g.n, tuple(order), "tree")


def solve_threshold(g: Graph) -> SolveResult | None:
    """Threshold graphs, by peeling vertices that are universal or
    isolated in the remaining graph and replaying the lifts in reverse.
    Returns None when the peel strands a graph with neither."""
    if g.n == 0:
        return None
    alive = set(range(g.n))
    peeled: list[tuple[int, str]] = []
    while len(alive) > 1:
        mask = _subset_mask(alive)
        pick = None
        for v in sorted(alive):
            inside = (g.open_bits[v] & mask).bit_count()
            if inside == 0:
                pick = (v, "isolated")
                break
            if inside == len(alive) - 1:
                pick = (v, "universal")
                break
        if pick is None:
            return None
        peeled.append(pick)
        alive.remove(pick[0])
    (root,) = alive
    seq: VertexSeq = (root,)
    for v, role in reversed(peeled):
        if role == "isolated":
            seq = concat(seq, (v,))
        elif _has_isolated_within(g, alive):
            seq = concat(seq, (v,))
        alive.add(v)
    return SolveResult(len(seq), seq, "threshold")


def solve_cograph(g: Graph) -> SolveResult | None:
    """Cographs, by recursing on union and join splits down to single
    vertices.  Returns None when a piece with at least two vertices is
    both connected and co-connected."""
    if g.n == 0:
        return None

    def rec(verts: list[int]) -> SolveResult | None:
        if len(verts) == 1:
            return SolveResult(1, (verts[0],), "leaf")
        mask = _subset_mask(verts)
        comps = _components_within(g, verts, mask, complemented=False)
        if len(comps) > 1:
            out = None
            for comp in comps:
                child = rec(comp)
                if child is None:
                    return None
                out = child if out is None else mdns_union(out, child)
            return out
        co_comps = _components_within(g, verts, mask, complemented=True)
        if len(co_comps) > 1:
            out = None
            done: list[int] = []
            for comp in co_comps:
                child = rec(comp)
                if child is None:
                    return None
                if out is None:
                    out, done = child, list(comp)
                else:
                    out = mdns_join(g, done, out, comp, child)
                    done += comp
            return out
        return None

    result = rec(list(range(g.n)))
    return None if result is None else replace(result, method="cograph")


def _components_within(
    g: Graph, verts: list[int], mask: int, complemented: bool
) -> list[list[int]]:
    """Connected components of the induced subgraph (or of its complement),
    each sorted, ordered by smallest vertex."""
    remaining = set(verts)
    out = []
    while remaining:
        start = min(remaining)
        comp = {start}
        frontier = [start]
        remaining.remove(start)
        while frontier:
            u = frontier.pop()
            bits = g.open_bits[u] & mask
            for w in list(remaining):
                adjacent = bool(bits >> w & 1)
                if adjacent != complemented:
                    remaining.remove(w)
                    comp.add(w)
                    frontier.append(w)
        out.append(sorted(comp))
    return out


def solve_p4tidy(g: Graph, tree: DecompTree | None = None) -> SolveResult | None:
    """P4-tidy graphs (and anything else the decomposition covers), by
    evaluating the modular tree bottom-up."""
    if tree is None:
        tree = decompose(g)
    if tree is None:
        return None
    return replace(_eval_tree(g, tree), method="p4tidy")


def _eval_tree(g: Graph, node: DecompTree) -> SolveResult:
    if isinstance(node, Leaf):
        return SolveResult(1, (node.vertex,), "leaf")
    if isinstance(node, UnionNode):
        out = _eval_tree(g, node.children[0])
        for child in node.children[1:]:
            out = mdns_union(out, _eval_tree(g, child))
        return out
    if isinstance(node, JoinNode):
        out = _eval_tree(g, node.children[0])
        done = sorted(tree_vertices(node.children[0]))
        for child in node.children[1:]:
            verts = sorted(tree_vertices(child))
            out = mdns_join(g, done, out, verts, _eval_tree(g, child))
            done += verts
        return out
    if isinstance(node, SpiderNode):
        part = node.partition
        head = _eval_tree(g, node.head) if node.head is not None else None
        if part.quasi == "none":
            return mdns_spider(part, head)
        head_iso = bool(part.head) and _has_isolated_within(g, part.head)
        return mdns_quasi_spider(part, head, head_iso)
    order = _SPECIAL_ORDERS[node.name]
    return SolveResult(len(order), tuple(node.labeling[i] for i in order), "special")


def solve_auto(g: Graph, limit: int = DEFAULT_LIMIT) -> SolveResult:
    """Dispatch to the cheapest applicable solver: tree, threshold,
    cograph, P4-tidy, then the oracle for small graphs."""
    if g.n == 0:
        raise SolverError("empty graph")
    if is_tree(g):
        return solve_tree(g)
    result = solve_threshold(g)
    if result is not None:
        return result
    result = solve_cograph(g)
    if result is not None:
        return result
    result = solve_p4tidy(g)
    if result is not None:
        return result
    if g.n <= limit:
        res = oracle_mdns(g, limit)
        return SolveResult(res.value, res.witness, "oracle")
    raise UnsupportedGraphError(
        f"graph is outside the structural catalogue and n={g.n} exceeds the oracle limit {limit}"
    )
