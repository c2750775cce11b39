"""Seeded random generators for every graph family the solvers claim,
plus a deterministic spider builder.  Generators return the graph
together with a ground-truth construction recipe, so recognizer tests do
not need the oracle and failures reproduce from the seed.
"""

from __future__ import annotations

import heapq
import random
from dataclasses import dataclass

from .decomposition import SPECIAL_EDGES, SpiderPartition
from .graph import Graph, disjoint_union, join

FAMILIES = (
    "tree",
    "threshold",
    "cograph",
    "spider",
    "quasi_spider",
    "p4tidy",
    "connected_random",
)

_MIN_SIZE = {
    "tree": 1,
    "threshold": 1,
    "cograph": 1,
    "spider": 4,
    "quasi_spider": 5,
    "p4tidy": 1,
    "connected_random": 1,
}


class GenError(ValueError):
    """Infeasible generation request."""


@dataclass(frozen=True)
class GenSpec:
    family: str
    size: int
    seed: int


def gen(spec: GenSpec) -> tuple[Graph, dict]:
    """Generate a member of the requested family with exactly `size`
    vertices, deterministically under the seed.  The second component is
    the construction recipe (JSON-serializable ground truth)."""
    if spec.family not in FAMILIES:
        raise GenError(f"unknown family {spec.family!r}")
    if spec.size < _MIN_SIZE[spec.family]:
        raise GenError(
            f"family {spec.family!r} needs at least {_MIN_SIZE[spec.family]} vertices"
        )
    rng = random.Random(spec.seed)
    builder = {
        "tree": _gen_tree,
        "threshold": _gen_threshold,
        "cograph": _gen_cograph,
        "spider": _gen_spider,
        "quasi_spider": _gen_quasi_spider,
        "p4tidy": _gen_p4tidy,
        "connected_random": _gen_connected_random,
    }[spec.family]
    graph, structure = builder(rng, spec.size)
    structure = {"family": spec.family, "size": spec.size, "seed": spec.seed, **structure}
    return graph, structure


def _gen_tree(rng: random.Random, n: int) -> tuple[Graph, dict]:
    if n == 1:
        return Graph(1), {"pruefer": []}
    if n == 2:
        return Graph(2, [(0, 1)]), {"pruefer": []}
    code = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in code:
        degree[v] += 1
    edges = []
    leaves = sorted(v for v in range(n) if degree[v] == 1)
    heapq.heapify(leaves)
    for v in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph(n, edges), {"pruefer": code}


def _gen_threshold(rng: random.Random, n: int) -> tuple[Graph, dict]:
    ops = [rng.choice(["isolated", "universal"]) for _ in range(n - 1)]
    edges = []
    for i, op in enumerate(ops, start=1):
        if op == "universal":
            edges += [(j, i) for j in range(i)]
    return Graph(n, edges), {"operations": ops}


def _gen_cograph(rng: random.Random, n: int) -> tuple[Graph, dict]:
    def build(k: int) -> tuple[Graph, dict]:
        if k == 1:
            return Graph(1), {"op": "leaf"}
        parts = _split(rng, k, max_parts=min(k, 3))
        op = rng.choice(["union", "join"])
        graphs, recipes = [], []
        for p in parts:
            sub, rec = build(p)
            graphs.append(sub)
            recipes.append(rec)
        out = graphs[0]
        merge = disjoint_union if op == "union" else join
        for extra in graphs[1:]:
            out = merge(out, extra)
        return out, {"op": op, "children": recipes}

    graph, recipe = build(n)
    return graph, {"cotree": recipe}


def _split(rng: random.Random, total: int, max_parts: int) -> list[int]:
    """Random composition of `total` into 2..max_parts positive parts."""
    k = rng.randint(2, max(2, max_parts))
    cuts = sorted(rng.sample(range(1, total), min(k - 1, total - 1)))
    bounds = [0] + cuts + [total]
    return [b - a for a, b in zip(bounds, bounds[1:])]


def build_spider(
    kind: str, r: int, head: Graph | None = None, quasi: str = "none"
) -> tuple[Graph, SpiderPartition]:
    """Deterministic spider or quasi-spider: S takes ids 0..r-1, C takes
    r..2r-1 (aligned), the twin (if any) is 2r, and head vertices follow."""
    if kind not in ("thin", "thick"):
        raise GenError(f"unknown spider kind {kind!r}")
    if quasi not in ("none", "S_f", "S_t", "C_f", "C_t"):
        raise GenError(f"unknown quasi tag {quasi!r}")
    if r < 2 or (kind == "thick" and r < 3):
        raise GenError(f"weight {r} infeasible for a {kind} spider")
    s = list(range(r))
    c = list(range(r, 2 * r))
    twin = 2 * r if quasi != "none" else None
    offset = 2 * r + (1 if twin is not None else 0)
    head_n = head.n if head is not None else 0
    h = list(range(offset, offset + head_n))
    edges = [(a, b) for i, a in enumerate(c) for b in c[i + 1 :]]
    for i in range(r):
        for j in range(r):
            if (i == j) == (kind == "thin"):
                edges.append((s[i], c[j]))
    edges += [(a, b) for a in c for b in h]
    if head is not None:
        edges += [(u + offset, v + offset) for u, v in head.edges()]
    if twin is not None:
        target = s[-1] if quasi.startswith("S") else c[-1]
        mirror = [w for w in _spider_neighbors(kind, r, s, c, h, target)]
        edges += [(twin, w) for w in mirror]
        if quasi.endswith("_t"):
            edges.append((twin, target))
    return Graph(offset + head_n, edges), SpiderPartition(
        kind, tuple(s), tuple(c), tuple(h), quasi=quasi, twin_vertex=twin
    )


def _spider_neighbors(kind, r, s, c, h, v) -> list[int]:
    """Open neighborhood of an S- or C-vertex inside the plain spider."""
    if v in s:
        i = s.index(v)
        return [c[i]] if kind == "thin" else [c[j] for j in range(r) if j != i]
    i = c.index(v)
    out = [c[j] for j in range(r) if j != i] + list(h)
    out += [s[i]] if kind == "thin" else [s[j] for j in range(r) if j != i]
    return out


def _pick_spider_shape(
    rng: random.Random, n: int, quasi_allowed: bool, quasi_required: bool
) -> tuple[str, int, str, int] | None:
    """Random feasible (kind, r, quasi, head_size) with 2r + twin + head = n."""
    options = []
    for kind, r_min in (("thin", 2), ("thick", 3)):
        for q in ("none", "S_f", "S_t", "C_f", "C_t"):
            if q != "none" and not quasi_allowed:
                continue
            if q == "none" and quasi_required:
                continue
            extra = 0 if q == "none" else 1
            r = r_min
            while 2 * r + extra <= n:
                options.append((kind, r, q, n - 2 * r - extra))
                r += 1
    return rng.choice(options) if options else None


def _gen_spider(rng: random.Random, n: int) -> tuple[Graph, dict]:
    shape = _pick_spider_shape(rng, n, quasi_allowed=False, quasi_required=False)
    if shape is None:
        raise GenError(f"no spider on {n} vertices")
    return _materialize_spider(rng, shape)


def _gen_quasi_spider(rng: random.Random, n: int) -> tuple[Graph, dict]:
    shape = _pick_spider_shape(rng, n, quasi_allowed=True, quasi_required=True)
    if shape is None:
        raise GenError(f"no quasi-spider on {n} vertices")
    return _materialize_spider(rng, shape)


def _materialize_spider(rng, shape) -> tuple[Graph, dict]:
    kind, r, quasi, head_size = shape
    head_graph = None
    head_recipe = None
    if head_size:
        head_graph, head_recipe = _p4tidy_recipe(rng, head_size)
    graph, part = build_spider(kind, r, head_graph, quasi)
    return graph, {
        "kind": kind,
        "weight": r,
        "quasi": quasi,
        "s": list(part.s_vertices),
        "c": list(part.c_vertices),
        "head": list(part.head),
        "twin": part.twin_vertex,
        "head_recipe": head_recipe,
    }


def _gen_p4tidy(rng: random.Random, n: int) -> tuple[Graph, dict]:
    graph, recipe = _p4tidy_recipe(rng, n)
    return graph, {"recipe": recipe}


def _p4tidy_recipe(rng: random.Random, n: int) -> tuple[Graph, dict]:
    """Random member of the supported catalogue: single vertices, the
    special five-vertex graphs, and (quasi-)spiders with generated heads,
    closed under disjoint union and join."""
    if n == 1:
        return Graph(1), {"op": "leaf"}
    choices = ["union", "join"]
    if n == 5:
        choices += ["special", "special"]
    if n >= 4:
        choices += ["spider", "spider"]
    op = rng.choice(choices)
    if op == "special":
        name = rng.choice(sorted(SPECIAL_EDGES))
        return Graph(5, sorted(SPECIAL_EDGES[name])), {"op": "special", "name": name}
    if op == "spider":
        shape = _pick_spider_shape(rng, n, quasi_allowed=n >= 5, quasi_required=False)
        if shape is not None:
            kind, r, quasi, head_size = shape
            head_graph = None
            head_recipe = None
            if head_size:
                head_graph, head_recipe = _p4tidy_recipe(rng, head_size)
            graph, _ = build_spider(kind, r, head_graph, quasi)
            return graph, {
                "op": "spider",
                "kind": kind,
                "weight": r,
                "quasi": quasi,
                "head": head_recipe,
            }
        op = rng.choice(["union", "join"])
    parts = _split(rng, n, max_parts=min(n, 3))
    graphs, recipes = [], []
    for p in parts:
        sub, rec = _p4tidy_recipe(rng, p)
        graphs.append(sub)
        recipes.append(rec)
    out = graphs[0]
    merge = disjoint_union if op == "union" else join
    for extra in graphs[1:]:
        out = merge(out, extra)
    return out, {"op": op, "children": recipes}


def _gen_connected_random(rng: random.Random, n: int) -> tuple[Graph, dict]:
    edges = {
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
    }
    spine = list(range(n))
    rng.shuffle(spine)
    for a, b in zip(spine, spine[1:]):
        edges.add((min(a, b), max(a, b)))
    return Graph(n, sorted(edges)), {"edge_count": len(edges)}


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    """Plain seeded G(n, p); may be disconnected or have isolated vertices."""
    edges = [
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    ]
    return Graph(n, edges)
