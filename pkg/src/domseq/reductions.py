"""Vertex deletion and addition rules: lifting a maximum DNS over an
isolated, pendant, or universal vertex, the one-unit uncertainty interval
for twin deletion, the true-twin blow-up, and the deletion delta.
"""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, classify_vertex, has_isolated_vertex, induced_subgraph
from .oracle import DEFAULT_LIMIT, OracleResult, oracle_mdns
from .sequence import VertexSeq, concat, footprint


class ReductionError(ValueError):
    """Rule applied outside its hypothesis."""


@dataclass(frozen=True)
class LiftResult:
    value: int
    sequence: VertexSeq
    rule: str


@dataclass(frozen=True)
class TwinInterval:
    lower: int
    upper: int

    def __contains__(self, value: int) -> bool:
        return self.lower <= value <= self.upper


def lift_isolated(g: Graph, v: int, sub: Sequence[int]) -> LiftResult:
    """Append an isolated vertex to a maximum DNS of the graph without it."""
    if not classify_vertex(g, v).isolated:
        raise ReductionError(f"vertex {v} is not isolated")
    seq = concat(sub, (v,))
    return LiftResult(len(seq), seq, "isolated")


def lift_pendant(
    g: Graph,
    p: int,
    sub: Sequence[int],
    sub_avoiding_v: Sequence[int] | None = None,
) -> LiftResult:
    """Lift over a pendant vertex p with neighbor v.

    When a maximum DNS of G - p that avoids v exists the value grows by
    two (finish with v then p); otherwise by one (finish with p).
    Deciding whether the avoiding witness exists is the caller's job.
    """
    flags = classify_vertex(g, p)
    if not flags.pendant:
        raise ReductionError(f"vertex {p} is not pendant")
    v = flags.pendant_neighbor
    rest, _ = induced_subgraph(g, [x for x in range(g.n) if x != p])
    if has_isolated_vertex(rest):
        raise ReductionError("graph minus the pendant has an isolated vertex")
    if sub_avoiding_v is not None:
        if v in sub_avoiding_v:
            raise ReductionError(f"supplied witness contains the pendant's neighbor {v}")
        if len(sub_avoiding_v) != len(sub):
            raise ReductionError("avoiding witness must have maximum length")
        seq = concat(sub_avoiding_v, (v, p))
        return LiftResult(len(seq), seq, "pendant+2")
    seq = concat(sub, (p,))
    return LiftResult(len(seq), seq, "pendant+1")


def lift_universal(g: Graph, u: int, sub: Sequence[int]) -> LiftResult:
    """Lift over a universal vertex: the value grows by one exactly when
    the rest of the graph has an isolated vertex, in which case u is
    appended; otherwise the witness passes through unchanged."""
    if g.n < 2:
        raise ReductionError("universal lift needs at least two vertices")
    if not classify_vertex(g, u).universal:
        raise ReductionError(f"vertex {u} is not universal")
    rest, _ = induced_subgraph(g, [x for x in range(g.n) if x != u])
    if has_isolated_vertex(rest):
        seq = concat(sub, (u,))
        return LiftResult(len(seq), seq, "universal+1")
    return LiftResult(len(sub), tuple(sub), "universal+0")


def twin_interval(
    g: Graph,
    v: int,
    v_prime: int,
    kind: str,
    sub_value: int | None = None,
    limit: int = DEFAULT_LIMIT,
) -> TwinInterval:
    """Interval [value(G - v'), value(G - v') + 1] containing value(G),
    valid for both twin kinds.  The deleted-graph value may be supplied
    (structural solvers), else it comes from the oracle."""
    g.check_vertex(v)
    g.check_vertex(v_prime)
    if kind == "true":
        ok = v != v_prime and g.closed_bits[v] == g.closed_bits[v_prime]
    elif kind == "false":
        ok = v != v_prime and g.open_bits[v] == g.open_bits[v_prime]
    else:
        raise ReductionError(f"unknown twin kind {kind!r}")
    if not ok:
        raise ReductionError(f"vertices {v}, {v_prime} are not {kind} twins")
    if sub_value is None:
        rest, _ = induced_subgraph(g, [x for x in range(g.n) if x != v_prime])
        sub_value = oracle_mdns(rest, limit).value
    return TwinInterval(sub_value, sub_value + 1)


def true_twin_plus_one_applies(g_minus_twin: Graph, v: int, witness: Sequence[int]) -> bool:
    """Check the certificate condition under which adding a true twin of v
    raises the value by one: the witness is a DNS containing v, v's step
    newly dominates something, and every other step still dominates
    something outside v's newly dominated set.

    Only checks the supplied witness; searching for one is exponential and
    out of scope.
    """
    cert = footprint(g_minus_twin, witness)
    if not cert.is_dns:
        return False
    by_vertex = {st.vertex: st for st in cert.steps}
    if v not in by_vertex or not by_vertex[v].new:
        return False
    taken = by_vertex[v].new
    return all(
        (st.new | st.once) - taken for st in cert.steps if st.vertex != v
    )


def touches_twin_pair(s: Sequence[int], v: int, v_prime: int) -> bool:
    """Whether a sequence meets {v, v'}.  Every maximum DNS must, whenever
    deleting the false twin v' lowers the value."""
    return v in s or v_prime in s


def blowup_gf(
    g: Graph, f: Mapping[int, int] | Sequence[int]
) -> tuple[Graph, tuple[tuple[int, ...], ...]]:
    """Replace each vertex v by a clique of f(v) + 1 mutual true twins;
    copies of adjacent vertices are fully connected.  Returns the new
    graph and, per original vertex, the tuple of its copy ids."""
    if isinstance(f, Mapping):
        counts = [int(f.get(v, 0)) for v in range(g.n)]
    else:
        if len(f) != g.n:
            raise ReductionError(f"expected {g.n} multiplicities, got {len(f)}")
        counts = [int(x) for x in f]
    if any(c < 0 for c in counts):
        raise ReductionError("multiplicities must be non-negative")
    classes: list[tuple[int, ...]] = []
    offset = 0
    for v in range(g.n):
        classes.append(tuple(range(offset, offset + counts[v] + 1)))
        offset += counts[v] + 1
    edges: list[tuple[int, int]] = []
    for v in range(g.n):
        ids = classes[v]
        edges += [(a, b) for i, a in enumerate(ids) for b in ids[i + 1 :]]
        for w in g.adj[v]:
            if v < w:
                edges += [(a, b) for a in ids for b in classes[w]]
    return Graph(offset, edges), tuple(classes)


def deletion_delta(g: Graph, v: int, limit: int = DEFAULT_LIMIT) -> int:
    """value(G) - value(G - v), guaranteed in [0, 3] whenever G - v has
    no isolated vertices."""
    g.check_vertex(v)
    rest, _ = induced_subgraph(g, [x for x in range(g.n) if x != v])
    if has_isolated_vertex(rest):
        raise ReductionError("graph minus the vertex has an isolated vertex")
    return oracle_mdns(g, limit).value - oracle_mdns(rest, limit).value
