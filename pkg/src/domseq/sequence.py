"""Vertex-sequence algebra: per-step footprints, legality certificates,
the first/second-level split, and the rewriting operators.

A step of a sequence "dominates" every vertex of its closed neighborhood.
A step is legal when it dominates some vertex dominated at most once so
far; a sequence of legal steps is a double neighborhood sequence (DNS),
and a DNS whose vertex set dominates everything twice is a double
dominating sequence (DDS).  Domination counts are capped at 2 throughout:
nothing in the theory distinguishes higher multiplicities.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph

VertexSeq = tuple[int, ...]


class SequenceError(ValueError):
    """Invalid vertex sequence or misuse of a sequence operator."""


@dataclass(frozen=True)
class StepFootprint:
    """Effect of one step: `new` holds the vertices first dominated here,
    `once` those dominated exactly once before and again now."""

    vertex: int
    new: frozenset[int]
    once: frozenset[int]

    @property
    def legal(self) -> bool:
        return bool(self.new or self.once)


@dataclass(frozen=True)
class Certificate:
    """Full legality record for a sequence over a graph.

    `first_illegal` is the index of the first illegal step (None when the
    sequence is a DNS), so the verifier doubles as a debugger.
    """

    n: int
    sequence: VertexSeq
    steps: tuple[StepFootprint, ...]
    is_dns: bool
    is_dds: bool
    counts: tuple[int, ...]
    first_illegal: int | None

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sequence": list(self.sequence),
            "steps": [
                {"v": st.vertex, "new": sorted(st.new), "once": sorted(st.once)}
                for st in self.steps
            ],
            "is_dns": self.is_dns,
            "is_dds": self.is_dds,
        }


def _validated(g: Graph, s: Sequence[int]) -> VertexSeq:
    seq = tuple(s)
    seen = set()
    for v in seq:
        g.check_vertex(v)
        if v in seen:
            raise SequenceError(f"duplicate vertex {v} in sequence")
        seen.add(v)
    return seq


def footprint(g: Graph, s: Sequence[int]) -> Certificate:
    """Compute per-step footprints left to right and classify the sequence.

    Tolerates sequences that are not a DNS: footprints keep accumulating
    and the certificate reports where legality first failed.
    """
    seq = _validated(g, s)
    counts = [0] * g.n
    steps = []
    first_illegal = None
    for i, v in enumerate(seq):
        closed = (v,) + g.adj[v]
        new = frozenset(w for w in closed if counts[w] == 0)
        once = frozenset(w for w in closed if counts[w] == 1)
        if not new and not once and first_illegal is None:
            first_illegal = i
        for w in closed:
            if counts[w] < 2:
                counts[w] += 1
        steps.append(StepFootprint(v, new, once))
    is_dns = first_illegal is None
    is_dds = is_dns and all(c >= 2 for c in counts)
    return Certificate(g.n, seq, tuple(steps), is_dns, is_dds, tuple(counts), first_illegal)


def split_levels(g: Graph, s: Sequence[int]) -> tuple[VertexSeq, VertexSeq]:
    """Split a DNS into the subsequence of steps that newly dominate
    something and the remainder, preserving relative order."""
    cert = footprint(g, s)
    if not cert.is_dns:
        raise SequenceError(f"sequence is not a DNS (illegal step {cert.first_illegal})")
    first = tuple(st.vertex for st in cert.steps if st.new)
    second = tuple(st.vertex for st in cert.steps if not st.new)
    return first, second


def p_set(g: Graph, s: Sequence[int], u: int) -> frozenset[int]:
    """Second-level vertices whose once-dominated witnesses were first
    dominated by `u`.  Every returned vertex occurs after `u`."""
    cert = footprint(g, s)
    if not cert.is_dns:
        raise SequenceError(f"sequence is not a DNS (illegal step {cert.first_illegal})")
    by_vertex = {st.vertex: st for st in cert.steps}
    if u not in by_vertex or not by_vertex[u].new:
        raise SequenceError(f"vertex {u} is not a first-level step of the sequence")
    new_u = by_vertex[u].new
    return frozenset(
        st.vertex for st in cert.steps if not st.new and new_u & st.once
    )


def move_after(s: Sequence[int], u: int, v: int) -> VertexSeq:
    """Move `u` to the position immediately after `v`; `u` must precede
    `v` in the input.  Vertices outside the affected span keep their
    positions."""
    seq = tuple(s)
    if u not in seq or v not in seq:
        raise SequenceError("both vertices must occur in the sequence")
    i, j = seq.index(u), seq.index(v)
    if i >= j:
        raise SequenceError(f"vertex {u} must occur before vertex {v}")
    return seq[:i] + seq[i + 1 : j + 1] + (u,) + seq[j + 1 :]


def concat(s1: Sequence[int], s2: Sequence[int]) -> VertexSeq:
    """Concatenation; the empty sequence is the identity on both sides."""
    a, b = tuple(s1), tuple(s2)
    overlap = set(a) & set(b)
    if overlap:
        raise SequenceError(f"sequences overlap on {sorted(overlap)}")
    return a + b


def delete_vertices(s: Sequence[int], r: Iterable[int]) -> VertexSeq:
    drop = set(r)
    return tuple(v for v in s if v not in drop)
