"""Quantitative envelope for the Grundy double domination number: the
degree-based sandwich, the Grundy-domination sandwich, the structural
classification of values 2 and 3, and a rewriting procedure producing a
maximum DDS whose first level is at least as large as its second.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .graph import Graph, components, degree_profile, has_isolated_vertex
from .oracle import (
    DEFAULT_LIMIT,
    IsolatedVertexError,
    oracle_double_domination,
    oracle_gddn,
    oracle_grundy_domination,
)
from .sequence import VertexSeq, footprint, move_after, p_set, split_levels


class SmallGddn(Enum):
    TWO = "two"
    THREE = "three"
    OTHER = "other"


@dataclass(frozen=True)
class BoundReport:
    spherical_lower: int
    gamma_x2: int
    gddn: int
    upper: int
    grundy: int
    grundy_lower: int
    grundy_upper: int

    @property
    def sandwich_holds(self) -> bool:
        return self.spherical_lower <= self.gamma_x2 <= self.gddn <= self.upper

    @property
    def grundy_chain_holds(self) -> bool:
        return self.grundy_lower <= self.gddn <= self.grundy_upper

    def to_json(self) -> dict:
        return {
            "spherical_lower": self.spherical_lower,
            "gamma_x2": self.gamma_x2,
            "gddn": self.gddn,
            "upper": self.upper,
            "grundy": self.grundy,
            "grundy_lower": self.grundy_lower,
            "grundy_upper": self.grundy_upper,
        }


def bound_report(
    g: Graph,
    gamma_x2: int | None = None,
    gddn: int | None = None,
    grundy: int | None = None,
    limit: int = DEFAULT_LIMIT,
) -> BoundReport:
    """All seven bound quantities; missing values come from the oracles.

    Requires a graph without isolated vertices.  Precomputed values let
    callers report on graphs beyond the oracle size limit.
    """
    profile = degree_profile(g)
    if profile.has_isolated:
        raise IsolatedVertexError("bounds are stated for graphs without isolated vertices")
    if gamma_x2 is None:
        gamma_x2 = oracle_double_domination(g, limit).value
    if gddn is None:
        gddn = oracle_gddn(g, limit).value
    if grundy is None:
        grundy = oracle_grundy_domination(g, limit).value
    spherical = -(-2 * g.n // (profile.max_degree + 1))
    return BoundReport(
        spherical_lower=spherical,
        gamma_x2=gamma_x2,
        gddn=gddn,
        upper=g.n + 1 - profile.min_degree,
        grundy=grundy,
        grundy_lower=grundy + 1,
        grundy_upper=2 * grundy,
    )


def classify_small_gddn(g: Graph) -> SmallGddn:
    """Classify whether the Grundy double domination number is 2, 3, or
    larger, by structure alone.

    Value 2 holds exactly for complete graphs; value 3 exactly when the
    graph is incomplete but every vertex misses at most one other vertex
    (equivalently, the complement is a nonempty matching plus isolated
    vertices, i.e. a join of one-vertex and two-vertex-stable factors).
    """
    if g.n < 2:
        raise ValueError("classification needs at least two vertices")
    if has_isolated_vertex(g):
        raise IsolatedVertexError("classification needs a graph without isolated vertices")
    if len(components(g)) != 1:
        raise ValueError("classification needs a connected graph")
    if all(g.degree(v) == g.n - 1 for v in range(g.n)):
        return SmallGddn.TWO
    if all(g.degree(v) >= g.n - 2 for v in range(g.n)):
        return SmallGddn.THREE
    return SmallGddn.OTHER


def s1_majority_witness(g: Graph, limit: int = DEFAULT_LIMIT) -> VertexSeq:
    """A maximum DDS whose first level is at least as large as its second.

    Starts from an oracle witness and repeatedly moves a first-level
    vertex u with at least two dependants immediately after the latest of
    them; each move strictly grows the first level, so the loop ends with
    every dependant set of size at most one, which forces the majority.
    """
    if has_isolated_vertex(g):
        raise IsolatedVertexError("requires a graph without isolated vertices")
    seq = oracle_gddn(g, limit).witness
    for _ in range(g.n * g.n + 1):
        first, _second = split_levels(g, seq)
        candidate = None
        for u in seq:
            if u not in first:
                continue
            dependants = p_set(g, seq, u)
            if len(dependants) >= 2:
                candidate = (u, max(dependants, key=seq.index))
                break
        if candidate is None:
            return seq
        seq = move_after(seq, *candidate)
    raise AssertionError("rewriting loop failed to terminate")  # pragma: no cover
