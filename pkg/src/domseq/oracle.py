"""Exact exponential reference solvers, used as ground truth for every
constructive algorithm in the package.

The sequence solvers share one dynamic program over subsets of played
vertices.  Legality of a move depends only on the set of vertices played
so far, never on their order: the domination count of a vertex w is
min(2, |N[w] & played|).  That makes memoization over the 2^n played
sets sound and collapses the naive factorial search to O(2^n * n^2).

Values are computed bottom-up over all masks in decreasing popcount
order; a mask's value is the best final sequence length reachable from
it (or -1 when the completion requirement cannot be met).  Witnesses are
rebuilt by walking forward from the empty mask, always taking the
smallest vertex id that still achieves the optimum, which makes oracle
output deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, has_isolated_vertex

DEFAULT_LIMIT = 16


class OracleLimitError(ValueError):
    """Graph exceeds the configured subset-DP size limit."""


class IsolatedVertexError(ValueError):
    """Operation requires a graph without isolated vertices."""


@dataclass(frozen=True)
class OracleResult:
    value: int
    witness: tuple[int, ...]


def _check_limit(g: Graph, limit: int) -> None:
    if g.n > limit:
        raise OracleLimitError(f"n={g.n} exceeds the oracle size limit {limit}")


def _under_threshold(closed: tuple[int, ...], n: int, mask: int, threshold: int) -> int:
    """Bitmask of vertices dominated fewer than `threshold` times by `mask`."""
    out = 0
    for w in range(n):
        if (closed[w] & mask).bit_count() < threshold:
            out |= 1 << w
    return out


def _longest_sequence(g: Graph, threshold: int, require_complete: bool) -> OracleResult:
    """Longest sequence whose every step dominates a vertex with current
    count below `threshold`; with `require_complete`, only prefixes that
    extend to full threshold-fold domination count."""
    n = g.n
    if n == 0:
        return OracleResult(0, ())
    closed = g.closed_bits
    size = 1 << n
    value = [0] * size
    for mask in sorted(range(size), key=int.bit_count, reverse=True):
        under = _under_threshold(closed, n, mask, threshold)
        best = mask.bit_count() if (under == 0 or not require_complete) else -1
        for v in range(n):
            bit = 1 << v
            if mask & bit or not (closed[v] & under):
                continue
            child = value[mask | bit]
            if child > best:
                best = child
        value[mask] = best
    if value[0] < 0:
        raise IsolatedVertexError("no sequence attains the required domination")
    seq: list[int] = []
    mask = 0
    while mask.bit_count() < value[mask]:
        under = _under_threshold(closed, n, mask, threshold)
        for v in range(n):
            bit = 1 << v
            if mask & bit or not (closed[v] & under):
                continue
            if value[mask | bit] == value[mask]:
                seq.append(v)
                mask |= bit
                break
        else:  # pragma: no cover - the DP table guarantees a move exists
            raise AssertionError("witness reconstruction failed")
    return OracleResult(value[0], tuple(seq))


def oracle_mdns(g: Graph, limit: int = DEFAULT_LIMIT) -> OracleResult:
    """Longest double neighborhood sequence, for any graph."""
    _check_limit(g, limit)
    return _longest_sequence(g, threshold=2, require_complete=False)


def oracle_gddn(g: Graph, limit: int = DEFAULT_LIMIT) -> OracleResult:
    """Longest double dominating sequence; requires no isolated vertices.

    On such graphs the value coincides with oracle_mdns: a maximum DNS
    cannot be extended, and an inextensible DNS already double-dominates.
    """
    _check_limit(g, limit)
    if has_isolated_vertex(g):
        raise IsolatedVertexError("double domination needs a graph without isolated vertices")
    return _longest_sequence(g, threshold=2, require_complete=True)


def oracle_grundy_domination(g: Graph, limit: int = DEFAULT_LIMIT) -> OracleResult:
    """Longest legal dominating sequence (single domination)."""
    _check_limit(g, limit)
    return _longest_sequence(g, threshold=1, require_complete=True)


def oracle_double_domination(g: Graph, limit: int = DEFAULT_LIMIT) -> OracleResult:
    """Minimum size of a set dominating every vertex twice, by subset scan.

    The witness lists one minimum set in ascending order; any order of a
    minimal double dominating set is a DDS, so it verifies as one.
    """
    _check_limit(g, limit)
    if has_isolated_vertex(g):
        raise IsolatedVertexError("double domination needs a graph without isolated vertices")
    n = g.n
    closed = g.closed_bits
    best_mask = None
    best_size = n + 1
    for mask in range(1 << n):
        if mask.bit_count() >= best_size:
            continue
        if all((closed[w] & mask).bit_count() >= 2 for w in range(n)):
            best_mask = mask
            best_size = mask.bit_count()
    if best_mask is None:  # pragma: no cover - V(G) itself double-dominates when delta >= 1
        raise IsolatedVertexError("graph admits no double dominating set")
    witness = tuple(v for v in range(n) if best_mask >> v & 1)
    return OracleResult(best_size, witness)
