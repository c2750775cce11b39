"""Exhaustive enumeration of small graphs up to isomorphism.

Graphs are tuples of open-neighborhood bitmasks.  Canonicalization
refines vertices by iterated degree/neighbor-color signatures and then
minimizes the upper-triangle edge encoding over all labelings that
respect the refined cells; isomorphic graphs therefore share one tuple.
Levels are built by attaching a new vertex to every smaller canonical
graph in all 2^(n-1) ways.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

Rows = tuple[int, ...]


def _refine(rows: Rows) -> list[list[int]]:
    n = len(rows)
    colors = [rows[v].bit_count() for v in range(n)]
    while True:
        signature = [
            (colors[v], tuple(sorted(colors[w] for w in range(n) if rows[v] >> w & 1)))
            for v in range(n)
        ]
        ranks = {sig: i for i, sig in enumerate(sorted(set(signature)))}
        new_colors = [ranks[sig] for sig in signature]
        if new_colors == colors:
            break
        colors = new_colors
    cells: dict[int, list[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _encode(rows: Rows, labeling: tuple[int, ...]) -> int:
    n = len(rows)
    code = 0
    bit = 0
    for i in range(n):
        for j in range(i + 1, n):
            if rows[labeling[i]] >> labeling[j] & 1:
                code |= 1 << bit
            bit += 1
    return code


def canonical(rows: Rows) -> Rows:
    """Canonically relabeled copy of the graph."""
    n = len(rows)
    cells = _refine(rows)
    best_code = None
    best_labeling = None
    for parts in itertools.product(*(itertools.permutations(cell) for cell in cells)):
        labeling = tuple(v for part in parts for v in part)
        code = _encode(rows, labeling)
        if best_code is None or code < best_code:
            best_code, best_labeling = code, labeling
    position = {v: i for i, v in enumerate(best_labeling)}
    out = [0] * n
    for v in range(n):
        for w in range(n):
            if rows[v] >> w & 1:
                out[position[v]] |= 1 << position[w]
    return tuple(out)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Rows, ...]:
    """All graphs on n vertices, one canonical representative each."""
    if n == 1:
        return ((0,),)
    out = set()
    for rows in all_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            extended = tuple(
                r | ((nb >> i & 1) << (n - 1)) for i, r in enumerate(rows)
            ) + (nb,)
            out.add(canonical(extended))
    return tuple(sorted(out))


def is_connected_rows(rows: Rows) -> bool:
    n = len(rows)
    seen = 1
    frontier = [0]
    while frontier:
        v = frontier.pop()
        fresh = rows[v] & ~seen
        while fresh:
            low = fresh & -fresh
            w = low.bit_length() - 1
            seen |= low
            fresh ^= low
            frontier.append(w)
    return seen == (1 << n) - 1


def connected_graphs(n: int) -> list[Rows]:
    return [rows for rows in all_graphs(n) if is_connected_rows(rows)]


def rows_to_edges(rows: Rows) -> list[tuple[int, int]]:
    return [
        (u, v)
        for u in range(len(rows))
        for v in range(u + 1, len(rows))
        if rows[u] >> v & 1
    ]
