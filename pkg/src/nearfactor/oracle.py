"""Brute-force matching facts for small graphs.

Plain backtracking over the sorted edge list. Nothing here touches the
blossom engine, so the two can be compared against each other.
"""

from __future__ import annotations

from typing import Iterator

from .graph import Graph
from .matching import Matching

__all__ = [
    "ORACLE_MAX_N",
    "OracleBoundError",
    "enumerate_matchings",
    "max_matching_size_brute",
    "has_perfect_brute",
    "has_near_factor_brute",
]

ORACLE_MAX_N = 16


class OracleBoundError(ValueError):
    pass


def _guard(g: Graph) -> None:
    if g.n > ORACLE_MAX_N:
        raise OracleBoundError(f"brute-force enumeration refused for n={g.n} > {ORACLE_MAX_N}")


def _backtrack(n: int, edges: list[tuple[int, int]]) -> Iterator[tuple[tuple[int, int], ...]]:
    used = [False] * n
    chosen: list[tuple[int, int]] = []

    def rec(start: int):
        yield tuple(chosen)
        for i in range(start, len(edges)):
            u, v = edges[i]
            if used[u] or used[v]:
                continue
            used[u] = used[v] = True
            chosen.append(edges[i])
            yield from rec(i + 1)
            chosen.pop()
            used[u] = used[v] = False

    return rec(0)


def enumerate_matchings(g: Graph) -> Iterator[Matching]:
    """Yield every matching of ``g`` exactly once, starting with the empty one."""
    _guard(g)
    for edges in _backtrack(g.n, sorted(g.edges)):
        yield Matching(frozenset(edges))


def max_matching_size_brute(g: Graph) -> int:
    _guard(g)
    best = 0
    cap = g.n // 2
    for edges in _backtrack(g.n, sorted(g.edges)):
        if len(edges) > best:
            best = len(edges)
            if best == cap:
                break
    return best


def has_perfect_brute(g: Graph) -> bool:
    # A matching saturating every vertex.
    return 2 * max_matching_size_brute(g) == g.n


def has_near_factor_brute(g: Graph) -> bool:
    # A matching saturating all vertices except exactly one.
    return 2 * max_matching_size_brute(g) == g.n - 1
