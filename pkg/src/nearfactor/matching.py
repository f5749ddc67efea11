"""Maximum-cardinality matching in general graphs (Edmonds' blossom method).

The search grows an alternating BFS tree from one exposed root at a time.
An odd cycle found during the search is shrunk by relabelling every vertex
on it with the blossom's base, after which the whole blossom behaves as a
single outer vertex. Each search is O(n^2) including contractions, and one
search per exposed root suffices, so the total is O(n^3).

Ties are broken by vertex id everywhere: roots are tried in increasing
order and neighbour lists are sorted, so results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional

from .graph import Graph

__all__ = [
    "Matching",
    "NearFactor",
    "InvalidMatchingError",
    "max_matching",
    "has_perfect_matching",
    "find_near_factor",
    "unsaturated_vertices",
    "augmenting_path",
    "greedy_matching",
    "validate_matching",
]

Edge = tuple[int, int]


class InvalidMatchingError(ValueError):
    """A proposed matching is not a matching of the host graph.

    ``pair`` holds the offending edge (or pair of edges sharing an endpoint).
    """

    def __init__(self, message: str, pair):
        super().__init__(message)
        self.pair = pair


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Edge]) -> Matching:
        return cls(frozenset((u, v) if u < v else (v, u) for u, v in pairs))

    @classmethod
    def from_mate(cls, mate: list[int]) -> Matching:
        return cls(frozenset((v, w) for v, w in enumerate(mate) if w > v))

    @property
    def saturated(self) -> frozenset[int]:
        return frozenset(x for e in self.edges for x in e)

    def mate(self, n: int) -> list[int]:
        out = [-1] * n
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def serialize(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.sorted_edges())

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class NearFactor:
    """A matching that misses exactly one vertex, ``unsaturated``."""

    matching: Matching
    unsaturated: int

    def serialize(self) -> str:
        return self.matching.serialize() + f"unsaturated: {self.unsaturated}\n"


def validate_matching(g: Graph, m: Matching) -> None:
    """Raise :class:`InvalidMatchingError` unless ``m`` is a matching of ``g``."""
    owner: dict[int, Edge] = {}
    for e in sorted(m.edges):
        u, v = e
        if u == v or not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
            raise InvalidMatchingError(f"{e} is not an edge of the graph", e)
        for x in e:
            if x in owner:
                raise InvalidMatchingError(
                    f"edges {owner[x]} and {e} share endpoint {x}", (owner[x], e)
                )
            owner[x] = e


def unsaturated_vertices(g: Graph, m: Matching) -> frozenset[int]:
    validate_matching(g, m)
    return frozenset(range(g.n)) - m.saturated


def greedy_matching(g: Graph) -> Matching:
    """Maximal matching from a single pass over the sorted edge list."""
    return Matching.from_mate(_greedy_mate(g))


def _greedy_mate(g: Graph) -> list[int]:
    mate = [-1] * g.n
    for u, v in g._sorted_edges:
        if mate[u] == -1 and mate[v] == -1:
            mate[u] = v
            mate[v] = u
    return mate


class _Search:
    """Scratch state for the alternating-tree search of one graph."""

    def __init__(self, adj, mate: list[int]):
        self.adj = adj
        self.n = len(adj)
        self.mate = mate

    def _lca(self, a: int, b: int) -> int:
        base, mate, parent = self.base, self.mate, self.parent
        seen = [False] * self.n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def _mark_path(self, v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        base, mate, parent = self.base, self.mate, self.parent
        while base[v] != b:
            in_blossom[base[v]] = True
            in_blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def grow(self, root: int) -> int:
        """BFS from an exposed ``root``.

        Returns the exposed endpoint of an augmenting path, or -1. After the
        call ``self.outer`` flags every vertex reachable from ``root`` by an
        even-length alternating path.
        """
        n, adj, mate = self.n, self.adj, self.mate
        self.parent = parent = [-1] * n
        self.base = base = list(range(n))
        self.outer = outer = [False] * n
        outer[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if base[v] == base[w] or mate[v] == w:
                    continue
                if w == root or (mate[w] != -1 and parent[mate[w]] != -1):
                    # odd cycle: shrink it into its base
                    b = self._lca(v, w)
                    in_blossom = [False] * n
                    self._mark_path(v, b, w, in_blossom)
                    self._mark_path(w, b, v, in_blossom)
                    for x in range(n):
                        if in_blossom[base[x]]:
                            base[x] = b
                            if not outer[x]:
                                outer[x] = True
                                queue.append(x)
                elif parent[w] == -1:
                    parent[w] = v
                    if mate[w] == -1:
                        return w
                    outer[mate[w]] = True
                    queue.append(mate[w])
        return -1

    def path_to(self, end: int) -> list[int]:
        """Augmenting path (vertex sequence) ending at exposed ``end``."""
        path = []
        v = end
        while v != -1:
            path.append(v)
            u = self.parent[v]
            path.append(u)
            v = self.mate[u]
        path.reverse()
        return path

    def augment(self, end: int) -> None:
        mate, parent = self.mate, self.parent
        v = end
        while v != -1:
            pv = parent[v]
            nv = mate[pv]
            mate[v] = pv
            mate[pv] = v
            v = nv


def _maximum_mate(g: Graph) -> list[int]:
    mate = _greedy_mate(g)
    if sum(1 for x in mate if x != -1) >= g.n - 1:
        return mate
    search = _Search(g.adjacency, mate)
    for root in range(g.n):
        if mate[root] == -1:
            end = search.grow(root)
            if end != -1:
                search.augment(end)
    return mate


def max_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching of ``g``; deterministic for a given graph."""
    return Matching.from_mate(_maximum_mate(g))


def matching_number(g: Graph) -> int:
    return sum(1 for x in _maximum_mate(g) if x != -1) // 2


def has_perfect_matching(g: Graph) -> bool:
    """True iff ``g`` has a 1-factor. The order-0 graph has the empty one."""
    if g.n % 2:
        return False
    return 2 * matching_number(g) == g.n


def find_near_factor(g: Graph) -> Optional[NearFactor]:
    """A matching missing exactly one vertex, or ``None`` if there is none."""
    if g.n % 2 == 0:
        return None
    mate = _maximum_mate(g)
    exposed = [v for v, w in enumerate(mate) if w == -1]
    if len(exposed) != 1:
        return None
    return NearFactor(Matching.from_mate(mate), exposed[0])


def augmenting_path(g: Graph, m: Matching) -> Optional[list[int]]:
    """Find an ``m``-augmenting path in ``g`` or return ``None``.

    The path is a vertex list with both ends unsaturated, alternating between
    non-matching and matching edges.
    """
    validate_matching(g, m)
    search = _Search(g.adjacency, m.mate(g.n))
    for root in range(g.n):
        if search.mate[root] == -1:
            end = search.grow(root)
            if end != -1:
                return search.path_to(end)
    return None


def _outer_set(g: Graph, mate: list[int]) -> set[int]:
    # Vertices reachable from some exposed vertex by an even alternating path.
    # With a maximum matching this is the set missed by some maximum matching.
    search = _Search(g.adjacency, list(mate))
    reached: set[int] = set()
    for root in range(g.n):
        if mate[root] == -1:
            if search.grow(root) != -1:
                raise InvalidMatchingError("matching is not maximum", None)
            reached.update(v for v in range(g.n) if search.outer[v])
    return reached


def deficiency_barrier(g: Graph) -> tuple[frozenset[int], int]:
    """Return ``(S, k)`` where S is a barrier set with o(G - S) - |S| = k.

    ``k`` equals the number of vertices left exposed by a maximum matching.
    S is the neighbourhood of the vertices missed by some maximum matching.
    """
    mate = _maximum_mate(g)
    outer = _outer_set(g, mate)
    adj = g.adjacency
    barrier = frozenset(w for v in outer for w in adj[v] if w not in outer)
    return barrier, sum(1 for x in mate if x == -1)
