"""Simple undirected graphs on vertices ``0..n-1``.

Includes the edge-list text format, connected components, vertex deletion
and a few deterministic generators.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

__all__ = [
    "Graph",
    "GraphError",
    "GraphFormatError",
    "ComponentDecomposition",
    "parse_graph",
    "serialize_graph",
    "components",
    "delete_vertices",
    "count_odd_components",
    "generate",
    "disjoint_union",
    "random_graph",
    "XorShift64Star",
]

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised for graphs that are not finite, simple and 0-indexed."""


class GraphFormatError(GraphError):
    """Malformed graph text. ``line`` and ``column`` are 1-based."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Graph:
    """Finite simple undirected graph.

    Edges are stored as ``(u, v)`` pairs with ``u < v``. Any iterable of
    pairs is accepted on construction and normalised; self-loops, repeated
    edges and out-of-range endpoints raise :class:`GraphError`.
    """

    n: int
    edges: frozenset[Edge] = field(default=frozenset())

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {self.n!r}")
        raw = list(self.edges)
        norm = set()
        for e in raw:
            u, v = e
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside [0, {self.n})")
            pair = (u, v) if u < v else (v, u)
            if pair in norm:
                raise GraphError(f"duplicate edge {pair}")
            norm.add(pair)
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def _trusted(cls, n: int, edges: frozenset[Edge]) -> Graph:
        # Skips validation; edges must already be normalised (u < v).
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "edges", edges)
        return g

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbour tuples, indexed by vertex."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def _sorted_edges(self) -> tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    def sorted_edges(self) -> list[Edge]:
        return list(self._sorted_edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def vertices(self) -> range:
        return range(self.n)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.sorted_edges()})"


# --------------------------------------------------------------------------
# text format


def parse_graph(text: str | bytes) -> Graph:
    """Parse the ``n m`` header plus ``m`` lines of ``u v`` edges.

    Lines whose first non-blank character is ``#`` are comments; blank lines
    are ignored.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GraphFormatError(f"input is not UTF-8: {exc.reason}", 1) from None

    header: tuple[int, int] | None = None
    edges: list[Edge] = []
    seen: dict[Edge, int] = {}
    lineno = 0
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        values = _int_pair(line, lineno)
        if header is None:
            n, m = values
            if n < 0 or m < 0:
                raise GraphFormatError("header values must be non-negative", lineno)
            header = (n, m)
            continue
        n, m = header
        if len(edges) == m:
            raise GraphFormatError(f"header declares {m} edges but more lines follow", lineno)
        u, v = values
        for value, col in ((u, _token_col(line, 0)), (v, _token_col(line, 1))):
            if not 0 <= value < n:
                raise GraphFormatError(f"endpoint {value} out of range [0, {n})", lineno, col)
        if u == v:
            raise GraphFormatError(f"self-loop at vertex {u}", lineno)
        pair = (u, v) if u < v else (v, u)
        if pair in seen:
            raise GraphFormatError(f"duplicate edge {pair} (first on line {seen[pair]})", lineno)
        seen[pair] = lineno
        edges.append(pair)

    if header is None:
        raise GraphFormatError("missing 'n m' header", max(lineno, 1))
    n, m = header
    if len(edges) != m:
        raise GraphFormatError(f"header declares {m} edges but {len(edges)} were given", max(lineno, 1))
    return Graph._trusted(n, frozenset(edges))


def _token_col(line: str, index: int) -> int:
    col = 0
    for i, tok in enumerate(line.split()):
        col = line.index(tok, col)
        if i == index:
            return col + 1
        col += len(tok)
    return 1


def _int_pair(line: str, lineno: int) -> tuple[int, int]:
    tokens = line.split()
    if len(tokens) != 2:
        col = _token_col(line, 2) if len(tokens) > 2 else len(line.rstrip()) + 1
        raise GraphFormatError(f"expected two integers, found {len(tokens)} tokens", lineno, col)
    out = []
    for i, tok in enumerate(tokens):
        try:
            out.append(int(tok))
        except ValueError:
            raise GraphFormatError(f"not an integer: {tok!r}", lineno, _token_col(line, i)) from None
    return out[0], out[1]


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


# --------------------------------------------------------------------------
# components and deletion


@dataclass(frozen=True)
class ComponentDecomposition:
    """Connected components ordered by their smallest vertex."""

    components: tuple[frozenset[int], ...]

    @property
    def parities(self) -> tuple[str, ...]:
        return tuple("odd" if len(c) % 2 else "even" for c in self.components)

    @property
    def odd_count(self) -> int:
        return sum(len(c) % 2 for c in self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def _check_vertex_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for x in s:
        if not (isinstance(x, int) and 0 <= x < g.n):
            raise GraphError(f"vertex {x!r} out of range [0, {g.n})")
    return s


def _bfs_components(adj, n: int, removed: frozenset[int]) -> list[list[int]]:
    seen = [False] * n
    for x in removed:
        seen[x] = True
    out = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        queue = deque(comp)
        while queue:
            x = queue.popleft()
            for y in adj[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        out.append(comp)
    return out


def components(g: Graph) -> ComponentDecomposition:
    comps = _bfs_components(g.adjacency, g.n, frozenset())
    return ComponentDecomposition(tuple(frozenset(c) for c in comps))


def delete_vertices(g: Graph, s: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``g`` minus the vertices in ``s`` and the old-to-new id map.

    Surviving vertices keep their relative order, so the map is monotone.
    """
    s = _check_vertex_set(g, s)
    if not s:
        return g, {v: v for v in range(g.n)}
    if len(s) == 1:
        (x,) = s
        mapping = {v: v - (v > x) for v in range(g.n) if v != x}
        edges = frozenset(
            (u - (u > x), v - (v > x)) for u, v in g.edges if u != x and v != x
        )
        return Graph._trusted(g.n - 1, edges), mapping
    mapping: dict[int, int] = {}
    for v in range(g.n):
        if v not in s:
            mapping[v] = len(mapping)
    edges = frozenset(
        (mapping[u], mapping[v]) for u, v in g.edges if u not in s and v not in s
    )
    return Graph._trusted(len(mapping), edges), mapping


def count_odd_components(g: Graph, s: Iterable[int] = ()) -> int:
    """Number of odd components of ``g`` after deleting ``s``."""
    s = _check_vertex_set(g, s)
    return sum(len(c) % 2 for c in _bfs_components(g.adjacency, g.n, s))


# --------------------------------------------------------------------------
# generators


def generate(kind: str, n: int) -> Graph:
    """Build a standard graph on ``n`` vertices.

    ``kind`` is one of ``path``, ``cycle``, ``complete``, ``star`` or
    ``empty``. ``star`` puts the centre at vertex 0, so ``star`` with n=4 is
    K1,3. ``cycle`` needs three vertices to close; for n < 3 it returns the
    path on n vertices.
    """
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if kind == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif kind == "cycle":
        edges = [(i, i + 1) for i in range(n - 1)]
        if n >= 3:
            edges.append((0, n - 1))
    elif kind == "complete":
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    elif kind == "star":
        edges = [(0, v) for v in range(1, n)]
    elif kind == "empty":
        edges = []
    else:
        raise GraphError(f"unknown graph kind {kind!r}")
    return Graph._trusted(n, frozenset(edges))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    edges = g1.edges | {(u + off, v + off) for u, v in g2.edges}
    return Graph._trusted(g1.n + g2.n, frozenset(edges))


_MASK64 = (1 << 64) - 1


class XorShift64Star:
    """xorshift64* generator, seeded through one round of splitmix64.

    Seeding: ``z = seed + 0x9E3779B97F4A7C15``;
    ``z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9``;
    ``z = (z ^ (z >> 27)) * 0x94D049BB133111EB``; ``state = z ^ (z >> 31)``
    (all mod 2**64), and a zero state is replaced by the golden-ratio
    constant. Each step: ``x ^= x >> 12; x ^= x << 25; x ^= x >> 27`` and the
    output is ``x * 0x2545F4914F6CDD1D`` mod 2**64.
    """

    def __init__(self, seed: int):
        z = (seed + 0x9E3779B97F4A7C15) & _MASK64
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        self.state = z or 0x9E3779B97F4A7C15

    def next_u64(self) -> int:
        x = self.state
        x ^= x >> 12
        x ^= (x << 25) & _MASK64
        x ^= x >> 27
        self.state = x
        return (x * 0x2545F4914F6CDD1D) & _MASK64

    def random(self) -> float:
        """Uniform float in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def randrange(self, k: int) -> int:
        return self.next_u64() % k


def random_graph(n: int, p: float, seed: int) -> Graph:
    """G(n, p): each pair ``u < v`` in lexicographic order draws one float."""
    if n < 0:
        raise GraphError(f"vertex count must be non-negative, got {n}")
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability must lie in [0, 1], got {p}")
    rng = XorShift64Star(seed & _MASK64)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.append((u, v))
    return Graph._trusted(n, frozenset(edges))
