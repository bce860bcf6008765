"""Immutable simple graphs and the structural primitives used everywhere else.

Vertices are dense indices ``0..n-1``.  Every operation that builds a derived
graph (induced subgraph, contraction) also returns the index map needed to
carry paths back to the host graph.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

__all__ = [
    "Graph",
    "GraphError",
    "BlockDecomposition",
    "OrientedPath",
    "Induced",
    "Contraction",
    "degree",
    "neighborhood_of_set",
    "blocks",
    "contract_set",
    "build_join",
    "distance",
    "induced",
    "components",
    "is_connected",
    "is_two_connected",
    "bfs_path",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "petersen_graph",
]

INF = math.inf


class GraphError(ValueError):
    """Malformed graph input or an operation applied outside its domain."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``0..n-1``; ``adj[v]`` is sorted."""

    n: int
    adj: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for v, row in enumerate(self.adj):
            prev = -1
            for w in row:
                if not 0 <= w < self.n:
                    raise GraphError(f"neighbor {w} of {v} out of range")
                if w == v:
                    raise GraphError(f"self-loop at {v}")
                if w <= prev:
                    raise GraphError(f"neighbors of {v} not strictly sorted")
                prev = w
        for v, row in enumerate(self.adj):
            for w in row:
                if v not in self.nbrs(w):
                    raise GraphError(f"asymmetric edge {v}-{w}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            rows[u].add(v)
            rows[v].add(u)
        return cls(n, tuple(tuple(sorted(r)) for r in rows))

    @classmethod
    def from_mask(cls, n: int, mask: int) -> "Graph":
        """Decode the bit layout used by the exhaustive enumerator.

        Bit ``e`` of ``mask`` is the ``e``-th pair in ``(0,1), (0,2), (1,2),
        (0,3), ...`` order, i.e. the graph6 column order.
        """
        edges = []
        e = 0
        for j in range(1, n):
            for i in range(j):
                if (mask >> e) & 1:
                    edges.append((i, j))
                e += 1
        return cls.from_edges(n, edges)

    @cached_property
    def _nbr_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(r) for r in self.adj)

    def nbrs(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbr_sets[u]

    @cached_property
    def m(self) -> int:
        return sum(len(r) for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @cached_property
    def masks(self) -> np.ndarray:
        """Neighbor bitmasks as int64, for the kernels (n <= 62)."""
        if self.n > 62:
            raise GraphError("bitmask kernels support at most 62 vertices")
        out = np.zeros(self.n, dtype=np.int64)
        for v, row in enumerate(self.adj):
            acc = 0
            for w in row:
                acc |= 1 << w
            out[v] = acc
        return out

    @property
    def vertices(self) -> range:
        return range(self.n)

    def with_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        return Graph.from_edges(self.n, list(self.edges()) + list(extra))

    def without_edges(self, removed: Iterable[tuple[int, int]]) -> "Graph":
        drop = {frozenset(e) for e in removed}
        return Graph.from_edges(self.n, [e for e in self.edges() if frozenset(e) not in drop])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


class OrientedPath(tuple):
    """A vertex sequence read from its first to its last vertex."""

    __slots__ = ()

    @property
    def length(self) -> int:
        return len(self) - 1

    @property
    def start(self) -> int:
        return self[0]

    @property
    def end(self) -> int:
        return self[-1]

    def is_valid_in(self, g: Graph) -> bool:
        if len(self) == 0 or len(set(self)) != len(self):
            return False
        if any(not 0 <= v < g.n for v in self):
            return False
        return all(g.has_edge(a, b) for a, b in zip(self, self[1:]))

    def reversed(self) -> "OrientedPath":
        return OrientedPath(self[::-1])

    def then(self, other: Sequence[int]) -> "OrientedPath":
        """Concatenate with a path starting at this path's last vertex."""
        if other[0] != self[-1]:
            raise GraphError(f"cannot join path ending at {self[-1]} with one starting at {other[0]}")
        return OrientedPath(tuple(self) + tuple(other[1:]))

    def lift(self, index: Sequence[int]) -> "OrientedPath":
        return OrientedPath(index[v] for v in self)


class Induced(NamedTuple):
    graph: Graph
    vertices: tuple[int, ...]  # new index -> old vertex
    index: dict[int, int]  # old vertex -> new index


class Contraction(NamedTuple):
    graph: Graph
    vertex: int  # the vertex that replaced the contracted set
    index: dict[int, int]  # old vertex -> new index (contracted ones -> vertex)
    vertices: tuple[int, ...]  # new index -> old vertex, -1 for the new vertex


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return len(g.adj[v])


def neighborhood_of_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    out: set[int] = set()
    for v in s:
        out.update(g.adj[v])
    return frozenset(out - s)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    block_cuts: tuple[frozenset[int], ...]  # cut vertices lying in each block

    def is_end_block(self, i: int) -> bool:
        return len(self.block_cuts[i]) <= 1

    @property
    def end_blocks(self) -> list[int]:
        return [i for i in range(len(self.blocks)) if self.is_end_block(i)]

    def blocks_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]

    def tree_adjacency(self) -> dict[int, frozenset[int]]:
        """Block index -> cut vertices it meets (the block-cut tree)."""
        return dict(enumerate(self.block_cuts))


def blocks(g: Graph) -> BlockDecomposition:
    """Blocks and cut vertices, component by component (Hopcroft-Tarjan).

    Isolated vertices come out as one-vertex blocks.
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    found: list[frozenset[int]] = []
    cut: set[int] = set()
    clock = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        if not g.adj[root]:
            found.append(frozenset((root,)))
            continue
        root_children = 0
        stack = [(root, -1, iter(g.adj[root]))]
        edge_stack: list[tuple[int, int]] = []
        while stack:
            v, parent, it = stack[-1]
            descended = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = clock
                    clock += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(g.adj[w])))
                    descended = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if descended:
                continue
            stack.pop()
            if not stack:
                break
            u = stack[-1][0]
            if low[v] < low[u]:
                low[u] = low[v]
            if low[v] >= disc[u]:
                if u != root:
                    cut.add(u)
                comp: set[int] = set()
                while True:
                    e = edge_stack.pop()
                    comp.update(e)
                    if e == (u, v):
                        break
                found.append(frozenset(comp))
        if root_children > 1:
            cut.add(root)
    found.sort(key=lambda b: sorted(b))
    cut_f = frozenset(cut)
    return BlockDecomposition(tuple(found), cut_f, tuple(b & cut_f for b in found))


def components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset[int]]:
    """Connected components of ``g - removed``, ordered by smallest vertex."""
    gone = set(removed)
    seen = set(gone)
    out = []
    for s in range(g.n):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(components(g)) == 1


def is_two_connected(g: Graph) -> bool:
    """At least three vertices, connected, and no cut vertex."""
    return g.n >= 3 and is_connected(g) and not blocks(g).cut_vertices


def contract_set(g: Graph, s: Iterable[int]) -> Contraction:
    """Replace ``s`` by one new vertex adjacent to ``N(s)``; it gets the last index."""
    s = frozenset(s)
    if not s:
        raise GraphError("cannot contract an empty set")
    for v in s:
        _check_vertex(g, v)
    if len(s) == g.n:
        raise GraphError("cannot contract the whole vertex set")
    keep = [v for v in range(g.n) if v not in s]
    index = {v: i for i, v in enumerate(keep)}
    new = len(keep)
    for v in s:
        index[v] = new
    edges = set()
    for u, v in g.edges():
        a, b = index[u], index[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    return Contraction(Graph.from_edges(new + 1, edges), new, index, tuple(keep) + (-1,))


def build_join(parts: Sequence[Iterable[int]], part_kinds: Sequence[str], n: int | None = None) -> Graph:
    """``V1 v V2 v ... v Vt``: consecutive parts completely joined.

    ``part_kinds[i]`` is ``"clique"`` or ``"independent"``.  Vertex labels are
    used as indices; ``n`` defaults to the largest label plus one.  Empty parts
    are dropped, so a trailing empty part changes nothing.
    """
    if len(parts) != len(part_kinds):
        raise GraphError("parts and part_kinds differ in length")
    sets = []
    for p, kind in zip(parts, part_kinds):
        if kind not in ("clique", "independent"):
            raise GraphError(f"unknown part kind {kind!r}")
        p = frozenset(p)
        if p:
            sets.append((p, kind))
    seen: set[int] = set()
    for p, _ in sets:
        if seen & p:
            raise GraphError(f"parts overlap on {sorted(seen & p)}")
        seen |= p
    if n is None:
        n = max(seen) + 1 if seen else 0
    edges = []
    for i, (p, kind) in enumerate(sets):
        if kind == "clique":
            q = sorted(p)
            edges.extend((a, b) for k, a in enumerate(q) for b in q[k + 1:])
        if i + 1 < len(sets):
            edges.extend((a, b) for a in p for b in sets[i + 1][0])
    return Graph.from_edges(n, edges)


def distance(g: Graph, u: int, v: int) -> float:
    """BFS distance, ``math.inf`` when ``u`` and ``v`` are disconnected."""
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in g.adj[a]:
            if b not in dist:
                if b == v:
                    return dist[a] + 1
                dist[b] = dist[a] + 1
                queue.append(b)
    return INF


def bfs_path(g: Graph, u: int, targets: Iterable[int], allowed: Iterable[int] | None = None) -> OrientedPath | None:
    """A shortest path from ``u`` to any vertex of ``targets`` inside ``allowed``.

    ``allowed`` (if given) restricts the internal vertices and the target; ``u``
    itself is always permitted.
    """
    targets = frozenset(targets)
    ok = None if allowed is None else frozenset(allowed)
    if u in targets:
        return OrientedPath((u,))
    prev = {u: -1}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        for b in g.adj[a]:
            if b in prev or (ok is not None and b not in ok):
                continue
            prev[b] = a
            if b in targets:
                out = [b]
                while prev[out[-1]] != -1:
                    out.append(prev[out[-1]])
                return OrientedPath(reversed(out))
            queue.append(b)
    return None


def induced(g: Graph, s: Iterable[int]) -> Induced:
    verts = tuple(sorted(set(s)))
    for v in verts:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(verts)}
    rows = tuple(tuple(index[w] for w in g.adj[v] if w in index) for v in verts)
    return Induced(Graph(len(verts), rows), verts, index)


def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)
