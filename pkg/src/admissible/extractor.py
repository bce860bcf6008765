"""Constructive k-admissible paths and cycles, with self-checking certificates.

The path finder is a hybrid.  Above a size threshold it applies structural
reductions lifted from the minimal-counterexample argument (cut-vertex
split, deleting an edge between roots, stripping two degree-2 roots, direct
core families, and contraction of a piece hanging off a core followed by the
Fact-1 combination).  Every recursive call re-checks its hypotheses, so a
reduction that does not apply is just skipped; at or below the threshold, or
when nothing applies, the exhaustive oracle answers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .config import BudgetExceeded, budgets
from .cores import Core, apply_condition_T, component_of, family_to_S, family_to_T, find_core
from .graph_core import (
    Graph,
    GraphError,
    OrientedPath,
    bfs_path,
    blocks,
    components,
    contract_set,
    induced,
    is_connected,
    is_two_connected,
    neighborhood_of_set,
)
from .graph_io import to_graph6
from .oracle import cycle_length_spectrum, is_admissible, path_length_spectrum, select_admissible_run
from .rooted import RootedGraph, delta, feasible_blocks, is_two_connected_rooted

__all__ = [
    "DEFAULT_THRESHOLD",
    "HypothesisError",
    "ExtractionFailure",
    "Fact1Error",
    "PathCertificate",
    "CycleCertificate",
    "Validation",
    "combine_fact1",
    "find_admissible_paths",
    "find_admissible_cycles",
    "validate",
    "format_certificate",
    "parse_certificate",
]

DEFAULT_THRESHOLD = 12


class HypothesisError(ValueError):
    """The instance does not satisfy the theorem's hypotheses."""


class Fact1Error(ValueError):
    """Inputs to the path-combination step violate its preconditions."""


class ExtractionFailure(RuntimeError):
    """No certificate was produced for a hypothesis-satisfying instance.

    ``instance`` is a replayable dump (graph6, roots, k).
    """

    def __init__(self, message: str, instance: dict):
        super().__init__(message)
        self.instance = instance


@dataclass(frozen=True)
class PathCertificate:
    host: Graph
    x: int
    y: int
    paths: tuple[OrientedPath, ...]
    k: int
    trace: tuple[str, ...] = field(default=(), compare=False)

    @property
    def lengths(self) -> list[int]:
        return [p.length for p in self.paths]


@dataclass(frozen=True)
class CycleCertificate:
    host: Graph
    cycles: tuple[tuple[int, ...], ...]
    k: int
    trace: tuple[str, ...] = field(default=(), compare=False)

    @property
    def lengths(self) -> list[int]:
        return [len(c) for c in self.cycles]


@dataclass
class Validation:
    problems: list[str]

    @property
    def ok(self) -> bool:
        return not self.problems

    def __bool__(self) -> bool:
        return self.ok


def validate(cert: PathCertificate | CycleCertificate) -> Validation:
    """Re-check every certificate invariant against the host graph."""
    g = cert.host
    problems = []
    if isinstance(cert, PathCertificate):
        items = cert.paths
        for i, p in enumerate(items):
            p = OrientedPath(p)
            if not p.is_valid_in(g):
                problems.append(f"path {i} is not a simple path of the host: {list(p)}")
            if len(p) == 0 or p[0] != cert.x or p[-1] != cert.y:
                problems.append(f"path {i} does not run from {cert.x} to {cert.y}")
        lengths = [len(p) - 1 for p in items]
    else:
        items = cert.cycles
        for i, c in enumerate(items):
            if len(c) < 3 or len(set(c)) != len(c):
                problems.append(f"cycle {i} is not simple: {list(c)}")
            elif any(not 0 <= v < g.n for v in c) or not all(
                    g.has_edge(c[j], c[(j + 1) % len(c)]) for j in range(len(c))):
                problems.append(f"cycle {i} uses a non-edge: {list(c)}")
        lengths = [len(c) for c in items]
        if lengths and lengths[0] < 3:
            problems.append("first cycle shorter than 3")
    if len(items) != cert.k:
        problems.append(f"expected {cert.k} items, got {len(items)}")
    if items and not is_admissible(lengths):
        problems.append(f"lengths {lengths} are not admissible")
    return Validation(problems)


def _check_family(paths: Sequence[OrientedPath], start: int, end_in: Iterable[int], what: str):
    ends = set(end_in)
    for p in paths:
        if p[0] != start or p[-1] not in ends:
            raise Fact1Error(f"{what}: path {list(p)} has wrong end vertices")
    if not is_admissible([p.length for p in paths], semi=True):
        raise Fact1Error(f"{what}: lengths {[p.length for p in paths]} are not semi-admissible")


def combine_fact1(g: Graph, x: int, y: int, u_set: Iterable[int], uy_paths: Sequence[Sequence[int]],
                  xu_path_table: Sequence[Sequence[Sequence[int]]]) -> PathCertificate:
    """Glue ``(x, u_i)``-paths onto ``(u_i, y)``-paths to get ``s + t - 1`` admissible paths.

    ``uy_paths[i]`` runs from ``u_i`` to ``y`` and meets ``U`` only in
    ``u_i``; row ``i`` of ``xu_path_table`` holds ``t`` paths from ``x`` to
    ``u_i`` avoiding the rest of ``uy_paths[i]``, with equal lengths down each
    column.  The gluing schedule is found by scanning the ``s * t`` candidate
    lengths for an admissible run.
    """
    U = frozenset(u_set)
    P = [OrientedPath(p) for p in uy_paths]
    Q = [[OrientedPath(q) for q in row] for row in xu_path_table]
    s = len(P)
    if s == 0 or len(Q) != s:
        raise Fact1Error(f"need one table row per (U, y)-path, got {len(Q)} rows for {s} paths")
    t = len(Q[0])
    if t == 0 or any(len(row) != t for row in Q):
        raise Fact1Error("table rows must all hold the same positive number of paths")
    if x in U or y in U:
        raise Fact1Error("U must avoid x and y")
    for p in P:
        if p[-1] != y or p[0] not in U or len(U & set(p)) != 1:
            raise Fact1Error(f"{list(p)} is not a (U, y)-path with one U vertex")
    if not is_admissible([p.length for p in P], semi=True):
        raise Fact1Error(f"(U, y)-path lengths {[p.length for p in P]} are not semi-admissible")
    for i, row in enumerate(Q):
        _check_family(row, x, [P[i][0]], f"row {i}")
    for j in range(t):
        col = {Q[i][j].length for i in range(s)}
        if len(col) != 1:
            raise Fact1Error(f"column {j} lengths differ across rows: {sorted(col)}")
    by_length: dict[int, tuple[int, int]] = {}
    for i in range(s):
        for j in range(t):
            by_length.setdefault(Q[i][j].length + P[i].length, (i, j))
    run = select_admissible_run(by_length, s + t - 1, 2)
    if run is None:
        raise Fact1Error(f"no admissible run of {s + t - 1} among lengths {sorted(by_length)}")
    out = []
    for L in run:
        i, j = by_length[L]
        walk = Q[i][j].then(P[i])
        if len(set(walk)) != len(walk):
            raise Fact1Error(f"Q[{i}][{j}] + P[{i}] repeats a vertex; disjointness precondition violated")
        if not walk.is_valid_in(g):
            raise Fact1Error(f"Q[{i}][{j}] + P[{i}] is not a path of the host graph")
        out.append(walk)
    return PathCertificate(g, x, y, tuple(out), s + t - 1, ("fact1",))


# ---------------------------------------------------------------- path finder


def _best_z(g: Graph, x: int, y: int) -> Optional[int]:
    rest = [v for v in range(g.n) if v not in (x, y)]
    if not rest:
        return None
    return min(rest, key=lambda v: (len(g.adj[v]), v))


def _hyp(g: Graph, x: int, y: int, k: int, z: Optional[int] = None) -> Optional[tuple[int, Optional[int]]]:
    """If ``(g, x, y; z)`` satisfies the hypotheses for k, return the z used.

    ``z=None`` lets the exempt vertex be chosen freely (the minimum-degree
    non-root, which maximizes the degree bound).  Returns ``None`` when the
    hypotheses fail.
    """
    if x == y or not 0 <= x < g.n or not 0 <= y < g.n:
        return None
    zz = _best_z(g, x, y) if z is None else z
    r = RootedGraph(g, x, y, zz)
    if not is_two_connected_rooted(r) or delta(r) < k + 1:
        return None
    return (k, zz)


class _Solver:
    def __init__(self, threshold: int):
        self.threshold = threshold
        self.oracle_n = budgets().oracle_n
        self.trace: list[str] = []

    def note(self, depth: int, what: str):
        self.trace.append(f"{'  ' * depth}{what}")

    def solve(self, g: Graph, x: int, y: int, k: int, z: Optional[int], depth: int = 0) -> list[OrientedPath]:
        if k == 1:
            self.note(depth, f"k1-path n={g.n}")
            return [self._one_path(g, x, y)]
        if g.n <= self.threshold:
            self.note(depth, f"oracle n={g.n}")
            return self._oracle(g, x, y, k)
        for strategy in (self._cut_split, self._edge_delete, self._cores_both_ways):
            got = strategy(g, x, y, k, z, depth)
            if got is not None:
                self._check(g, x, y, k, got, strategy.__name__)
                return got
        if g.n <= self.oracle_n:
            self.note(depth, f"oracle-fallback n={g.n}")
            return self._oracle(g, x, y, k)
        raise _NoStrategy(f"no reduction applies and n={g.n} exceeds the oracle limit")

    # -- leaves

    def _one_path(self, g, x, y):
        if g.has_edge(x, y):
            p = bfs_path(g.without_edges([(x, y)]), x, [y])
        else:
            p = bfs_path(g, x, [y])
        if p is None or p.length < 2:
            raise _NoStrategy("no (x, y)-path of length >= 2")
        return p

    def _oracle(self, g, x, y, k):
        spec = path_length_spectrum(g, x, y)
        run = select_admissible_run(spec.lengths, k, 2)
        if run is None:
            raise _NoStrategy(f"oracle: path lengths {list(spec.lengths)} hold no {k}-term admissible run")
        return [spec.witnesses[L] for L in run]

    def _check(self, g, x, y, k, paths, name):
        cert = PathCertificate(g, x, y, tuple(paths), k)
        v = validate(cert)
        if not v:
            raise _BadReduction(f"{name} produced an invalid certificate: {v.problems}")

    def _sub(self, g, verts, x, y, k, depth, tag) -> Optional[list[OrientedPath]]:
        """Solve on ``g[verts]`` with free exempt vertex; paths in host labels."""
        sub = induced(g, verts)
        sx, sy = sub.index[x], sub.index[y]
        h = _hyp(sub.graph, sx, sy, k)
        if h is None:
            return None
        self.note(depth, f"{tag} -> n={sub.graph.n} k={k}")
        paths = self.solve(sub.graph, sx, sy, k, h[1], depth + 1)
        return [p.lift(sub.vertices) for p in paths]

    # -- reductions

    def _cut_split(self, g, x, y, k, z, depth):
        cuts = sorted(blocks(g).cut_vertices)
        if not cuts:
            return None
        c = cuts[0]
        comps = components(g, [c])
        if len(comps) != 2:
            return None
        cx = next((cc for cc in comps if x in cc), None)
        cy = next((cc for cc in comps if y in cc), None)
        if cx is None or cy is None or cx == cy:
            return None
        if cx - {x, z}:
            paths = self._sub(g, cx | {c}, x, c, k, depth, f"cut-split at {c}")
            if paths is not None:
                tail = bfs_path(g, c, [y], cy | {c})
                return [p.then(tail) for p in paths]
        if cy - {y, z}:
            paths = self._sub(g, cy | {c}, y, c, k, depth, f"cut-split at {c} (y side)")
            if paths is not None:
                head = bfs_path(g, x, [c], cx | {c})
                return [head.then(p.reversed()) for p in paths]
        return None

    def _edge_delete(self, g, x, y, k, z, depth):
        pairs = [(x, y)]
        if z is not None and z not in (x, y):
            pairs += [(x, z), (y, z)]
        for a, b in pairs:
            if not g.has_edge(a, b):
                continue
            h = g.without_edges([(a, b)])
            got = _hyp(h, x, y, k, z)
            if got is not None:
                self.note(depth, f"edge-delete {a}{b}")
                return self.solve(h, x, y, k, z, depth + 1)
            if b == z:
                got = self._truncate_chain(h, a, b, x, y, k, depth)
                if got is not None:
                    return got
        return None

    def _truncate_chain(self, h, root, v, x, y, k, depth):
        """After deleting ``root v``: keep the blocks from ``root``'s end up to ``y``."""
        chain = _block_chain(h, root)
        if chain is None:
            return None
        bl, cuts = chain
        if v not in bl[-1] or v in cuts:
            return None
        other = y if root == x else x
        keep: set[int] = set()
        for i, b in enumerate(bl):
            keep |= b
            lower = cuts[i - 1] if i > 0 else None
            if other in b and other != lower:
                if i == len(bl) - 1:
                    return None
                paths = self._sub(h, keep, root, other, k, depth, f"truncate-chain at {cuts[i]}")
                if paths is None or root == x:
                    return paths
                return [p.reversed() for p in paths]
        return None

    def _cores_both_ways(self, g, x, y, k, z, depth):
        got = self._core_strategies(g, x, y, k, z, depth)
        if got is not None:
            return got
        got = self._core_strategies(g, y, x, k, z, depth)
        if got is not None:
            return [p.reversed() for p in got]
        return None

    def _core_strategies(self, g, x, y, k, z, depth):
        core = find_core(g, x, y)
        if core is None:
            return None
        if core.core_type == 3:
            core = apply_condition_T(g, core, y, z)
        cy = component_of(g, core.vertices, y)
        for step in (self._core_direct, self._root_strip, self._contract_pieces):
            got = step(g, x, y, k, z, core, cy, depth)
            if got is not None:
                return got
        return None

    def _core_direct(self, g, x, y, k, z, core, cy, depth):
        """A core family plus one exit route into ``y``'s component."""
        nc = neighborhood_of_set(g, cy)
        for side, fam in (("T", family_to_T), ("S", family_to_S)):
            attach = sorted(nc & (core.t_set if side == "T" else core.s_set))
            for a in attach:
                family = fam(core, a)
                if len(family) < k:
                    break
                route = bfs_path(g, a, [y], cy | {a})
                paths = [q.then(route) for q in family[:k]]
                if is_admissible([p.length for p in paths]):
                    self.note(depth, f"core{core.core_type}{'b' if core.flat else ''} direct via {side}")
                    return paths
        return None

    def _root_strip(self, g, x, y, k, z, core, cy, depth):
        nx_, ny = g.nbrs(x), g.nbrs(y)
        if nx_ != ny or len(nx_) != 2:
            return None
        a, b = sorted(nx_)
        rest = [v for v in range(g.n) if v not in (x, y)]
        paths = self._sub(g, rest, a, b, k, depth, "root-strip")
        if paths is None:
            return None
        return [OrientedPath((x,) + tuple(p) + (y,)) for p in paths]

    def _contract_pieces(self, g, x, y, k, z, core, cy, depth):
        H = core.vertices
        pieces = []  # (piece vertices W, exit vertex r, route r -> y, verts to keep out of Q)
        if cy == frozenset((y,)):
            for d in components(g, H):
                if y in d or not (d - {z}):
                    continue
                nd = neighborhood_of_set(g, d)
                for r in sorted(nd & g.nbrs(y) & H):
                    if r != core.x:
                        pieces.append((d, r, OrientedPath((r, y)), frozenset((r,)), "D"))
        else:
            sub = induced(g, cy)
            zz = sub.index.get(z) if z is not None else None
            for fb in feasible_blocks(sub.graph, sub.index[y], zz):
                blk = frozenset(sub.vertices[v] for v in fb.block)
                b = sub.vertices[fb.b]
                w = blk - {b}
                route = bfs_path(g, b, [y], (cy - blk) | {b})
                if route is None:
                    continue
                pieces.append((w, b, route, frozenset(), "B"))
        for w, r, route, avoid, tag in pieces:
            nw = neighborhood_of_set(g, w)
            for side in ("T", "S"):
                A = sorted(nw & (core.t_set if side == "T" else core.s_set) - avoid - {r})
                if not A:
                    continue
                got = self._contract_one(g, x, y, k, core, w, r, route, avoid, A, side, tag, depth)
                if got is not None:
                    return got
            if tag == "B":
                got = self._single_attachment(g, x, y, k, core, w, r, route, nw & H, depth)
                if got is not None:
                    return got
        return None

    def _contract_one(self, g, x, y, k, core, w, r, route, avoid, A, side, tag, depth):
        fam = family_to_T if side == "T" else family_to_S
        rows = {a: fam(core, a, avoid) for a in A}
        q = min(len(v) for v in rows.values())
        if q == 0:
            return None
        m = max(1, k - q + 1)
        verts = set(w) | set(A) | {r}
        sub = induced(g, verts)
        con = contract_set(sub.graph, [sub.index[a] for a in A])
        star, rr = con.vertex, con.index[sub.index[r]]
        if _hyp(con.graph, star, rr, m) is None:
            return None
        self.note(depth, f"core{core.core_type}{'b' if core.flat else ''} contract {tag}/{side} "
                         f"|A|={len(A)} -> n={con.graph.n} k={m}")
        zz = _hyp(con.graph, star, rr, m)[1]
        sub_paths = self.solve(con.graph, star, rr, m, zz, depth + 1)
        P = []
        for p in sub_paths:
            body = [sub.vertices[con.vertices[v]] for v in p[1:]]
            a = min(a for a in A if g.has_edge(a, body[0]))
            P.append(OrientedPath([a] + body).then(route))
        table = [rows[p[0]][:q] for p in P]
        cert = combine_fact1(g, x, y, A, P, table)
        return list(cert.paths[:k])

    def _single_attachment(self, g, x, y, k, core, w, b, route, touch, depth):
        for v in sorted(touch):
            head = bfs_path(g, x, [v], core.vertices)
            if head is None:
                continue
            paths = self._sub(g, set(w) | {b, v}, v, b, k, depth, f"attach at {v}")
            if paths is not None:
                return [head.then(p).then(route) for p in paths]
        return None


class _NoStrategy(RuntimeError):
    pass


class _BadReduction(RuntimeError):
    pass


def _block_chain(g: Graph, start: int):
    """Blocks in path order from the end-block holding ``start`` as a non-cut vertex."""
    dec = blocks(g)
    if not is_connected(g):
        return None
    first = [i for i in dec.end_blocks if start in dec.blocks[i] and start not in dec.cut_vertices]
    if len(first) != 1:
        return None
    order = [first[0]]
    cuts: list[int] = []
    used = {first[0]}
    while True:
        cur = order[-1]
        nxt_cuts = [c for c in dec.block_cuts[cur] if c not in cuts]
        if not nxt_cuts:
            break
        if len(nxt_cuts) != 1:
            return None
        c = nxt_cuts[0]
        nxt = [i for i in dec.blocks_of(c) if i not in used]
        if len(nxt) != 1:
            return None
        cuts.append(c)
        order.append(nxt[0])
        used.add(nxt[0])
    if len(order) != len(dec.blocks):
        return None
    return [dec.blocks[i] for i in order], cuts


def _dump(g: Graph, x, y, z, k) -> dict:
    return {"graph6": to_graph6(g), "x": x, "y": y, "z": z, "k": k}


def find_admissible_paths(r: RootedGraph, k: int, threshold: int = DEFAULT_THRESHOLD) -> PathCertificate:
    """k admissible ``(x, y)``-paths of a 2-connected rooted graph with ``δ >= k+1``."""
    if k < 1:
        raise HypothesisError("k must be positive")
    if not is_two_connected_rooted(r):
        raise HypothesisError("(G, x, y) is not a 2-connected rooted graph")
    d = delta(r)
    if d < k + 1:
        raise HypothesisError(f"delta(G, x, y; z) = {d} < k + 1 = {k + 1}")
    solver = _Solver(threshold)
    try:
        paths = solver.solve(r.g, r.x, r.y, k, r.z)
    except (_NoStrategy, _BadReduction, BudgetExceeded, Fact1Error, GraphError) as exc:
        raise ExtractionFailure(str(exc), _dump(r.g, r.x, r.y, r.z, k)) from exc
    cert = PathCertificate(r.g, r.x, r.y, tuple(paths), k, tuple(solver.trace))
    v = validate(cert)
    if not v:
        raise ExtractionFailure(f"invalid certificate: {v.problems}", _dump(r.g, r.x, r.y, r.z, k))
    return cert


def _cycles_in_block(g: Graph, verts, a: int, c: Optional[int], k: int, threshold: int, trace: list):
    """Close k admissible ``(a, y)``-paths of ``g[verts]`` with the edge ``ya``."""
    sub = induced(g, verts)
    sa = sub.index[a]
    sc = sub.index.get(c) if c is not None else None
    for sy in sub.graph.adj[sa]:
        r = RootedGraph(sub.graph, sa, sy, sc if sc not in (sa, sy) else None)
        if sc in (sa, sy):
            r = RootedGraph(sub.graph, sa, sy, None)
        if not is_two_connected_rooted(r) or delta(r) < k + 1:
            continue
        cert = find_admissible_paths(r, k, threshold)
        trace.append(f"block n={sub.graph.n} roots ({sub.vertices[sa]}, {sub.vertices[sy]})")
        trace.extend("  " + t for t in cert.trace)
        return [tuple(sub.vertices[v] for v in p) for p in cert.paths]
    return None


def find_admissible_cycles(g: Graph, k: int, threshold: int = DEFAULT_THRESHOLD) -> CycleCertificate:
    """k admissible cycles in a connected graph with at most two vertices of degree < k+1."""
    if k < 2:
        raise HypothesisError("k must be at least 2")
    if g.n < 3 or not is_connected(g):
        raise HypothesisError("graph must be connected of order at least three")
    low = [v for v in range(g.n) if len(g.adj[v]) < k + 1]
    if len(low) > 2:
        raise HypothesisError(f"{len(low)} vertices have degree < {k + 1}")
    trace: list[str] = []
    dump = {"graph6": to_graph6(g), "x": None, "y": None, "z": None, "k": k}
    try:
        if g.n <= threshold:
            spec = cycle_length_spectrum(g)
            run = select_admissible_run(spec.lengths, k, 3)
            if run is None:
                raise ExtractionFailure(f"cycle lengths {list(spec.lengths)} hold no {k}-term run", dump)
            trace.append(f"cycle-oracle n={g.n}")
            cycles = [spec.witnesses[L] for L in run]
        else:
            cycles = _construct_cycles(g, k, low, threshold, trace)
    except (BudgetExceeded, HypothesisError) as exc:
        raise ExtractionFailure(str(exc), dump) from exc
    if cycles is None:
        raise ExtractionFailure("no block admits the path construction", dump)
    cert = CycleCertificate(g, tuple(tuple(c) for c in cycles), k, tuple(trace))
    v = validate(cert)
    if not v:
        raise ExtractionFailure(f"invalid certificate: {v.problems}", dump)
    return cert


def _construct_cycles(g, k, low, threshold, trace):
    fill = [v for v in range(g.n) if v not in low]
    x, z = (low + fill)[:2]
    if is_two_connected(g):
        return _cycles_in_block(g, range(g.n), x, z, k, threshold, trace)
    dec = blocks(g)
    for i in dec.end_blocks:
        blk = dec.blocks[i]
        (b,) = dec.block_cuts[i]
        inner = blk - {b}
        marked = inner & {x, z}
        if len(blk) >= 3 and len(marked) <= 1:
            xp = min(marked) if marked else min(inner)
            trace.append(f"end-block at cut {b}")
            return _cycles_in_block(g, blk, xp, b, k, threshold, trace)
    for blk, cuts in zip(dec.blocks, dec.block_cuts):
        if len(cuts) == 2 and len(blk) >= 3:
            b1, b2 = sorted(cuts)
            trace.append(f"inner block at cuts {b1}, {b2}")
            return _cycles_in_block(g, blk, b1, b2, k, threshold, trace)
    return None


# ------------------------------------------------------------- serialization


def format_certificate(cert: PathCertificate | CycleCertificate) -> str:
    """Header ``k x y`` (paths) or ``k`` (cycles), then one item per line."""
    if isinstance(cert, PathCertificate):
        lines = [f"{cert.k} {cert.x} {cert.y}"] + [" ".join(map(str, p)) for p in cert.paths]
    else:
        lines = [f"{cert.k}"] + [" ".join(map(str, c)) for c in cert.cycles]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, host: Graph) -> PathCertificate | CycleCertificate:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ValueError("empty certificate")
    head = [int(v) for v in rows[0]]
    body = [tuple(int(v) for v in r) for r in rows[1:]]
    if len(head) == 3:
        k, x, y = head
        return PathCertificate(host, x, y, tuple(OrientedPath(p) for p in body), k)
    if len(head) == 1:
        return CycleCertificate(host, tuple(body), head[0])
    raise ValueError(f"bad certificate header {rows[0]}")
