"""ℓ-cores of types 1, 2 and 3, their choice rules, and the path builders.

Layouts (``v`` is a complete join between consecutive layers):

* type 1: ``x v T``, ``T`` a clique of order ``ℓ+1``, ``ℓ >= 1``.
* type 2: ``x v S v T``, ``S`` independent of order 2, ``T`` a clique of
  order ``ℓ >= 2``.
* type 3: ``x v T v S``, both independent, ``|S| = ℓ >= 0`` and
  ``|T| >= max(ℓ+1, 2)``.

A core "with respect to (x, y)" additionally avoids ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .graph_core import Graph, GraphError, OrientedPath, components, neighborhood_of_set

__all__ = [
    "Core",
    "CoreError",
    "SemiAdmissibleFamily",
    "is_valid_core",
    "find_core",
    "all_cores",
    "apply_condition_T",
    "paths_x_to_S",
    "paths_x_to_T",
    "family_to_T",
    "family_to_S",
    "component_of",
]


class CoreError(ValueError):
    """A core operation was called outside its preconditions."""


@dataclass(frozen=True)
class Core:
    core_type: int
    ell: int
    x: int
    s_set: frozenset[int]
    t_set: frozenset[int]
    flat: bool = False
    t0: Optional[int] = None
    s0: Optional[int] = None
    rule: str = field(default="natural", compare=False)  # natural | M1 | M2

    @property
    def vertices(self) -> frozenset[int]:
        return self.s_set | self.t_set | {self.x}

    @property
    def S(self) -> list[int]:
        return sorted(self.s_set)

    @property
    def T(self) -> list[int]:
        return sorted(self.t_set)

    def key(self) -> tuple:
        return (tuple(self.S), tuple(self.T))


@dataclass(frozen=True)
class SemiAdmissibleFamily:
    paths: tuple[OrientedPath, ...]
    shared_source: int
    targets: tuple[int, ...]

    @property
    def lengths(self) -> list[int]:
        return [p.length for p in self.paths]

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self) -> Iterator[OrientedPath]:
        return iter(self.paths)


def _is_clique(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return all(g.has_edge(a, b) for a, b in combinations(vs, 2))


def _is_independent(g: Graph, vs: Iterable[int]) -> bool:
    vs = list(vs)
    return not any(g.has_edge(a, b) for a, b in combinations(vs, 2))


def _complete(g: Graph, a: Iterable[int], b: Iterable[int]) -> bool:
    b = list(b)
    return all(g.has_edge(u, v) for u in a for v in b)


def is_valid_core(g: Graph, core: Core, y: Optional[int] = None) -> bool:
    """Direct edge-query check of the type's defining structure."""
    x, S, T, ell = core.x, core.s_set, core.t_set, core.ell
    if x in S or x in T or S & T:
        return False
    if y is not None and y in core.vertices:
        return False
    if core.core_type == 1:
        return (ell >= 1 and not S and len(T) == ell + 1 and _is_clique(g, T)
                and _complete(g, [x], T))
    if core.core_type == 2:
        return (ell >= 2 and len(S) == 2 and _is_independent(g, S) and len(T) == ell
                and _is_clique(g, T) and _complete(g, [x], S) and _complete(g, S, T))
    if core.core_type == 3:
        return (ell >= 0 and len(S) == ell and len(T) >= max(ell + 1, 2)
                and _is_independent(g, S) and _is_independent(g, T)
                and _complete(g, [x], T) and _complete(g, T, S))
    return False


def _maximal_cliques(g: Graph, cand: frozenset[int]) -> Iterator[frozenset[int]]:
    """Bron-Kerbosch with pivoting, restricted to ``cand``."""

    def expand(r: frozenset[int], p: set[int], xs: set[int]):
        if not p and not xs:
            yield r
            return
        pivot = max(p | xs, key=lambda u: len(p & g.nbrs(u)))
        for v in sorted(p - g.nbrs(pivot)):
            nv = g.nbrs(v)
            yield from expand(r | {v}, p & nv, xs & nv)
            p.remove(v)
            xs.add(v)

    yield from expand(frozenset(), set(cand), set())


def _best_clique(g: Graph, cand: frozenset[int]) -> frozenset[int] | None:
    best = None
    for c in _maximal_cliques(g, cand):
        if best is None or len(c) > len(best) or (len(c) == len(best) and sorted(c) < sorted(best)):
            best = c
    return best


def _type1(g: Graph, x: int, y: int) -> Core | None:
    cand = g.nbrs(x) - {y}
    best = _best_clique(g, cand)
    if best is None or len(best) < 2:
        return None
    return Core(1, len(best) - 1, x, frozenset(), frozenset(best))


def _type2(g: Graph, x: int, y: int) -> Core | None:
    cand = sorted(g.nbrs(x) - {y})
    best = None
    for a, b in combinations(cand, 2):
        if g.has_edge(a, b):
            continue
        common = (g.nbrs(a) & g.nbrs(b)) - {x, y}
        t = _best_clique(g, common)
        if t is None or len(t) < 2:
            continue
        c = Core(2, len(t), x, frozenset((a, b)), frozenset(t))
        if best is None or len(t) > best.ell or (len(t) == best.ell and c.key() < best.key()):
            best = c
    return best


def _type3(g: Graph, x: int, y: int) -> Core | None:
    """Largest ``|S|``, then largest ``|T|``, then lexicographic ``(S, T)``.

    Exact branch and bound over independent ``S``; ``T`` is then forced to be
    every independent-compatible common neighbor in ``N(x) - y``.  When the
    candidate ``T`` pool is not independent the pool is searched as well.
    """
    pool = g.nbrs(x) - {y}
    if len(pool) < 2:
        return None
    pool_indep = _is_independent(g, pool)
    best: list[Core | None] = [None]

    def consider(S: frozenset[int], tpool: frozenset[int]):
        tpool = tpool - S
        if pool_indep:
            tsets = [tpool]
        else:
            tsets = _max_independent_sets(g, tpool)
        for T in tsets:
            if len(T) < max(len(S) + 1, 2):
                continue
            c = Core(3, len(S), x, S, frozenset(T))
            b = best[0]
            if b is None or (c.ell, len(c.t_set)) > (b.ell, len(b.t_set)) or (
                    (c.ell, len(c.t_set)) == (b.ell, len(b.t_set)) and c.key() < b.key()):
                best[0] = c

    others = sorted(v for v in range(g.n) if v not in (x, y) and len(g.nbrs(v) & pool) >= 2)

    def search(i: int, S: frozenset[int], tpool: frozenset[int]):
        consider(S, tpool)
        for j in range(i, len(others)):
            v = others[j]
            if v in S or any(g.has_edge(v, s) for s in S):
                continue
            nt = (tpool & g.nbrs(v)) - {v}
            if len(nt) < max(len(S) + 2, 2):
                continue
            search(j + 1, S | {v}, nt)

    search(0, frozenset(), frozenset(pool))
    return best[0]


def _max_independent_sets(g: Graph, cand: frozenset[int]) -> list[frozenset[int]]:
    """All maximum independent subsets of ``cand`` (complement cliques)."""
    comp_adj = {v: frozenset(u for u in cand if u != v and not g.has_edge(u, v)) for v in cand}
    out: list[frozenset[int]] = []

    def expand(r, p, xs):
        if not p and not xs:
            out.append(frozenset(r))
            return
        pivot = max(p | xs, key=lambda u: len(p & comp_adj[u]))
        for v in sorted(p - comp_adj[pivot]):
            expand(r | {v}, p & comp_adj[v], xs & comp_adj[v])
            p = p - {v}
            xs = xs | {v}

    if cand:
        expand(frozenset(), frozenset(cand), frozenset())
    if not out:
        return []
    top = max(len(s) for s in out)
    return [s for s in out if len(s) == top]


def find_core(g: Graph, x: int, y: int) -> Core | None:
    """The core with respect to ``(x, y)`` chosen by the selection rules.

    Smallest type number first.  Within a type: largest ``|T|`` (types 1 and
    2), or largest ``|S|`` then largest ``|T|`` (type 3).  Remaining ties go
    to the lexicographically smallest ``(S, T)``.
    """
    for finder in (_type1, _type2, _type3):
        c = finder(g, x, y)
        if c is not None:
            return c
    return None


def all_cores(g: Graph, x: int, y: int) -> list[Core]:
    """Every core with respect to ``(x, y)`` by plain subset enumeration.

    Exponential; meant as an oracle for small graphs only.
    """
    rest = [v for v in range(g.n) if v not in (x, y)]
    nx_ = sorted(g.nbrs(x) - {y})
    out = []
    for r in range(2, len(nx_) + 1):
        for T in combinations(nx_, r):
            if _is_clique(g, T):
                out.append(Core(1, r - 1, x, frozenset(), frozenset(T)))
    for S in combinations(nx_, 2):
        if g.has_edge(*S):
            continue
        others = [v for v in rest if v not in S]
        for r in range(2, len(others) + 1):
            for T in combinations(others, r):
                if _is_clique(g, T) and _complete(g, S, T):
                    out.append(Core(2, r, x, frozenset(S), frozenset(T)))
    for r in range(2, len(nx_) + 1):
        for T in combinations(nx_, r):
            if not _is_independent(g, T):
                continue
            others = [v for v in rest if v not in T]
            for ell in range(0, r):
                for S in combinations(others, ell):
                    if _is_independent(g, S) and _complete(g, T, S):
                        out.append(Core(3, ell, x, frozenset(S), frozenset(T)))
    return out


def component_of(g: Graph, removed: Iterable[int], v: int) -> frozenset[int]:
    for c in components(g, removed):
        if v in c:
            return c
    raise GraphError(f"vertex {v} was removed")


def apply_condition_T(g: Graph, core: Core, y: int, z: Optional[int]) -> Core:
    """Flatten a type-3 core when condition (T) holds, else mark it natural.

    (T): ``|T| >= 3``, the component of ``y`` in ``G - V(H)`` is ``{y}``,
    ``N(x) = N(y) = T``, and some other component ``D0`` with a vertex besides
    ``z`` touches ``T``.  Then ``t0`` (smallest such ``T`` vertex) leaves
    ``T``; if ``|T| = |S| + 1`` the smallest ``s0`` also leaves ``S`` and ``ℓ``
    drops by one.
    """
    if core.core_type != 3:
        raise CoreError("condition (T) applies to type-3 cores only")
    natural = replace(core, flat=False, t0=None, s0=None, rule="natural")
    T = core.t_set
    if len(T) < 3 or g.nbrs(core.x) != T or g.nbrs(y) != T:
        return natural
    comps = components(g, core.vertices)
    if not any(c == frozenset((y,)) for c in comps):
        return natural
    touching = set()
    for d in comps:
        if y in d or not (d - {z}):
            continue
        touching |= neighborhood_of_set(g, d) & T
    if not touching:
        return natural
    t0 = min(touching)
    if len(T) == len(core.s_set) + 1:
        s0 = min(core.s_set)
        return Core(3, core.ell - 1, core.x, core.s_set - {s0}, T - {t0}, True, t0, s0, "M1")
    return Core(3, core.ell, core.x, core.s_set, T - {t0}, True, t0, None, "M2")


def _t_walks(x: int, top: list[int], bottom: list[int], t: int, count: int) -> list[OrientedPath]:
    """Type-3 style zigzags ``x t1 s1 ... tj sj t`` for ``j < count``."""
    out = []
    for j in range(count):
        seq = [x]
        for i in range(j):
            seq += [top[i], bottom[i]]
        seq.append(t)
        out.append(OrientedPath(seq))
    return out


def _s_walks(x: int, top: list[int], bottom: list[int], s: int, count: int) -> list[OrientedPath]:
    """Zigzags ``x t1 s1 ... t(j-1) s(j-1) tj s`` of lengths 2, 4, ..."""
    out = []
    for j in range(1, count + 1):
        seq = [x]
        for i in range(j - 1):
            seq += [top[i], bottom[i]]
        seq += [top[j - 1], s]
        out.append(OrientedPath(seq))
    return out


def family_to_T(core: Core, t: int, avoid: Iterable[int] = ()) -> list[OrientedPath]:
    """Longest semi-admissible ``(x, t)`` family inside ``H - avoid``.

    With nothing avoided this is exactly the closed-form family for the core's
    type; avoiding vertices shrinks it to the family of the sub-core left over.
    """
    avoid = frozenset(avoid)
    if t not in core.t_set or t in avoid or core.x in avoid:
        raise CoreError(f"target {t} is not an available T vertex")
    x = core.x
    others = [v for v in core.T if v != t and v not in avoid]
    S = [v for v in core.S if v not in avoid]
    if core.core_type == 1:
        return [OrientedPath([x] + others[:j] + [t]) for j in range(len(others) + 1)]
    if core.core_type == 2:
        if not S:
            return []
        s1 = S[0]
        out = [OrientedPath([x, s1] + others[:j] + [t]) for j in range(len(others) + 1)]
        if len(S) == 2 and others:
            out.append(OrientedPath([x, s1] + others + [S[1], t]))
        return out
    return _t_walks(x, others, S, t, min(len(S), len(others)) + 1)


def family_to_S(core: Core, s: int, avoid: Iterable[int] = ()) -> list[OrientedPath]:
    """Longest admissible ``(x, s)`` family inside ``H - avoid`` (types 2, 3)."""
    avoid = frozenset(avoid)
    if s not in core.s_set or s in avoid or core.x in avoid:
        raise CoreError(f"target {s} is not an available S vertex")
    x = core.x
    T = [v for v in core.T if v not in avoid]
    if core.core_type == 2:
        other = [v for v in core.S if v != s and v not in avoid]
        if not other:
            return []
        return [OrientedPath([x, other[0]] + T[:j] + [s]) for j in range(1, len(T) + 1)]
    if core.core_type == 3:
        rest = [v for v in core.S if v != s and v not in avoid]
        return _s_walks(x, T, rest, s, min(len(T), len(rest) + 1))
    raise CoreError("type-1 cores have no S side")


def paths_x_to_S(core: Core, s: int, forbidden_t: Optional[int] = None) -> list[OrientedPath]:
    """ℓ admissible ``(x, s)``-paths: lengths ``3..ℓ+2`` (type 2) or ``2, 4, ..., 2ℓ`` in ``H - t`` (type 3)."""
    if core.core_type == 1:
        raise CoreError("type-1 cores have empty S")
    if s not in core.s_set:
        raise CoreError(f"{s} is not in S")
    avoid = ()
    if forbidden_t is not None:
        if core.core_type != 3 or forbidden_t not in core.t_set:
            raise CoreError("forbidden_t must be a T vertex of a type-3 core")
        avoid = (forbidden_t,)
    out = family_to_S(core, s, avoid)[:core.ell]
    if len(out) != core.ell:
        raise CoreError(f"core too small for {core.ell} paths")
    return out


def paths_x_to_T(core: Core, t: int, forbidden_t: Optional[int] = None) -> SemiAdmissibleFamily:
    """ℓ+1 semi-admissible ``(x, t)``-paths.

    Lengths ``1..ℓ+1`` (type 1), ``2..ℓ+2`` (type 2) or ``1, 3, ..., 2ℓ+1``
    (type 3).  A ``forbidden_t`` is only accepted for type-3 cores with
    ``|T| >= ℓ+2``.
    """
    if t not in core.t_set:
        raise CoreError(f"{t} is not in T")
    avoid = ()
    if forbidden_t is not None:
        if core.core_type != 3 or len(core.t_set) < core.ell + 2:
            raise CoreError("forbidden_t needs a type-3 core with |T| >= ℓ+2")
        if forbidden_t not in core.t_set or forbidden_t == t:
            raise CoreError("forbidden_t must be another T vertex")
        avoid = (forbidden_t,)
    paths = family_to_T(core, t, avoid)[:core.ell + 1]
    if len(paths) != core.ell + 1:
        raise CoreError(f"core too small for {core.ell + 1} paths")
    return SemiAdmissibleFamily(tuple(paths), core.x, tuple(p.end for p in paths))
