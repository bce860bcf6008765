"""Rooted graphs ``(G, x, y; z)`` and the block-level predicates built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .graph_core import Graph, GraphError, blocks, components, is_connected, is_two_connected

__all__ = [
    "NEG_INF",
    "RootedGraph",
    "VEndBlock",
    "FeasibleBlock",
    "is_two_connected_rooted",
    "delta",
    "v_end_block",
    "feasible_blocks",
]

NEG_INF = -math.inf


@dataclass(frozen=True)
class RootedGraph:
    g: Graph
    x: int
    y: int
    z: Optional[int] = None  # None models a z outside V(G)

    def __post_init__(self):
        if self.x == self.y:
            raise GraphError("roots x and y must differ")
        for v in (self.x, self.y):
            if not 0 <= v < self.g.n:
                raise GraphError(f"root {v} out of range")
        if self.z is not None and not 0 <= self.z < self.g.n:
            raise GraphError(f"z={self.z} out of range")

    @property
    def exempt(self) -> frozenset[int]:
        s = {self.x, self.y}
        if self.z is not None:
            s.add(self.z)
        return frozenset(s)


def is_two_connected_rooted(r: RootedGraph) -> bool:
    g = r.g
    if g.n < 3 or not is_connected(g):
        return False
    dec = blocks(g)
    ends = dec.end_blocks
    if len(ends) > 2:
        return False
    for i in ends:
        b = dec.blocks[i]
        if not any(v in b and v not in dec.cut_vertices for v in (r.x, r.y)):
            return False
    return True


def delta(r: RootedGraph) -> float:
    """Minimum degree outside ``{x, y, z}``; ``NEG_INF`` if nothing is left."""
    ex = r.exempt
    degs = [len(r.g.adj[v]) for v in range(r.g.n) if v not in ex]
    return min(degs) if degs else NEG_INF


class VEndBlock(NamedTuple):
    v: int
    b_v: int
    b_v_prime: int


def v_end_block(g: Graph, v: int) -> VEndBlock | None:
    if len(g.adj[v]) != 1:
        return None
    b = g.adj[v][0]
    if len(g.adj[b]) < 2:
        return None
    if len(g.adj[b]) == 2:
        other = g.adj[b][0] if g.adj[b][1] == v else g.adj[b][1]
        return VEndBlock(v, b, other)
    return VEndBlock(v, b, b)


class FeasibleBlock(NamedTuple):
    block: frozenset[int]
    b: int
    z_prime: Optional[int]
    case: str  # "B1", "B2i", "B2ii" or "B3"


def feasible_blocks(g: Graph, y: int, z: Optional[int]) -> list[FeasibleBlock]:
    """Blocks of the connected graph ``g`` meeting the feasibility condition.

    A block ``B`` is kept when at most two of its vertices are cut vertices or
    roots (``y``, ``z``), and at least one of its vertices is neither.  Each
    hit carries the ``(b, z')`` roles assigned by the number of cut vertices
    it contains.
    """
    dec = blocks(g)
    vc = dec.cut_vertices
    special = set(vc) | {y}
    if z is not None:
        special.add(z)
    out = []
    for blk, cuts in zip(dec.blocks, dec.block_cuts):
        if len(blk & special) > 2 or not (blk - special):
            continue
        if not cuts:
            out.append(FeasibleBlock(blk, y, z, "B1"))
        elif len(cuts) == 1:
            (bp,) = cuts
            if y in blk and y != bp:
                out.append(FeasibleBlock(blk, y, bp, "B2i"))
            else:
                out.append(FeasibleBlock(blk, bp, z, "B2ii"))
        elif len(cuts) == 2:
            interior = blk - vc
            c1, c2 = sorted(cuts)
            comp_y = next(c for c in components(g, interior) if y in c)
            if c1 in comp_y:
                out.append(FeasibleBlock(blk, c1, c2, "B3"))
            else:
                out.append(FeasibleBlock(blk, c2, c1, "B3"))
    return out


def is_two_connected_plus_edge(r: RootedGraph) -> bool:
    """Reference test: ``G + xy`` is 2-connected."""
    g = r.g
    if g.has_edge(r.x, r.y):
        return is_two_connected(g)
    return is_two_connected(g.with_edges([(r.x, r.y)]))
