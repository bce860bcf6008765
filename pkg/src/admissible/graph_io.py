"""graph6 strings and plain edge-list text."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph_core import Graph, GraphError

__all__ = [
    "from_graph6",
    "to_graph6",
    "read_edgelist",
    "format_edgelist",
    "read_graph6_lines",
    "load_graph",
]

_HEADER = ">>graph6<<"


def _encode_n(n: int) -> list[int]:
    if n < 63:
        return [n + 63]
    if n < 258048:
        return [126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)]
    if n < 68719476736:
        return [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    raise GraphError(f"graph6 cannot encode n={n}")


def to_graph6(g: Graph) -> str:
    out = _encode_n(g.n)
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k:k + 6]:
            val = (val << 1) | b
        out.append(val + 63)
    return bytes(out).decode("ascii")


def from_graph6(s: str | bytes) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii")
    s = s.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    data = [ord(c) - 63 for c in s]
    if not data or any(not 0 <= d <= 63 for d in data):
        raise GraphError(f"not a graph6 string: {s!r}")
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) > 1 and data[1] == 63:
        if len(data) < 8:
            raise GraphError("truncated graph6 size field")
        n, pos = 0, 8
        for d in data[2:8]:
            n = (n << 6) | d
    else:
        if len(data) < 4:
            raise GraphError("truncated graph6 size field")
        n, pos = 0, 4
        for d in data[1:4]:
            n = (n << 6) | d
    need = (n * (n - 1) // 2 + 5) // 6
    body = data[pos:]
    if len(body) != need:
        raise GraphError(f"graph6 body has {len(body)} bytes, expected {need} for n={n}")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


def read_edgelist(text: str, n: int | None = None) -> Graph:
    """Parse ``u v`` lines (0-based).

    Blank lines and ``#`` comments are skipped.  A line holding a single
    integer declares the vertex count, which allows isolated vertices.
    """
    edges = []
    declared = n
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphError(f"line {lineno}: expected integers, got {raw!r}") from None
        if len(nums) == 1:
            declared = nums[0]
        elif len(nums) == 2:
            if min(nums) < 0:
                raise GraphError(f"line {lineno}: negative vertex index")
            edges.append((nums[0], nums[1]))
        else:
            raise GraphError(f"line {lineno}: expected 'u v', got {raw!r}")
    top = max((max(e) for e in edges), default=-1) + 1
    if declared is None:
        declared = top
    elif declared < top:
        raise GraphError(f"declared n={declared} but edge uses vertex {top - 1}")
    try:
        return Graph.from_edges(declared, edges)
    except GraphError as exc:
        raise GraphError(f"edge list: {exc}") from None


def format_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Decode a graph6 corpus; errors name the offending line number."""
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield from_graph6(line)
        except GraphError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None


def load_graph(path: str | Path, fmt: str = "edgelist") -> Graph:
    text = Path(path).read_text()
    if fmt == "edgelist":
        return read_edgelist(text)
    if fmt == "graph6":
        graphs = list(read_graph6_lines(text.splitlines()))
        if len(graphs) != 1:
            raise GraphError(f"{path}: expected one graph6 line, found {len(graphs)}")
        return graphs[0]
    raise GraphError(f"unknown graph format {fmt!r}")
