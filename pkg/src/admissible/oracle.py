"""Brute-force ground truth for path and cycle lengths."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .config import BudgetExceeded, budgets
from .cores import Core, CoreError, component_of, is_valid_core
from .graph_core import Graph, GraphError, OrientedPath, neighborhood_of_set
from .rooted import RootedGraph, is_two_connected_rooted

__all__ = [
    "LengthSpectrum",
    "is_admissible",
    "path_length_spectrum",
    "cycle_length_spectrum",
    "path_lengths_backtracking",
    "max_admissible_run",
    "select_admissible_run",
    "residue_coverage",
    "check_fact3",
]


@dataclass(frozen=True)
class LengthSpectrum:
    lengths: tuple[int, ...]
    kind: str = "path"  # "path" or "cycle"
    witnesses: dict = field(default_factory=dict, compare=False, repr=False)

    def __contains__(self, length: int) -> bool:
        return length in self.lengths

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self) -> int:
        return len(self.lengths)

    @property
    def mask(self) -> int:
        m = 0
        for L in self.lengths:
            m |= 1 << L
        return m


def is_admissible(lengths: Sequence[int], semi: bool = False) -> bool:
    """First length >= 2 (>= 1 when ``semi``), then a uniform gap of 1 or of 2."""
    if not lengths:
        return False
    if lengths[0] < (1 if semi else 2):
        return False
    if len(lengths) == 1:
        return True
    gap = lengths[1] - lengths[0]
    if gap not in (1, 2):
        return False
    return all(b - a == gap for a, b in zip(lengths, lengths[1:]))


def _check_size(g: Graph) -> int:
    b = budgets()
    if g.n > b.oracle_n:
        raise BudgetExceeded(f"oracle refuses n={g.n} > {b.oracle_n} (raise ADMISSIBLE_BUDGET oracle_n)")
    return b.paths


def path_length_spectrum(g: Graph, x: int, y: int) -> LengthSpectrum:
    """Exact lengths of simple ``(x, y)``-paths, with one witness per length."""
    if x == y:
        raise GraphError("path spectrum needs x != y")
    budget = _check_size(g)
    lenmask = np.zeros(g.n, dtype=np.int64)
    witness = np.zeros((g.n, g.n, g.n), dtype=np.int64)
    if kernels.paths_from(g.masks, g.n, x, y, budget, lenmask, witness) < 0:
        raise BudgetExceeded(f"more than {budget} partial paths from {x}")
    m = int(lenmask[y])
    lengths = tuple(L for L in range(g.n) if (m >> L) & 1)
    wit = {L: OrientedPath(int(v) for v in witness[y, L, :L + 1]) for L in lengths}
    return LengthSpectrum(lengths, "path", wit)


def cycle_length_spectrum(g: Graph) -> LengthSpectrum:
    """Exact simple-cycle lengths; witnesses are vertex cycles without the repeat."""
    budget = _check_size(g)
    lm = np.zeros(1, dtype=np.int64)
    witness = np.zeros((g.n + 1, max(g.n, 1)), dtype=np.int64)
    if g.n and kernels.cycles_all(g.masks, g.n, budget, lm, witness, True) < 0:
        raise BudgetExceeded(f"more than {budget} partial paths in cycle search")
    m = int(lm[0])
    lengths = tuple(L for L in range(3, g.n + 1) if (m >> L) & 1)
    wit = {L: tuple(int(v) for v in witness[L, :L]) for L in lengths}
    return LengthSpectrum(lengths, "cycle", wit)


def path_lengths_backtracking(g: Graph, x: int, y: int) -> set[int]:
    """Second, deliberately naive enumerator (recursion over Python sets)."""
    out: set[int] = set()
    on_path = {x}

    def walk(v: int, length: int):
        for w in g.adj[v]:
            if w == y:
                out.add(length + 1)
            elif w not in on_path:
                on_path.add(w)
                walk(w, length + 1)
                on_path.discard(w)

    walk(x, 0)
    return out


def max_admissible_run(spectrum: LengthSpectrum | Sequence[int], kind: Optional[str] = None) -> int:
    """Largest k with a k-term gap-1 or gap-2 run inside the spectrum.

    Runs start at >= 2 for paths and >= 3 for cycles.
    """
    if kind is None:
        kind = spectrum.kind if isinstance(spectrum, LengthSpectrum) else "path"
    lo = 3 if kind == "cycle" else 2
    have = {L for L in spectrum if L >= lo}
    best = 0
    for start in have:
        for gap in (1, 2):
            if start - gap in have:
                continue  # not the beginning of a maximal run
            cnt = 0
            while start + cnt * gap in have:
                cnt += 1
            best = max(best, cnt)
    return best


def select_admissible_run(lengths, k: int, first_min: int = 2) -> Optional[list[int]]:
    """Greedy pick: smallest start, gap 1 before gap 2."""
    have = set(lengths)
    for start in sorted(L for L in have if L >= first_min):
        for gap in (1, 2):
            run = [start + gap * i for i in range(k)]
            if all(L in have for L in run):
                return run
    return None


def residue_coverage(spectrum: LengthSpectrum | Sequence[int], k: int, parity: str = "all") -> bool:
    """``parity="all"``: lengths hit every residue mod k.

    ``parity="even"``: every even integer's residue class is hit, i.e. all
    residues when k is odd and all even residues when k is even.
    """
    if k < 1:
        raise ValueError("k must be positive")
    if parity not in ("all", "even"):
        raise ValueError(f"parity must be 'all' or 'even', not {parity!r}")
    hit = {L % k for L in spectrum}
    if parity == "all" or k % 2 == 1:
        need = set(range(k))
    else:
        need = set(range(0, k, 2))
    return need <= hit


def check_fact3(g: Graph, x: int, y: int, core: Core, k: int) -> bool:
    """The contrapositive on one instance.

    When ``ℓ >= k``, or ``ℓ >= k-1`` and the component of ``y`` in ``G - V(H)``
    touches ``T``, the oracle must find k admissible ``(x, y)``-paths.
    Instances where neither trigger fires are vacuously true.
    """
    if not is_valid_core(g, core, y) or core.x != x:
        raise CoreError("core is not a valid core with respect to (x, y)")
    if not is_two_connected_rooted(RootedGraph(g, x, y)):
        raise GraphError("(G, x, y) is not a 2-connected rooted graph")
    c = component_of(g, core.vertices, y)
    touches_t = bool(neighborhood_of_set(g, c) & core.t_set)
    if not (core.ell >= k or (touches_t and core.ell >= k - 1)):
        return True
    return max_admissible_run(path_length_spectrum(g, x, y)) >= k
