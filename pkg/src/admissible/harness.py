"""Verification campaigns: instance generation, tallying, reports, replay.

Two engines produce identical tallies.  The ``kernel`` engine scans integer
graph codes inside compiled batch loops and is what makes the n = 7
exhaustive campaigns cheap; the ``object`` engine walks ``Graph`` objects
through the public extractor and oracle functions.  Campaign chunks can be
farmed out to worker processes; results are merged in chunk order, so
parallel runs report exactly what serial runs do.
"""

from __future__ import annotations

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Sequence

import numpy as np

from . import kernels
from .config import BudgetExceeded, budgets
from .cores import find_core
from .extractor import (
    DEFAULT_THRESHOLD,
    ExtractionFailure,
    HypothesisError,
    find_admissible_cycles,
    find_admissible_paths,
    format_certificate,
    validate,
)
from .graph_core import Graph, is_connected, is_two_connected
from .graph_io import from_graph6, read_graph6_lines, to_graph6
from .oracle import check_fact3, cycle_length_spectrum, residue_coverage
from .rooted import RootedGraph, delta, is_two_connected_rooted

log = logging.getLogger(__name__)

TARGETS = ("theorem-1.2", "theorem-2.1", "theorem-1.4", "conjecture-1", "conjecture-2", "facts")
GENERATORS = ("exhaustive-labeled", "random-gnp", "corpus-file")
_KERNEL_TARGETS = ("theorem-1.2", "theorem-2.1", "theorem-1.4", "conjecture-1", "conjecture-2")
_MAX_EXHAUSTIVE_N = 10  # 2^45 codes; the budget check stops anything near this


@dataclass(frozen=True)
class Campaign:
    target: str
    n_min: int
    n_max: int
    ks: tuple[int, ...]
    generator: str = "exhaustive-labeled"
    seed: int = 0
    jobs: int = 1
    samples: int = 1000  # random-gnp: graphs per order
    p: float = 0.5  # random-gnp edge probability
    corpus: Optional[str] = None  # corpus-file path
    engine: str = "auto"  # auto | kernel | object
    threshold: int = DEFAULT_THRESHOLD
    max_witnesses: int = 100

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}; choose from {', '.join(TARGETS)}")
        if self.generator not in GENERATORS:
            raise ValueError(f"unknown generator {self.generator!r}")
        if self.engine not in ("auto", "kernel", "object"):
            raise ValueError(f"unknown engine {self.engine!r}")
        if not 0 <= self.n_min <= self.n_max:
            raise ValueError(f"bad order range {self.n_min}..{self.n_max}")
        if not self.ks or min(self.ks) < 1:
            raise ValueError("k values must be positive")
        if self.target == "theorem-1.4" and min(self.ks) < 2:
            raise ValueError("theorem-1.4 needs k >= 2")
        if self.generator == "corpus-file" and not self.corpus:
            raise ValueError("corpus-file generator needs a corpus path")
        if self.generator == "exhaustive-labeled":
            limit = budgets().exhaustive_n
            if self.n_max > min(limit, _MAX_EXHAUSTIVE_N):
                raise BudgetExceeded(
                    f"exhaustive enumeration limited to n <= {limit} (raise ADMISSIBLE_BUDGET exhaustive_n)")

    @property
    def use_kernel(self) -> bool:
        if self.engine == "object":
            return False
        ok = self.generator == "exhaustive-labeled" and self.target in _KERNEL_TARGETS
        if self.target in ("theorem-1.2", "theorem-2.1", "theorem-1.4"):
            # the kernel replays oracle-mode extraction only
            ok = ok and self.n_max <= self.threshold
        if self.engine == "kernel" and not ok:
            raise ValueError("kernel engine needs an exhaustive campaign with n_max <= threshold")
        return ok


@dataclass
class KTally:
    k: int
    instances_total: int = 0
    hypotheses_satisfied: int = 0
    verified: int = 0
    failed: int = 0

    def add(self, other: "KTally"):
        self.instances_total += other.instances_total
        self.hypotheses_satisfied += other.hypotheses_satisfied
        self.verified += other.verified
        self.failed += other.failed


@dataclass
class VerificationReport:
    target: str
    instances_total: int
    hypotheses_satisfied: int
    verified: int
    failed: int
    failure_witnesses: list[dict]
    wall_time: float
    per_k: list[KTally] = field(default_factory=list)
    campaign: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.verified + self.failed == self.hypotheses_satisfied

    def tallies(self) -> tuple:
        """Everything except timing, for determinism comparisons."""
        return (self.instances_total, self.hypotheses_satisfied, self.verified, self.failed,
                [asdict(t) for t in self.per_k], self.failure_witnesses)

    def to_json(self) -> str:
        d = asdict(self)
        return json.dumps(d, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        d = json.loads(text)
        d["per_k"] = [KTally(**t) for t in d.get("per_k", [])]
        return cls(**d)

    def save(self, path: str | Path):
        Path(path).write_text(self.to_json() + "\n")


# ------------------------------------------------------------------ generation


def _pairs(n: int) -> list[tuple[int, int]]:
    # graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
    return [(i, j) for j in range(1, n) for i in range(j)]


def _mask_to_graph(n: int, code: int, pairs) -> Graph:
    return Graph.from_edges(n, [pairs[e] for e in range(len(pairs)) if (code >> e) & 1])


def generate_graphs(c: Campaign) -> Iterator[Graph]:
    """All graphs of the campaign in a fixed order."""
    if c.generator == "exhaustive-labeled":
        for n in range(c.n_min, c.n_max + 1):
            pairs = _pairs(n)
            for code in range(1 << len(pairs)):
                yield _mask_to_graph(n, code, pairs)
    elif c.generator == "random-gnp":
        rng = np.random.default_rng(c.seed)
        for n in range(c.n_min, c.n_max + 1):
            pairs = _pairs(n)
            for _ in range(c.samples):
                keep = rng.random(len(pairs)) < c.p
                yield Graph.from_edges(n, [e for e, kp in zip(pairs, keep) if kp])
    else:
        text = Path(c.corpus).read_text()
        for g in read_graph6_lines(text.splitlines()):
            if c.n_min <= g.n <= c.n_max:
                yield g


def _instance_roots(target: str, g: Graph) -> list[tuple]:
    n = g.n
    if target == "theorem-2.1":
        return [(x, y, z) for x in range(n) for y in range(n) if x != y
                for z in [None] + list(range(n))]
    if target in ("theorem-1.2", "facts"):
        return [(x, y, None) for x in range(n) for y in range(n) if x != y]
    return [()]


def generate_instances(c: Campaign) -> Iterator[tuple[Graph, tuple]]:
    """``(graph, roots)`` pairs; disconnected graphs are pruned for targets that need connectivity."""
    need_conn = c.target != "conjecture-1"
    for g in generate_graphs(c):
        if need_conn and not is_connected(g):
            continue
        for roots in _instance_roots(c.target, g):
            yield g, roots


# ----------------------------------------------------------------- evaluation


def _witness(target: str, g: Graph, roots: tuple, k: int, reason: str) -> dict:
    x, y, z = (tuple(roots) + (None, None, None))[:3]
    return {"target": target, "graph6": to_graph6(g), "x": x, "y": y, "z": z, "k": k, "reason": reason}


def evaluate(target: str, g: Graph, roots: tuple, k: int, threshold: int = DEFAULT_THRESHOLD,
             cache: Optional[dict] = None) -> tuple[bool, Optional[bool], str]:
    """One instance: ``(hypotheses hold, verified or None, failure reason)``."""
    if target in ("theorem-2.1", "theorem-1.2"):
        x, y, z = roots
        if target == "theorem-1.2" and not is_two_connected(g):
            return False, None, ""
        r = RootedGraph(g, x, y, z)
        if not _rooted_ok(g, x, y, cache) or delta(r) < k + 1:
            return False, None, ""
        key = (x, y, k) if g.n <= threshold else None  # oracle answers ignore z
        if cache is not None and key in cache:
            return (True,) + cache[key]
        try:
            cert = find_admissible_paths(r, k, threshold)
            v = validate(cert)
            out = (v.ok, "; ".join(v.problems))
        except ExtractionFailure as exc:
            out = (False, str(exc))
        if cache is not None and key is not None:
            cache[key] = out
        return (True,) + out
    if target == "theorem-1.4":
        try:
            cert = find_admissible_cycles(g, k, threshold)
        except HypothesisError:
            return False, None, ""
        except ExtractionFailure as exc:
            return True, False, str(exc)
        v = validate(cert)
        return True, v.ok, "; ".join(v.problems)
    if target in ("conjecture-1", "conjecture-2"):
        if g.n == 0 or min(len(a) for a in g.adj) < k + 1:
            return False, None, ""
        if target == "conjecture-2" and (not is_two_connected(g) or _bipartite(g)):
            return False, None, ""
        spec = _cycle_spec(g, cache)
        parity = "even" if target == "conjecture-1" else "all"
        ok = residue_coverage(spec, k, parity)
        return True, ok, "" if ok else f"cycle lengths {list(spec)} miss a residue mod {k}"
    if target == "facts":
        x, y, _ = roots
        if not _rooted_ok(g, x, y, cache):
            return False, None, ""
        if cache is None:
            core = find_core(g, x, y)
        else:
            if ("core", x, y) not in cache:
                cache[("core", x, y)] = find_core(g, x, y)
            core = cache[("core", x, y)]
        if core is None:
            return False, None, ""
        ok = check_fact3(g, x, y, core, k)
        return True, ok, "" if ok else f"core {core} triggers but no {k} admissible paths"
    raise ValueError(f"unknown target {target!r}")


def _rooted_ok(g: Graph, x: int, y: int, cache) -> bool:
    if cache is None:
        return is_two_connected_rooted(RootedGraph(g, x, y))
    key = ("rooted", min(x, y), max(x, y))
    if key not in cache:
        cache[key] = is_two_connected_rooted(RootedGraph(g, x, y))
    return cache[key]


def _cycle_spec(g: Graph, cache):
    if cache is None:
        return cycle_length_spectrum(g)
    if "cycles" not in cache:
        cache["cycles"] = cycle_length_spectrum(g)
    return cache["cycles"]


def _bipartite(g: Graph) -> bool:
    return bool(kernels.is_bipartite(g.masks, g.n))


def _object_chunk(c: Campaign, graphs: Sequence[Graph]):
    tallies = {k: KTally(k) for k in c.ks}
    wit: list[dict] = []
    for g in graphs:
        cache: dict = {}
        for roots in _instance_roots(c.target, g):
            for k in c.ks:
                t = tallies[k]
                t.instances_total += 1
                if c.target != "conjecture-1" and not is_connected(g):
                    continue
                sat, ok, reason = evaluate(c.target, g, roots, k, c.threshold, cache)
                if not sat:
                    continue
                t.hypotheses_satisfied += 1
                if ok:
                    t.verified += 1
                else:
                    t.failed += 1
                    if len(wit) < c.max_witnesses:
                        wit.append(_witness(c.target, g, roots, k, reason))
    return [tallies[k] for k in c.ks], wit


def _kernel_chunk(c: Campaign, n: int, lo: int, hi: int):
    ks = np.array(c.ks, dtype=np.int64)
    tallies = np.zeros((len(ks), 4), dtype=np.int64)
    failures = np.zeros((max(c.max_witnesses, 1), 5), dtype=np.int64)
    budget = budgets().paths
    args = (n, lo, hi, ks)
    if c.target in ("theorem-2.1", "theorem-1.2"):
        mode = kernels.MODE_THM21 if c.target == "theorem-2.1" else kernels.MODE_THM12
        nf = kernels.scan_theorem_paths(*args, mode, budget, c.max_witnesses, tallies, failures)
    elif c.target == "theorem-1.4":
        nf = kernels.scan_theorem_cycles(*args, budget, c.max_witnesses, tallies, failures)
    else:
        nf = kernels.scan_conjectures(*args, c.target == "conjecture-2", budget, c.max_witnesses,
                                      tallies, failures)
    if nf < 0:
        raise BudgetExceeded(f"path budget {budget} exceeded in chunk n={n} [{lo}, {hi})")
    pairs = _pairs(n)
    wit = []
    for code, x, y, z, k in failures[:nf].tolist():
        g = _mask_to_graph(n, code, pairs)
        roots = () if x < 0 else (x, y, None if z < 0 else z)
        wit.append(_witness(c.target, g, roots, k, "kernel: no validated admissible run"))
    out = [KTally(int(k), *map(int, row)) for k, row in zip(c.ks, tallies)]
    return out, wit


def _chunks(c: Campaign) -> list[tuple]:
    """Work units as picklable tuples, in merge order."""
    units = []
    if c.use_kernel:
        parts = max(1, 4 * c.jobs)
        for n in range(c.n_min, c.n_max + 1):
            total = 1 << (n * (n - 1) // 2)
            step = max(1, -(-total // parts))
            for lo in range(0, total, step):
                units.append(("kernel", n, lo, min(total, lo + step)))
        return units
    graphs = list(generate_graphs(c))
    parts = max(1, 4 * c.jobs) if c.jobs > 1 else 1
    step = max(1, -(-len(graphs) // parts))
    for lo in range(0, len(graphs), step):
        units.append(("object", graphs[lo:lo + step]))
    return units


def _run_unit(c: Campaign, unit: tuple):
    if unit[0] == "kernel":
        return _kernel_chunk(c, *unit[1:])
    return _object_chunk(c, unit[1])


def run_campaign(c: Campaign) -> VerificationReport:
    t0 = time.perf_counter()
    units = _chunks(c)
    log.info("campaign %s: %d work units, %d jobs", c.target, len(units), c.jobs)
    if c.jobs > 1 and len(units) > 1:
        with ProcessPoolExecutor(max_workers=c.jobs) as pool:
            results = list(pool.map(_run_unit, [c] * len(units), units))
    else:
        results = [_run_unit(c, u) for u in units]
    per_k = [KTally(k) for k in c.ks]
    wit: list[dict] = []
    for tallies, w in results:
        for acc, t in zip(per_k, tallies):
            acc.add(t)
        wit.extend(w)
    wit = wit[:c.max_witnesses]
    params = asdict(c)
    params["ks"] = list(c.ks)
    return VerificationReport(
        target=c.target,
        instances_total=sum(t.instances_total for t in per_k),
        hypotheses_satisfied=sum(t.hypotheses_satisfied for t in per_k),
        verified=sum(t.verified for t in per_k),
        failed=sum(t.failed for t in per_k),
        failure_witnesses=wit,
        wall_time=time.perf_counter() - t0,
        per_k=per_k,
        campaign=params,
    )


def replay(witness: dict, threshold: int = DEFAULT_THRESHOLD) -> dict:
    """Re-run one witness instance; returns the fresh outcome."""
    g = from_graph6(witness["graph6"])
    target = witness["target"]
    k = int(witness["k"])
    if target in ("theorem-2.1", "theorem-1.2", "facts"):
        roots = (witness["x"], witness["y"], witness.get("z"))
    else:
        roots = ()
    sat, ok, reason = evaluate(target, g, roots, k, threshold)
    out = {"target": target, "graph6": witness["graph6"], "k": k, "hypotheses_satisfied": sat,
           "verified": ok, "reason": reason}
    if sat and ok and target in ("theorem-2.1", "theorem-1.2"):
        cert = find_admissible_paths(RootedGraph(g, *roots), k, threshold)
        out["certificate"] = format_certificate(cert)
    elif sat and ok and target == "theorem-1.4":
        out["certificate"] = format_certificate(find_admissible_cycles(g, k, threshold))
    return out
