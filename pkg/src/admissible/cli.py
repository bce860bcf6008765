"""Command-line entry point: ``admissible verify|certify|replay|spectrum``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .config import BudgetExceeded
from .extractor import (
    DEFAULT_THRESHOLD,
    ExtractionFailure,
    HypothesisError,
    find_admissible_cycles,
    find_admissible_paths,
    format_certificate,
)
from .graph_core import GraphError
from .graph_io import load_graph
from .harness import GENERATORS, TARGETS, Campaign, replay, run_campaign
from .oracle import cycle_length_spectrum, max_admissible_run, path_length_spectrum
from .rooted import RootedGraph


def _k_list(text: str) -> tuple[int, ...]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, hi = part.split("-")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError("empty k list")
    return tuple(sorted(set(out)))


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="admissible", description=__doc__)
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run a verification campaign")
    v.add_argument("--target", required=True, choices=TARGETS)
    v.add_argument("--n-min", type=int, default=1)
    v.add_argument("--n-max", type=int, required=True)
    v.add_argument("--k", type=_k_list, required=True, help="e.g. 2,3 or 1-4")
    v.add_argument("--generator", choices=GENERATORS, default="exhaustive-labeled")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--samples", type=int, default=1000, help="random-gnp graphs per order")
    v.add_argument("--p", type=float, default=0.5, help="random-gnp edge probability")
    v.add_argument("--corpus", help="graph6 file for corpus-file")
    v.add_argument("--engine", choices=("auto", "kernel", "object"), default="auto")
    v.add_argument("--threshold", type=int, default=DEFAULT_THRESHOLD)
    v.add_argument("--out", help="write the JSON report here")

    c = sub.add_parser("certify", help="print a certificate for one graph")
    c.add_argument("--graph", required=True)
    c.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    c.add_argument("--x", type=int)
    c.add_argument("--y", type=int)
    c.add_argument("--z", type=int)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--cycles", action="store_true", help="certify k admissible cycles instead")
    c.add_argument("--threshold", type=int, default=DEFAULT_THRESHOLD)

    r = sub.add_parser("replay", help="re-run failure witnesses")
    r.add_argument("--witness", required=True, help="witness JSON or a full report")
    r.add_argument("--threshold", type=int, default=DEFAULT_THRESHOLD)

    s = sub.add_parser("spectrum", help="print path or cycle length spectrum")
    s.add_argument("--graph", required=True)
    s.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--cycles", action="store_true")
    mode.add_argument("--paths", action="store_true")
    s.add_argument("--x", type=int)
    s.add_argument("--y", type=int)
    return p


def _verify(a) -> int:
    camp = Campaign(a.target, a.n_min, a.n_max, a.k, a.generator, a.seed, a.jobs, a.samples, a.p,
                    a.corpus, a.engine, a.threshold)
    rep = run_campaign(camp)
    for t in rep.per_k:
        print(f"{rep.target} k={t.k}: total={t.instances_total} satisfied={t.hypotheses_satisfied} "
              f"verified={t.verified} failed={t.failed}")
    print(f"wall time {rep.wall_time:.2f}s")
    if a.out:
        rep.save(a.out)
    return 0 if rep.ok else 1


def _certify(a) -> int:
    g = load_graph(a.graph, a.format)
    if a.cycles:
        cert = find_admissible_cycles(g, a.k, a.threshold)
    else:
        if a.x is None or a.y is None:
            print("certify: --x and --y are required for paths", file=sys.stderr)
            return 2
        cert = find_admissible_paths(RootedGraph(g, a.x, a.y, a.z), a.k, a.threshold)
    sys.stdout.write(format_certificate(cert))
    return 0


def _replay(a) -> int:
    data = json.loads(Path(a.witness).read_text())
    items = data.get("failure_witnesses", [data]) if isinstance(data, dict) else data
    status = 0
    for w in items:
        out = replay(w, a.threshold)
        print(json.dumps(out))
        if out["hypotheses_satisfied"] and not out["verified"]:
            status = 1
    return status


def _spectrum(a) -> int:
    g = load_graph(a.graph, a.format)
    if a.paths:
        if a.x is None or a.y is None:
            print("spectrum: --paths needs --x and --y", file=sys.stderr)
            return 2
        spec = path_length_spectrum(g, a.x, a.y)
    else:
        spec = cycle_length_spectrum(g)
    print(" ".join(map(str, spec.lengths)))
    print(f"max_admissible_run {max_admissible_run(spec)}")
    return 0


def main(argv=None) -> int:
    a = _parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if a.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler = {"verify": _verify, "certify": _certify, "replay": _replay, "spectrum": _spectrum}[a.command]
    try:
        return handler(a)
    except (HypothesisError, ExtractionFailure, GraphError, BudgetExceeded, ValueError, OSError) as exc:
        print(f"{a.command}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
