"""Compiled kernels vs the pure-Python fallback.

Each workload runs in a fresh interpreter, once with numba and once with
ADMISSIBLE_NO_JIT=1, so the fallback really is plain Python all the way
down.  Compile time is excluded (one warm-up call first).

    python3 benchmarks/bench_kernels.py [--repeat 3]
"""

import argparse
import json
import os
import subprocess
import sys

WORKLOADS = {
    "paths_from/petersen": "paths",
    "cycles_all/petersen": "cycles",
    "scan_theorem_paths/n=5": "scan21",
    "scan_theorem_cycles/n=6": "scan14",
}

_CHILD = r"""
import json, sys, time
import numpy as np
from admissible import kernels
from admissible._jit import JIT_ENABLED
from admissible.graph_core import petersen_graph

what, repeat = sys.argv[1], int(sys.argv[2])
g = petersen_graph()
ks = np.array([1, 2, 3], dtype=np.int64)

def run():
    if what == "paths":
        lm = np.zeros(g.n, dtype=np.int64)
        wit = np.zeros((g.n, g.n, g.n), dtype=np.int64)
        return kernels.paths_from(g.masks, g.n, 0, -1, 10**9, lm, wit)
    if what == "cycles":
        lm = np.zeros(1, dtype=np.int64)
        wit = np.zeros((g.n + 1, g.n), dtype=np.int64)
        return kernels.cycles_all(g.masks, g.n, 10**9, lm, wit, True)
    t = np.zeros((len(ks), 4), dtype=np.int64)
    f = np.zeros((1, 5), dtype=np.int64)
    if what == "scan21":
        return kernels.scan_theorem_paths(5, 0, 1 << 10, ks, kernels.MODE_THM21, 10**9, 1, t, f), t.tolist()
    return kernels.scan_theorem_cycles(6, 0, 1 << 15, ks[1:], 10**9, 1, t[1:], f), t.tolist()

first = run()
best = float("inf")
for _ in range(repeat):
    t0 = time.perf_counter()
    out = run()
    best = min(best, time.perf_counter() - t0)
assert out == first if not isinstance(out, tuple) else out[0] == first[0]
print(json.dumps({"jit": JIT_ENABLED, "seconds": best, "result": str(out)}))
"""


def _measure(key, repeat, no_jit):
    env = dict(os.environ)
    if no_jit:
        env["ADMISSIBLE_NO_JIT"] = "1"
    else:
        env.pop("ADMISSIBLE_NO_JIT", None)
    proc = subprocess.run([sys.executable, "-c", _CHILD, key, str(repeat)], env=env,
                          capture_output=True, text=True, check=True)
    return json.loads(proc.stdout.strip().splitlines()[-1])


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    print(f"{'workload':28s} {'numba ms':>10s} {'python ms':>10s} {'speedup':>9s}  same")
    for name, key in WORKLOADS.items():
        fast = _measure(key, args.repeat, no_jit=False)
        slow = _measure(key, 1, no_jit=True)
        same = fast["result"] == slow["result"]
        speed = slow["seconds"] / fast["seconds"] if fast["seconds"] else float("inf")
        print(f"{name:28s} {1e3 * fast['seconds']:10.3f} {1e3 * slow['seconds']:10.1f} {speed:8.1f}x  {same}")


if __name__ == "__main__":
    main()
