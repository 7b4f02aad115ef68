#!/usr/bin/env python3
"""Compare the pure-Python and compiled search kernels.

Runs the full chi_r search ladder (every k from 1 up to chi_r) through each
backend on a few representative instances and reports wall time, node counts
and speedup. Results must agree exactly; the script exits nonzero otherwise.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from condchrom import build
from condchrom.kernel import backends

INSTANCES = [
    ("M(fr:2)", 5),
    ("M(fr:2)", 6),
    ("M(kpart:1,1,2)", 8),
    ("L(wd:4,2)", 6),
    ("M(cyc:7)", 3),
    ("wd:4,3", 9),
]


def run_ladder(mod, g, r):
    """Search k = 1,2,... until feasible, like the solver but without the
    lower-bound shortcut so both kernels do identical full work."""
    adj = g.adjacency_lists()
    req = [min(g.degree(v), min(r, g.max_degree())) for v in range(g.n)]
    total = 0
    for k in range(1, g.n + 1):
        status, colors, nodes = mod.search_coloring(adj, req, k, 0)
        total += nodes
        if status == 0:
            return max(colors), total
    raise AssertionError("unreachable")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    mods = backends()
    if "c" not in mods:
        print("compiled backend not available; benchmarking pure only")

    header = f"{'instance':<18} {'r':>2} {'chi':>4} {'nodes':>9}"
    for name in mods:
        header += f" {name + ' ms':>10}"
    if len(mods) == 2:
        header += f" {'speedup':>8}"
    print(header)

    ok = True
    for spec, r in INSTANCES:
        g, _ = build(spec)
        results = {}
        times = {}
        for name, mod in mods.items():
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                results[name] = run_ladder(mod, g, r)
                best = min(best, time.perf_counter() - t0)
            times[name] = best * 1000.0
        vals = set(results.values())
        if len(vals) > 1:
            print(f"MISMATCH on {spec} r={r}: {results}")
            ok = False
            continue
        chi, nodes = results[next(iter(results))]
        line = f"{spec:<18} {r:>2} {chi:>4} {nodes:>9}"
        for name in mods:
            line += f" {times[name]:>10.2f}"
        if len(mods) == 2:
            line += f" {times['pure'] / times['c']:>7.1f}x"
        print(line)

    raise SystemExit(0 if ok else 1)


if __name__ == "__main__":
    main()
