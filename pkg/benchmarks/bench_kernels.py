"""Benchmark the compiled signature-rule kernel against the pure-Python fallback.

Backend selection happens at import time, so each measurement runs in a child
process: once with AFFSAT_PURE_PYTHON=1 and once without.  The workload is
crystal graph generation, whose inner loop is the per-node, per-residue
signature scan.

    python benchmarks/bench_kernels.py
    python benchmarks/bench_kernels.py -n 2 -w 2,0 --depth 10 --repeat 5
"""

import argparse
import json
import os
import subprocess
import sys
import time


def run_workload(n, w, depth, repeat):
    from affsat import Weight, backend_name, generate_crystal

    lam = Weight(n, tuple(w), (0,) * n)
    budget = (depth,) * n
    generate_crystal(lam, budget)  # warm-up
    best = float("inf")
    nodes = 0
    for _ in range(repeat):
        t0 = time.perf_counter()
        graph = generate_crystal(lam, budget)
        best = min(best, time.perf_counter() - t0)
        nodes = len(graph)
    return {"backend": backend_name(), "nodes": nodes, "seconds": best}


def measure(pure_python, argv):
    env = dict(os.environ)
    env.pop("AFFSAT_PURE_PYTHON", None)
    if pure_python:
        env["AFFSAT_PURE_PYTHON"] = "1"
    proc = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--child", *argv],
        env=env, capture_output=True, text=True, check=True,
    )
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__.split("\n")[0])
    parser.add_argument("-n", type=int, default=2)
    parser.add_argument("-w", default="2,0", help="framing dims, comma separated")
    parser.add_argument("--depth", type=int, default=9, help="uniform lowering budget")
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--child", action="store_true", help=argparse.SUPPRESS)
    args = parser.parse_args()
    w = [int(x) for x in args.w.split(",")]

    if args.child:
        print(json.dumps(run_workload(args.n, w, args.depth, args.repeat)))
        return

    argv = ["-n", str(args.n), "-w", args.w, "--depth", str(args.depth),
            "--repeat", str(args.repeat)]
    results = [measure(pure_python=True, argv=argv)]
    compiled = measure(pure_python=False, argv=argv)
    if compiled["backend"] == "cython":
        results.append(compiled)
    else:
        print("compiled kernel not available; only the fallback was timed", file=sys.stderr)

    print(f"workload: n={args.n} w={w} budget=({args.depth},)*n "
          f"({results[0]['nodes']} nodes, best of {args.repeat})")
    print(f"{'backend':<10} {'seconds':>10} {'nodes/s':>12}")
    for r in results:
        print(f"{r['backend']:<10} {r['seconds']:>10.3f} {r['nodes'] / r['seconds']:>12.0f}")
    if len(results) == 2:
        print(f"speedup: {results[0]['seconds'] / results[1]['seconds']:.2f}x")


if __name__ == "__main__":
    main()
