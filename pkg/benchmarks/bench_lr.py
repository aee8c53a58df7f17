"""Compare the compiled and pure-Python LR kernels.

    python3 benchmarks/bench_lr.py --max-n 10 --sweep-n 14

Two measurements: every LR triple of weight <= max-n through each kernel,
and an end-to-end equivariant table sweep from cold caches (the pure run
happens in a subprocess with MATROID_KL_PURE=1 so the backend choice is
made at import time, as in normal use).
"""
import argparse
import os
import subprocess
import sys
import time

from matroid_kl import _backend
from matroid_kl.partitions import partitions_of

SWEEP = """
import sys, time
from matroid_kl import BACKEND
from matroid_kl.ekl_engine import ekl_recursive
n_max = int(sys.argv[1])
t = time.perf_counter()
for n in range(n_max + 1):
    for m in range(n + 1):
        ekl_recursive(n, m)
print(BACKEND, time.perf_counter() - t)
"""


def lr_triples(max_n):
    out = []
    for n in range(max_n + 1):
        lams = partitions_of(n)
        for k in range(n + 1):
            for mu in partitions_of(k):
                for nu in partitions_of(n - k):
                    out.extend((lam, mu, nu) for lam in lams if lam.contains(mu) and lam.contains(nu))
    return out


def time_kernel(fn, triples, repeat):
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        for lam, mu, nu in triples:
            fn(lam, mu, nu)
        best = min(best, time.perf_counter() - t)
    return best


def sweep(n_max, pure):
    env = dict(os.environ)
    env.pop("MATROID_KL_PURE", None)
    if pure:
        env["MATROID_KL_PURE"] = "1"
    res = subprocess.run([sys.executable, "-c", SWEEP, str(n_max)], env=env,
                         capture_output=True, text=True, check=True)
    backend, secs = res.stdout.split()
    return backend, float(secs)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=10)
    ap.add_argument("--sweep-n", type=int, default=14)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    triples = lr_triples(args.max_n)
    print(f"LR triples with weight <= {args.max_n}: {len(triples)}")
    py = time_kernel(_backend.count_lr_python, triples, args.repeat)
    print(f"  python   {py:8.3f}s")
    if _backend.count_lr_compiled is None:
        print("  cython   not built")
    else:
        cy = time_kernel(_backend.count_lr_compiled, triples, args.repeat)
        print(f"  cython   {cy:8.3f}s   speedup x{py / cy:.1f}")

    print(f"equivariant tables for n <= {args.sweep_n}, cold caches:")
    results = [sweep(args.sweep_n, pure=True), sweep(args.sweep_n, pure=False)]
    for backend, secs in results:
        print(f"  {backend:8} {secs:8.3f}s")


if __name__ == "__main__":
    main()
