"""Compiled vs pure-Python kernels, per kernel and end to end.

    python benchmarks/bench_kernels.py [--k 40 80] [--repeat 3] [--json out.json]

Each timing is the best of ``--repeat`` runs.  End-to-end runs clear the
per-modulus caches first so both implementations do the same work.
"""

from __future__ import annotations

import argparse
import json
import random
import time

import numpy as np

from denumerant import cyclotomic, kernels
from denumerant.floatwaves import float_all_waves
from denumerant.waves import all_waves


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def kernel_cases():
    rng = random.Random(7)
    ctx = cyclotomic.get_ctx(97)
    dim, red = ctx.ring.dim, ctx.ring.red
    a = [rng.randint(-10**30, 10**30) for _ in range(dim)]
    b = [rng.randint(-10**30, 10**30) for _ in range(dim)]
    nrng = np.random.default_rng(7)
    h = np.zeros((64, 48), dtype=np.complex128)
    h[1:] = (nrng.standard_normal((63, 48)) + 1j * nrng.standard_normal((63, 48))) * 0.1
    g = np.ones((64, 48), dtype=np.complex128)
    g[1:] = h[1:]

    def mulmod():
        for _ in range(50):
            kernels.mulmod(a, b, red, dim)

    return {
        "mulmod (Phi_97, 100-bit, x50)": mulmod,
        "dp_count (1..12, T=2e5)": lambda: kernels.dp_count(list(range(1, 13)), 200_000),
        "cseries_exp (64 x 48)": lambda: kernels.cseries_exp(h),
        "cseries_log (64 x 48)": lambda: kernels.cseries_log(g),
    }


def end_to_end(k_values):
    cases = {}
    for k in k_values:
        seq = tuple(range(1, k + 1))

        def exact(seq=seq):
            cyclotomic.get_ctx.cache_clear()
            all_waves(seq)

        cases[f"exact all_waves(1..{k})"] = exact
        cases[f"float all_waves(1..{k})"] = lambda seq=seq: float_all_waves(seq)
    return cases


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--k", type=int, nargs="+", default=[40, 80])
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--json", metavar="PATH")
    args = p.parse_args(argv)

    impls = kernels.available()
    if "cython" not in impls:
        print("compiled extension not built; timing the Python kernels only")
    cases = {**kernel_cases(), **end_to_end(args.k)}
    results = {}
    previous = kernels.ACTIVE
    try:
        # interleave implementations per case so drift hits both alike
        for name, fn in cases.items():
            for impl in impls:
                kernels.use(impl)
                fn()  # warm caches that are not under test (Phi table, Bernoulli numbers)
                results.setdefault(name, {})[impl] = best_of(fn, args.repeat)
    finally:
        kernels.use(previous)

    width = max(map(len, cases))
    head = "".join(f"{i:>12}" for i in impls)
    print(f"{'case':<{width}}{head}{'speedup':>10}")
    for name, row in results.items():
        cells = "".join(f"{row[i]:>11.4f}s" for i in impls)
        ratio = row["python"] / row["cython"] if "cython" in row else float("nan")
        print(f"{name:<{width}}{cells}{ratio:>9.2f}x")
    if args.json:
        with open(args.json, "w") as fh:
            json.dump(results, fh, indent=2)


if __name__ == "__main__":
    main()
