#!/usr/bin/env python3
"""Benchmark the compiled kernel against the pure-Python fallback.

Workloads: raw field multiplication at several cyclotomic orders, stacked
incidence determinants over the quintic atlas, and the end-to-end Fermat
model build (the dominant cost in normal use).  Both backends produce
bit-identical results; this script only compares wall time.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import random
import time

from acmcurves import kernel
from acmcurves.cyclo import get_order, rational, zeta
from acmcurves.geometry import stacked_determinant
from acmcurves.surfaces import build_fermat_model


def random_elements(n, count, seed):
    rng = random.Random(seed)
    phi = get_order(n).phi
    out = []
    for _ in range(count):
        val = rational(rng.randint(-9, 9), rng.randint(1, 9)).lift(n)
        for i in range(phi):
            c = rng.randint(-9, 9)
            if c:
                val = val + c * zeta(n, i)
        out.append(val)
    return out


def bench_mul(n, repeat):
    elements = random_elements(n, 200, seed=n)
    pairs = [(a, b) for a in elements[:100] for b in elements[100:]]
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for a, b in pairs:
            a * b
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return len(pairs) / best  # multiplications per second


def bench_determinants(repeat):
    model = build_fermat_model(5)
    lines = model.lines[:30]
    pairs = [(a, b) for i, a in enumerate(lines) for b in lines[i + 1 :]]
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        for a, b in pairs:
            stacked_determinant(a, b)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return len(pairs) / best  # determinants per second


def bench_build(repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        build_fermat_model(5)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = kernel.available()
    if len(backends) < 2:
        print("only the pure-Python backend is available; timing it alone")

    rows = []
    for name in backends:
        kernel.use(name)
        row = {"backend": name}
        for n in (5, 8, 40):
            row[f"mul@zeta{n} (ops/s)"] = bench_mul(n, args.repeat)
        row["incidence dets (ops/s)"] = bench_determinants(args.repeat)
        row["fermat5 build (s)"] = bench_build(args.repeat)
        rows.append(row)

    keys = [k for k in rows[0] if k != "backend"]
    width = max(len(k) for k in keys) + 2
    header = "metric".ljust(width) + "".join(f"{r['backend']:>14}" for r in rows)
    print(header)
    print("-" * len(header))
    for key in keys:
        line = key.ljust(width)
        for r in rows:
            val = r[key]
            line += f"{val:14.0f}" if "ops/s" in key else f"{val:14.3f}"
        print(line)
    if len(rows) == 2:
        print()
        for key in keys:
            a, b = rows[0][key], rows[1][key]
            if "ops/s" in key:
                ratio = b / a if rows[0]["backend"] == "python" else a / b
            else:
                ratio = a / b if rows[0]["backend"] == "python" else b / a
            print(f"compiled speedup on {key}: {ratio:.2f}x")

    kernel.use("compiled" if "compiled" in kernel.available() else "python")


if __name__ == "__main__":
    main()
