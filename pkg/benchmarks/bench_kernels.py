"""Benchmark the compiled matrix kernels against the pure-Python ones.

Times the raw kernel operations (4x4 complex multiply, matrix-vector
apply, magnitude scan, exponential) and one end-to-end covariance
fuzz pass.  Run from a build with the extension present; the pure
path is forced via DIRACSPLIT_PURE_PYTHON in a subprocess so both
variants are measured in one invocation.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time


def _rand_mat(rng: random.Random, n: int) -> tuple:
    return tuple(
        complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(n * n)
    )


def bench_kernels(repeats: int) -> dict:
    from diracsplit.kernels import IMPLEMENTATION, expm, max_abs, mul, mul_vec

    rng = random.Random(0xBE9C4)
    mats = [_rand_mat(rng, 4) for _ in range(64)]
    vecs = [tuple(complex(rng.uniform(-2, 2), rng.uniform(-2, 2)) for _ in range(4))
            for _ in range(64)]

    results = {"implementation": IMPLEMENTATION}

    t0 = time.perf_counter()
    for _ in range(repeats):
        for a, b in zip(mats, mats[1:]):
            mul(4, a, b)
    results["mul_us"] = (time.perf_counter() - t0) / (repeats * 63) * 1e6

    t0 = time.perf_counter()
    for _ in range(repeats):
        for a, v in zip(mats, vecs):
            mul_vec(4, a, v)
    results["mul_vec_us"] = (time.perf_counter() - t0) / (repeats * 64) * 1e6

    t0 = time.perf_counter()
    for _ in range(repeats):
        for a in mats:
            max_abs(a)
    results["max_abs_us"] = (time.perf_counter() - t0) / (repeats * 64) * 1e6

    small = [tuple(z * 0.4 for z in m) for m in mats[:16]]
    t0 = time.perf_counter()
    for _ in range(repeats):
        for a in small:
            expm(4, a, 1e-15)
    results["expm_us"] = (time.perf_counter() - t0) / (repeats * 16) * 1e6

    from diracsplit.suites import RunConfig, run

    t0 = time.perf_counter()
    run(RunConfig(suite="covariance", trials=100))
    results["covariance_suite_ms"] = (time.perf_counter() - t0) * 1e3
    return results


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeats", type=int, default=200)
    parser.add_argument("--inner", action="store_true",
                        help=argparse.SUPPRESS)  # emit JSON for the parent
    args = parser.parse_args()

    results = bench_kernels(args.repeats)
    if args.inner:
        json.dump(results, sys.stdout)
        return 0

    rows = [results]
    if results["implementation"] != "pure-python":
        env = dict(os.environ, DIRACSPLIT_PURE_PYTHON="1")
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__),
             "--repeats", str(args.repeats), "--inner"],
            env=env, capture_output=True, text=True, check=True,
        )
        rows.append(json.loads(proc.stdout))

    names = ("mul_us", "mul_vec_us", "max_abs_us", "expm_us",
             "covariance_suite_ms")
    header = f"{'metric':<22}" + "".join(
        f"{r['implementation']:>14}" for r in rows
    )
    print(header)
    for name in names:
        line = f"{name:<22}" + "".join(f"{r[name]:>14.2f}" for r in rows)
        if len(rows) == 2 and rows[0][name] > 0:
            line += f"   x{rows[1][name] / rows[0][name]:.1f}"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
