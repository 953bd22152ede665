"""Compare the compiled and pure-Python integer kernels.

    python benchmarks/bench_kernels.py [--repeat N] [--seed S]

Times each kernel on the same inputs under both backends, checks that the
results agree, and prints a table. Also times one end-to-end suite run per
backend in a subprocess (the backend is chosen at import time).
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import time
import timeit

from arrowcat.exactmat import _pykernels

try:
    from arrowcat.exactmat import _ckernels
except ImportError:
    _ckernels = None


def sparse(rng: random.Random, rows: int, cols: int, density: float, lo: int = -9, hi: int = 9):
    out = []
    for _ in range(rows):
        row = []
        for j in range(cols):
            if rng.random() < density:
                x = rng.randint(lo, hi)
                if x:
                    row.append((j, x))
        out.append(tuple(row))
    return tuple(out)


def dense(rng: random.Random, rows: int, cols: int):
    return [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]


def cases(rng: random.Random):
    a = sparse(rng, 60, 60, 0.5)
    b = sparse(rng, 60, 60, 0.5)
    yield "matmul 60x60 (50% fill)", "matmul", (a, b)
    p = sparse(rng, 216, 216, 0.02, 0, 1)
    q = sparse(rng, 216, 216, 0.02, 0, 1)
    yield "matmul 216x216 (2% fill)", "matmul", (p, q)
    k1, k2 = sparse(rng, 12, 12, 0.6), sparse(rng, 12, 12, 0.6)
    yield "kron 12x12 (x) 12x12", "kron", (k1, k2, 12)
    g = dense(rng, 24, 48)
    yield "gauss_jordan 24x48", "gauss_jordan", (g, 24)
    # every entry shares the factor 6, so the gcd scan cannot stop early
    c = tuple(tuple((j, 6 * x) for j, x in row) for row in a)
    yield "content 60x60 (full scan)", "content", (c, 6 * 2 ** 40)


def fresh(args):
    # elimination works in place
    return tuple([list(r) for r in x] if isinstance(x, list) else x for x in args)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--no-suite", action="store_true", help="skip the end-to-end suite timing")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled kernels are not built; run `pip install --no-build-isolation -e .` first")
        return 1
    rng = random.Random(args.seed)
    print(f"{'kernel':28s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for label, fn, inputs in cases(rng):
        py, cy = getattr(_pykernels, fn), getattr(_ckernels, fn)
        a1, a2 = fresh(inputs), fresh(inputs)
        r1, r2 = py(*a1), cy(*a2)
        if r1 != r2 or (fn == "gauss_jordan" and a1[0] != a2[0]):
            print(f"{label}: backends disagree")
            return 1
        tp = min(timeit.repeat(lambda: py(*fresh(inputs)), number=1, repeat=args.repeat)) * 1e3
        tc = min(timeit.repeat(lambda: cy(*fresh(inputs)), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:28s} {tp:10.3f} {tc:10.3f} {tp / tc:7.1f}x")
    if not args.no_suite:
        code = "from arrowcat.suites import run_suite; run_suite('hopf')"
        for name, env in (("python", {"ARROWCAT_PURE_PYTHON": "1"}), ("cython", {})):
            e = {k: v for k, v in os.environ.items() if k != "ARROWCAT_PURE_PYTHON"}
            e.update(env)
            t = time.perf_counter()
            subprocess.run([sys.executable, "-c", code], env=e, check=True)
            print(f"suite hopf, {name} backend: {time.perf_counter() - t:.2f} s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
