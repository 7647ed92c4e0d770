"""Compare the compiled and pure-Python polynomial kernels.

Run ``python benchmarks/bench_kernels.py``.  Each row times one kernel on
inputs shaped like the ones the toolkit produces (short eps-polynomials with
small or large coefficients), then times a full acceptance criterion with
each backend in a fresh interpreter.
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from ganz import _pykernels as py

try:
    from ganz import _kernels as cy
except ImportError:
    cy = None


def _poly(rng, length, bits):
    return py.trim([rng.randint(-(2**bits), 2**bits) for _ in range(length)])


def workloads(rng):
    small = [(_poly(rng, 5, 8), _poly(rng, 5, 8)) for _ in range(200)]
    large = [(_poly(rng, 8, 120), _poly(rng, 8, 120)) for _ in range(200)]
    common = (1, 3, -2)
    gcds = [(py.pmul(_poly(rng, 4, 6), common), py.pmul(_poly(rng, 4, 6), common)) for _ in range(200)]
    return [
        ("pmul small", "pmul", small),
        ("pmul large", "pmul", large),
        ("padd small", "padd", small),
        ("pgcd", "pgcd", gcds),
    ]


def time_kernel(mod, name, pairs, number):
    fn = getattr(mod, name)
    return min(timeit.repeat(lambda: [fn(a, b) for a, b in pairs], number=number, repeat=5)) / number


def time_criterion(number, pure):
    env = dict(os.environ)
    if pure:
        env["GANZ_PURE_PYTHON"] = "1"
    code = f"from ganz.acceptance import run_criterion; print(run_criterion({number}).seconds)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    return float(out.stdout.strip())


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--number", type=int, default=20)
    ap.add_argument("--criteria", default="1,4,7")
    args = ap.parse_args(argv)
    if cy is None:
        print("compiled kernels not built; nothing to compare")
        return 1
    rng = random.Random(0)
    print(f"{'kernel':<14}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for label, name, pairs in workloads(rng):
        tp = time_kernel(py, name, pairs, args.number) * 1e3
        tc = time_kernel(cy, name, pairs, args.number) * 1e3
        print(f"{label:<14}{tp:>14.3f}{tc:>14.3f}{tp / tc:>9.2f}x")
    print()
    print(f"{'criterion':<14}{'python (s)':>14}{'cython (s)':>14}{'speedup':>10}")
    for n in (int(x) for x in args.criteria.split(",")):
        tp, tc = time_criterion(n, True), time_criterion(n, False)
        print(f"{n:<14}{tp:>14.2f}{tc:>14.2f}{tp / tc:>9.2f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
