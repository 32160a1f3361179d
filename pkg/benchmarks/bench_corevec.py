#!/usr/bin/env python3
"""Timings for the kernel backends: compiled extension vs pure python.

Micro section times each hot operation on fixed inputs and prints
ns/op with the speedup; macro section runs one verification campaign
per backend in a subprocess, since the backend is chosen at import.
"""

import math
import os
import subprocess
import sys
import time
from importlib import import_module

pure = import_module("ccplane._corevec_py")
try:
    compiled = import_module("ccplane._corevec")
except ImportError:
    compiled = None


def _hyp_point(t: float, theta: float):
    return (
        math.cosh(t),
        math.sinh(t) * math.cos(theta),
        math.sinh(t) * math.sin(theta),
    )


P = _hyp_point(0.7, 0.3)
Q = _hyp_point(1.1, 2.1)
RAW = tuple(1.0000003 * c for c in P)
NORMAL = pure.mnormalize_space(pure.mcross(P, Q))
SP = (0.2, 0.3, math.sqrt(1.0 - 0.04 - 0.09))
SQ = (0.5, -0.1, math.sqrt(1.0 - 0.25 - 0.01))

OPS = [
    ("minner", (P, Q)),
    ("mcross", (P, Q)),
    ("mnormalize_point", (RAW,)),
    ("mdist", (P, Q)),
    ("mtangent", (P, Q)),
    ("mgeo_point", (P, NORMAL, 0.8)),
    ("mreflect", (P, NORMAL)),
    ("mfoot", (P, NORMAL)),
    ("mmid", (P, Q)),
    ("sdist", (SP, SQ)),
]


def bench(fn, args, n=100_000, repeats=3) -> float:
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(n):
            fn(*args)
        best = min(best, time.perf_counter() - start)
    return best / n * 1e9


def micro() -> None:
    print(f"{'op':<18}{'pure ns':>10}{'compiled ns':>14}{'speedup':>10}")
    for name, args in OPS:
        pure_ns = bench(getattr(pure, name), args)
        if compiled is None:
            print(f"{name:<18}{pure_ns:>10.1f}{'-':>14}{'-':>10}")
            continue
        comp_ns = bench(getattr(compiled, name), args)
        print(f"{name:<18}{pure_ns:>10.1f}{comp_ns:>14.1f}"
              f"{pure_ns / comp_ns:>9.1f}x")


def macro() -> None:
    print()
    print("macro: verify euler-ratio --trials 300 --seed 1")
    for backend in ("python", "compiled") if compiled is not None else ("python",):
        env = dict(os.environ, CCPLANE_BACKEND=backend)
        start = time.perf_counter()
        out = subprocess.run(
            [sys.executable, "-m", "ccplane", "verify", "euler-ratio",
             "--trials", "300", "--seed", "1"],
            capture_output=True, env=env,
        )
        elapsed = time.perf_counter() - start
        status = "ok" if out.returncode == 0 else f"exit {out.returncode}"
        print(f"  {backend:<10} {elapsed:6.2f} s  ({status})")


if __name__ == "__main__":
    if compiled is None:
        print("compiled backend not built; timing pure python only")
    micro()
    macro()
