#!/usr/bin/env python3
"""Benchmark the congruence-closure kernels (compiled vs pure Python).

The closure of a positive word under the defining relations is the hot
inner loop of the package: element interning, divisibility, gcds and
divisor enumeration all funnel into it.  This script times both backends
on the same workloads.

Run from the repository root after building the extension in place:

    python setup.py build_ext --inplace
    python benchmarks/bench_closure.py
"""

import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from multifrac import ArtinPresentation  # noqa: E402
from multifrac import _closure_py  # noqa: E402

try:
    from multifrac import _closure_cy
except ImportError:
    _closure_cy = None


def rules_of(pres):
    out = []
    for rel in pres.relations():
        lhs, rhs = pres.encode(rel.lhs), pres.encode(rel.rhs)
        out.append((lhs, rhs))
        out.append((rhs, lhs))
    return tuple(out)


def workload(pres, count, length, seed):
    rng = random.Random(seed)
    n = len(pres.generators)
    return [bytes(rng.randrange(n) for _ in range(length)) for _ in range(count)]


def run(kernel, words, rules):
    t0 = time.perf_counter()
    total = 0
    for w in words:
        total += len(kernel.congruence_class(w, rules))
    return time.perf_counter() - t0, total


def main():
    cases = [
        ("pair m=3, wl 10", ArtinPresentation("ab", {("a", "b"): 3}), 2000, 10),
        ("pair m=4, wl 12", ArtinPresentation("ab", {("a", "b"): 4}), 1000, 12),
        (
            "all-threes, wl 12",
            ArtinPresentation("abc", {("a", "b"): 3, ("b", "c"): 3, ("a", "c"): 3}),
            1000,
            12,
        ),
        (
            "all-threes, wl 16",
            ArtinPresentation("abc", {("a", "b"): 3, ("b", "c"): 3, ("a", "c"): 3}),
            300,
            16,
        ),
    ]
    print(f"{'workload':<22} {'pure (s)':>10} {'cython (s)':>12} {'speedup':>9}")
    for label, pres, count, length in cases:
        rules = rules_of(pres)
        words = workload(pres, count, length, seed=42)
        t_py, n_py = run(_closure_py, words, rules)
        if _closure_cy is None:
            print(f"{label:<22} {t_py:>10.3f} {'n/a':>12} {'-':>9}")
            continue
        t_cy, n_cy = run(_closure_cy, words, rules)
        assert n_py == n_cy, "kernels disagree"
        print(f"{label:<22} {t_py:>10.3f} {t_cy:>12.3f} {t_py / t_cy:>8.2f}x")
    if _closure_cy is None:
        print("\ncompiled kernel not built; run: python setup.py build_ext --inplace")


if __name__ == "__main__":
    main()
