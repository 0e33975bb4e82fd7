#!/usr/bin/env python3
"""Benchmark the coloring-search kernels: compiled extension vs pure Python.

Workloads: the two demo refutation systems (deep propagation, zero
colorings) and synthetic book systems (one spine ray shared by k tripods,
count 2^k + 1, exercising the enumeration side of the search).

Usage: python benchmarks/bench_solver.py [--repeat N]
"""

from __future__ import annotations

import argparse
import math
import time

from ksgeom import kernels
from ksgeom.demos import demo_first_proof, demo_second_proof
from ksgeom.sphere import canonicalize, complete_tripod
from ksgeom.system import TriadSystem
from ksgeom.trace import extract_triad_system


def book_system(pages: int) -> TriadSystem:
    spine = canonicalize((0.3, 0.4, math.sqrt(1 - 0.25)))
    base = complete_tripod(spine)
    rays = [base.a, base.b, base.c]
    triads = [(0, 1, 2)]
    for i in range(1, pages):
        phi = i * math.pi / (2.0 * pages)
        c, s = math.cos(phi), math.sin(phi)
        u = canonicalize(tuple(c * x + s * y for x, y in zip(base.b.vec, base.c.vec)))
        v = canonicalize(tuple(-s * x + c * y for x, y in zip(base.b.vec, base.c.vec)))
        rays += [u, v]
        triads.append((0, len(rays) - 2, len(rays) - 1))
    return TriadSystem(rays=tuple(rays), triads=tuple(triads))


def bench(name: str, system: TriadSystem, mode: int, repeat: int) -> None:
    tri = [tuple(t) for t in system.triads]
    prs = [tuple(p) for p in system.pairs]
    results = {}
    timings = {}
    for backend in kernels.available_backends():
        best = math.inf
        for _ in range(repeat):
            t0 = time.perf_counter()
            out = kernels.solve_kernel(system.n_rays, tri, prs, mode, backend=backend)
            best = min(best, time.perf_counter() - t0)
        results[backend] = out
        timings[backend] = best
    values = list(results.values())
    agree = all(v == values[0] for v in values)
    count, nodes, _, _ = values[0]
    line = f"{name:<28} rays={system.n_rays:<5} count={count:<8} nodes={nodes:<9}"
    for backend, t in timings.items():
        line += f" {backend}={t * 1e3:9.3f}ms"
    if len(timings) == 2:
        line += f"  speedup={timings['py'] / timings['c']:6.1f}x"
    line += "" if agree else "  BACKENDS DISAGREE"
    print(line)
    if not agree:
        raise SystemExit(1)


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    print(f"available backends: {', '.join(kernels.available_backends())} "
          f"(default: {kernels.BACKEND})")

    first = extract_triad_system(demo_first_proof(canonicalize((0, math.sin(0.3), math.cos(0.3)))))
    second = extract_triad_system(demo_second_proof())
    bench("demo-first COUNT", first, kernels.MODE_COUNT, args.repeat)
    bench("demo-first PROVE_NONE", first, kernels.MODE_PROVE_NONE, args.repeat)
    bench("demo-second COUNT", second, kernels.MODE_COUNT, args.repeat)
    bench("demo-second PROVE_NONE", second, kernels.MODE_PROVE_NONE, args.repeat)
    for pages in (10, 14, 17):
        bench(f"book-{pages} COUNT", book_system(pages), kernels.MODE_COUNT, args.repeat)


if __name__ == "__main__":
    main()
