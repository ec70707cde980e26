#!/usr/bin/env python3
"""Benchmark the row-reduction kernels (pure Python vs compiled twin).

Two workloads:
  * the real hot path: derivation-equation systems of family algebras
    (dim^3-ish rows by dim^2 columns, sparse small integers)
  * dense random integer matrices

Run after building the extension (pip install -e .); without the compiled
kernel only the pure timing is reported.
"""

from __future__ import annotations

import random
import time

from leibnizalg.derivations import _derivation_rows
from leibnizalg.families import make_F1, make_F2j
from leibnizalg.linalg import _int_rows, available_kernels


def _time_kernel(kernel, rows, ncols, repeats=3):
    best = None
    for _ in range(repeats):
        work = [r[:] for r in rows]
        t0 = time.perf_counter()
        kernel.rref_int(work, ncols)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def workloads():
    for n in (7, 8, 9):
        alg = make_F1(n, {}, 1)
        rows = _int_rows(_derivation_rows(alg))
        yield f"derivation system F1(0,..,0,1) n={n} ({len(rows)}x{alg.dim ** 2})", rows, alg.dim**2
    alg = make_F2j(9, 4)
    rows = _int_rows(_derivation_rows(alg))
    yield f"derivation system F2^4 n=9 ({len(rows)}x{alg.dim ** 2})", rows, alg.dim**2
    rng = random.Random(0)
    for size in (60, 100, 140):
        rows = [[rng.randint(-50, 50) for _ in range(size)] for _ in range(size)]
        yield f"dense random {size}x{size}", rows, size


def main():
    kernels = available_kernels()
    names = list(kernels)
    print(f"kernels available: {', '.join(names)}")
    header = f"{'workload':48s}" + "".join(f"{name:>12s}" for name in names)
    if len(names) == 2:
        header += f"{'speedup':>10s}"
    print(header)
    for label, rows, ncols in workloads():
        times = [_time_kernel(kernels[name], rows, ncols) for name in names]
        line = f"{label:48s}" + "".join(f"{t * 1000:10.1f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            line += f"{times[0] / times[1]:9.2f}x"
        print(line)


if __name__ == "__main__":
    main()
