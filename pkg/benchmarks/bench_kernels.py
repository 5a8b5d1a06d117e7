#!/usr/bin/env python3
"""Benchmark the hot kernels: numba fast path vs pure-numpy fallback.

Times the quadrature slab combine (the inner loop of the torus quadrature
oracle) and the 2-variable torus grid evaluation on workloads shaped like
the real acceptance runs, then prints both timings and the speedup.

Run:  python benchmarks/bench_kernels.py
The numba path is skipped (with a note) when numba is unavailable or
SCHUBERT_PURE_NUMPY is set.
"""

import itertools
import time

import numpy as np

from schubertcount import kernels
from schubertcount.combinatorics import Partition
from schubertcount.counts import complex_root_poly, real_root_poly
from schubertcount.schur import numeric_schur_coefficient, quadrature_threshold

REPEATS = 3


def _perm_arrays(k):
    perms, signs = [], []
    for perm in itertools.permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        perms.append(perm)
        signs.append(-1.0 if inv % 2 else 1.0)
    return np.array(perms, np.int64), np.array(signs, np.float64)


def time_fn(fn, *args):
    best = float("inf")
    result = None
    for _ in range(REPEATS):
        t = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t)
    return best, result


def bench_quadrature_slab():
    # slab shaped like the d=3, k=4 complex oracle at grid 41
    k, g = 4, 41
    rng = np.random.default_rng(0)
    fvals = (rng.normal(size=g ** (k - 1)) + 1j * rng.normal(size=g ** (k - 1))).astype(np.complex128)
    zgrid = np.exp(2j * np.pi * np.arange(g) / g)
    gammas = np.array([8, 7, 6, 5], np.int64)
    perms, signs = _perm_arrays(k)
    args = (fvals, complex(zgrid[7]), zgrid.astype(np.complex128), gammas, perms, signs, 1)

    rows = []
    t_np, ref = time_fn(kernels.quadrature_slab_numpy, *args)
    rows.append(("numpy", t_np, ref))
    if kernels.backend() == "numba":
        kernels.quadrature_slab(*args)  # warm the JIT
        t_nb, out = time_fn(kernels.quadrature_slab, *args)
        rows.append(("numba", t_nb, out))
        assert abs(out - ref) <= 1e-9 * max(1.0, abs(ref))
    return f"quadrature_slab (k={k}, grid={g}, {g**(k-1)} nodes)", rows


def bench_torus_grid_eval():
    poly = real_root_poly(7, 2).poly
    terms = poly.sorted_terms()
    exps = np.array([e for e, _ in terms], np.int64)
    coeffs = np.array([float(c) for _, c in terms], np.float64)
    g = 720
    args = (exps, coeffs, 30, g)

    rows = []
    t_np, ref = time_fn(kernels.torus_grid_eval_numpy, *args)
    rows.append(("numpy", t_np, None))
    if kernels.backend() == "numba":
        kernels.torus_grid_eval(*args)  # warm the JIT
        t_nb, out = time_fn(kernels.torus_grid_eval, *args)
        rows.append(("numba", t_nb, None))
        assert np.max(np.abs(out - ref)) <= 1e-9 * np.max(np.abs(ref))
    return f"torus_grid_eval (d=7, {len(terms)} terms, {g}x{g} grid)", rows


def bench_full_oracle():
    root = complex_root_poly(3, 4)
    alpha = Partition((5, 5, 5, 5))
    grid = quadrature_threshold(root, alpha)
    numeric_schur_coefficient(root, alpha, grid=grid)  # warm caches and JIT

    def run():
        return numeric_schur_coefficient(root, alpha, grid=41)

    t, out = time_fn(run)
    label = f"numeric_schur_coefficient d=3 k=4 @41 [{kernels.backend()} backend]"
    return label, [(kernels.backend(), t, out)]


def main():
    print(f"kernel backend: {kernels.backend()}")
    if kernels.backend() != "numba":
        print("numba unavailable or disabled (SCHUBERT_PURE_NUMPY); numpy timings only\n")
    for label, rows in (bench_quadrature_slab(), bench_torus_grid_eval(), bench_full_oracle()):
        print(label)
        base = None
        for name, t, _ in rows:
            line = f"  {name:<6} {t * 1e3:9.2f} ms"
            if base is None:
                base = t
            else:
                line += f"   ({base / t:.1f}x vs numpy)"
            print(line)
        print()


if __name__ == "__main__":
    main()
