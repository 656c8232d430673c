"""Time the numba kernels against their numpy twins.

    python benchmarks/bench_kernels.py --repeat 20

Set GRAPHDECONV_DISABLE_NUMBA=1 to confirm the library runs on the numpy path alone.
"""

import argparse
import timeit

import numpy as np

from graphdeconv import _kernels
from graphdeconv.graph import grid8_graph


def cases(rng):
    X = rng.standard_normal((784, 4, 64))
    t = rng.uniform(0.1, 1.0, 64)
    A = np.ascontiguousarray(grid8_graph(28, 28).adjacency())
    order = rng.permutation(784).astype(np.int64)
    F = rng.random((1072, 8, 64))
    out, arg = _kernels.pool_pairs_numpy(F)
    G = rng.standard_normal(out.shape)
    return {
        "sparse_group_prox (784x4x64)": (lambda: _kernels.sparse_group_prox_numpy(X, t, 0.2),
                                         lambda: _kernels.sparse_group_prox_jit(X, t, 0.2)),
        "graclus_match (28x28 grid)": (lambda: _kernels.graclus_match_numpy(A, order),
                                       lambda: _kernels.graclus_match_jit(A, order)),
        "pool_pairs (1072x8x64)": (lambda: _kernels.pool_pairs_numpy(F), lambda: _kernels.pool_pairs_jit(F)),
        "unpool_pairs (536x8x64)": (lambda: _kernels.unpool_pairs_numpy(G, arg),
                                    lambda: _kernels.unpool_pairs_jit(G, arg)),
    }


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--repeat", type=int, default=10)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)
    if not _kernels.NUMBA_AVAILABLE:
        raise SystemExit("numba is not available (or disabled); nothing to compare")
    rng = np.random.default_rng(args.seed)
    print(f"{'kernel':32s} {'numpy ms':>10s} {'numba ms':>10s} {'speedup':>8s}")
    for name, (np_fn, jit_fn) in cases(rng).items():
        jit_fn()  # compile outside the timing
        t_np = min(timeit.repeat(np_fn, number=1, repeat=args.repeat)) * 1e3
        t_jit = min(timeit.repeat(jit_fn, number=1, repeat=args.repeat)) * 1e3
        print(f"{name:32s} {t_np:10.3f} {t_jit:10.3f} {t_np / t_jit:7.1f}x")


if __name__ == "__main__":
    main()
