"""Compare the compiled and NumPy kernel backends.

Usage::

    python benchmarks/bench_kernels.py [--batch 256] [--repeat 5]

Times the sparse ternary forward pass of a 784:64:16:10 model at several
sparsities, plus prefix-code packing and unpacking of one million weights.
The dense float forward pass is listed as a reference point.
"""

import argparse
import time

import numpy as np

from lwn import kernels
from lwn.network import Network, NetworkSpec, forward_batch
from lwn.ternary import TernaryModel


def random_model(spec, p0, rng):
    weights, thresholds = [], []
    for fi, fo in spec.shapes:
        w = rng.choice([-1, 1], size=(fi, fo)).astype(np.int8)
        w[rng.random((fi, fo)) < p0] = 0
        weights.append(w)
        thresholds.append(rng.uniform(-1, 1, fo))
    return TernaryModel.from_dense(weights, thresholds)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--batch", type=int, default=256)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = np.random.default_rng(args.seed)
    backends = kernels.available_backends()
    spec = NetworkSpec((784, 64, 16, 10))
    X = rng.random((args.batch, 784))
    print(f"backends: {', '.join(backends)}   batch={args.batch}   best of {args.repeat}")
    print(f"{'kernel':<34}" + "".join(f"{name:>12}" for name in backends))

    for p0 in (0.0, 0.5, 0.9, 0.95):
        model = random_model(spec, p0, rng)

        def run(mod):
            a = X
            for layer in model.layers:
                a = mod.ternary_layer(a, layer.plus_ptr, layer.plus_idx,
                                      layer.minus_ptr, layer.minus_idx, layer.thresholds)
            return a

        cells = [best_of(lambda m=m: run(m), args.repeat) for m in backends.values()]
        print(f"{f'ternary forward p0={p0:.2f}':<34}" + "".join(f"{1e3 * t:>10.2f}ms" for t in cells))

    net = Network(spec, [w.astype(np.float64) for w in model.dense()],
                  [layer.thresholds.copy() for layer in model.layers])
    t = best_of(lambda: forward_batch(net, X), args.repeat)
    print(f"{'dense BLAS forward (reference)':<34}{1e3 * t:>10.2f}ms")

    symbols = rng.choice([-1, 0, 1], size=1_000_000, p=[0.05, 0.9, 0.05]).astype(np.int8)
    packed = {name: m.pack_ternary(symbols) for name, m in backends.items()}
    cells = [best_of(lambda m=m: m.pack_ternary(symbols), args.repeat) for m in backends.values()]
    print(f"{'pack 1M weights (p0=0.90)':<34}" + "".join(f"{1e3 * t:>10.2f}ms" for t in cells))
    data, nbits = next(iter(packed.values()))
    cells = [best_of(lambda m=m: m.unpack_ternary(data, nbits, len(symbols)), args.repeat)
             for m in backends.values()]
    print(f"{'unpack 1M weights (p0=0.90)':<34}" + "".join(f"{1e3 * t:>10.2f}ms" for t in cells))


if __name__ == "__main__":
    main()
