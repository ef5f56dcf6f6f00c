"""Time the compiled kernels against the pure-Python fallback on orbit-sized workloads.

Run with `python3 benchmarks/bench_kernels.py [--repeat N]`.
"""

from __future__ import annotations

import argparse
import random
import time
from typing import Callable

from unitary_simples import kernels
from unitary_simples.alcove import rho
from unitary_simples.partitions import ChargeContext


def _workloads(seed: int) -> dict[str, Callable[[], object]]:
    rng = random.Random(seed)
    ctx = ChargeContext(e=13, level=3, charge=(0, 4, 8), h=4)
    r = rho(ctx)
    points = [tuple(sorted((rng.randrange(30) for _ in range(4)), reverse=True)) * 3 for _ in range(2000)]
    cols = [tuple(rng.randrange(12) for _ in range(6)) for _ in range(5000)]
    steps = [[rng.randrange(12) for _ in range(60)] for _ in range(300)]

    def hyperplanes() -> int:
        return sum(kernels.hyperplane_count(x, r, ctx.e) for x in points)

    def alcove() -> int:
        return sum(kernels.in_alcove(x, r, ctx.e) for x in points)

    def degrees() -> int:
        return sum(kernels.path_degree(s, r, ctx.e) for s in steps)

    def hd() -> int:
        return sum(kernels.bead_hd(c) for c in cols)

    def orbit() -> int:
        return sum(kernels.bead_hd(c) for c in kernels.compositions(9, 6))

    return {"hyperplane_count": hyperplanes, "in_alcove": alcove, "path_degree": degrees, "bead_hd": hd, "orbit_hd": orbit}


def _best(fn: Callable[[], object], repeat: int) -> tuple[float, object]:
    best = float("inf")
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        best = min(best, time.perf_counter() - t0)
    return best, value


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    backends = kernels.available_backends()
    original = kernels.BACKEND
    results: dict[str, dict[str, tuple[float, object]]] = {}
    for backend in backends:
        kernels.use_backend(backend)
        results[backend] = {name: _best(fn, args.repeat) for name, fn in _workloads(args.seed).items()}
    kernels.use_backend(original)

    header = f"{'kernel':<18}" + "".join(f"{b:>12}" for b in backends) + ("     speedup" if len(backends) > 1 else "")
    print(header)
    for name in results[backends[0]]:
        row = f"{name:<18}" + "".join(f"{results[b][name][0] * 1e3:>10.2f}ms" for b in backends)
        if len(backends) > 1:
            values = {results[b][name][1] for b in backends}
            if len(values) != 1:
                raise SystemExit(f"backends disagree on {name}: {values}")
            row += f"{results['python'][name][0] / results['compiled'][name][0]:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
