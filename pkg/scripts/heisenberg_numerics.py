"""Discretized quantization on the Heisenberg orbit: oracle error and norm stabilization by grid size.

    python scripts/heisenberg_numerics.py --sizes 32 64 128 256 --out norms.txt
"""

import argparse
import time

import numpy as np

from orbitkit.errors import GridTooCoarse
from orbitkit.numeric import (
    GridSpec,
    HeisenbergModel,
    discretize_op,
    gaussian_comparison,
    opnorm_estimate,
    sample_symbol,
    sech_product,
    write_matrix,
)


def _error(n, lam, rule):
    try:
        return f"{gaussian_comparison(n, lam=lam, rule=rule).error:.2e}"
    except GridTooCoarse:
        return "coarse"


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[32, 64, 128, 256])
    ap.add_argument("--lam", type=float, default=1.0)
    ap.add_argument("--extent", type=float, default=6.0)
    ap.add_argument("--out", help="write the largest sech matrix here")
    args = ap.parse_args()

    print(f"{'n':>5} {'gauss err':>10} {'GL err':>10} {'sech norm':>12} {'seconds':>8}")
    last = None
    for n in args.sizes:
        start = time.perf_counter()
        err = _error(n, args.lam, "trapezoid")
        gl = _error(n, args.lam, "gauss-legendre")
        grid = GridSpec(n, args.extent)
        try:
            M = discretize_op(sample_symbol(sech_product, grid, args.lam), HeisenbergModel(args.lam))
            norm = f"{opnorm_estimate(M):.8f}"
            last = M
        except GridTooCoarse:
            norm = "coarse"
        print(f"{n:>5} {err:>10} {gl:>10} {norm:>12} {time.perf_counter() - start:>8.2f}")
    if args.out and last is not None:
        write_matrix(args.out, last)
        print("wrote", args.out, last.shape, "hermitian defect", float(np.abs(last - last.conj().T).max()))


if __name__ == "__main__":
    main()
