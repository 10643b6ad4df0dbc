"""Which symmetric A give a symplectic derivation D_A of g0(s, t)?

Scans random symmetric matrices and reports, for each, the residual J D + D^T J
and whether A commutes with the 3x3 exchange matrix.

    python scripts/lauret_family.py --count 20
"""

import argparse
import random
from fractions import Fraction

from orbitkit import library
from orbitkit.lie import SymplecticForm, check_symplectic_derivation


def _exchange_commutes(A):
    E = [[0, 0, 1], [0, 1, 0], [1, 0, 0]]
    AE = [[sum(A[i][k] * E[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    EA = [[sum(E[i][k] * A[k][j] for k in range(3)) for j in range(3)] for i in range(3)]
    return AE == EA


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=12)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--s", default="2")
    ap.add_argument("--t", default="3")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    g0 = library.lauret_g0(Fraction(args.s), Fraction(args.t))
    omega = SymplecticForm(library.LAURET_J)
    samples = [library.IDENTITY3, [[1, 0, 2], [0, 3, 0], [2, 0, 1]]]
    while len(samples) < args.count:
        A = [[0] * 3 for _ in range(3)]
        for i in range(3):
            for j in range(i, 3):
                A[i][j] = A[j][i] = rng.randint(-3, 3)
        samples.append(A)
    print(f"{'A':<34} {'deriv':>5} {'D^2=0':>5} {'sympl':>5} {'commutes':>8}")
    for A in samples:
        r = check_symplectic_derivation(library.lauret_D(A), omega, g0)
        text = ";".join(",".join(str(x) for x in row) for row in A)
        print(f"{text:<34} {r.derivation!s:>5} {r.nilpotency_index == 2!s:>5} {r.symplectic!s:>5} {_exchange_commutes(A)!s:>8}")


if __name__ == "__main__":
    main()
