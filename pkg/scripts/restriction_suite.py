"""Random (algebra, ideal, functional) instances: do the three restriction conditions agree?

    python scripts/restriction_suite.py --count 300 --seed 1
"""

import argparse
import time
from collections import Counter

from orbitkit.generators import random_instances
from orbitkit.orbits import prop31_check, prop32_check


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-dim", type=int, default=6)
    args = ap.parse_args()

    start = time.perf_counter()
    kinds, verdicts = Counter(), Counter()
    disagree = codim1 = mismatch = 0
    for inst in random_instances(args.count, args.seed, args.max_dim):
        g = inst.algebra
        rep = prop32_check(g, inst.ideal, inst.xi, restrict=False)
        kinds[inst.kind.split("+")[0]] += 1
        verdicts[rep.verdict] += 1
        if not rep.agree:
            disagree += 1
            print("disagreement:", inst.kind, g.to_dsl().replace("\n", "; "))
        if len(inst.ideal) == g.dim - 1:
            codim1 += 1
            mismatch += prop31_check(g, inst.ideal, inst.xi).verdict != rep.verdict
    print(f"instances        {args.count} ({dict(kinds)})")
    print(f"restriction ok   {verdicts[True]}, not ok {verdicts[False]}")
    print(f"disagreements    {disagree}")
    print(f"codim-1 ideals   {codim1}, ideal-orbit check mismatches {mismatch}")
    print(f"time             {time.perf_counter() - start:.2f} s")


if __name__ == "__main__":
    main()
