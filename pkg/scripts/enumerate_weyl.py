#!/usr/bin/env python3
"""Enumerate the little Weyl group and print its headline facts.

First run builds the 40 reflections and closes the group (minutes); results
are cached on disk keyed by the structure-constant hash, so later runs are
fast.
"""

import sys
import time

from triv9.cartan import (build_cartan, four_generator_subset, stabilizer_Wp,
                          weyl_group)
from triv9.galois import h1_weyl_is_trivial
from triv9.weylgroup import conjugacy_orbit


def main() -> int:
    t0 = time.time()
    data = build_cartan()
    print(f"reflections: {len(data.reflections)} ({time.time()-t0:.1f}s)")
    W = weyl_group()
    print(f"order: {W.order} (155520 = 2^7 * 3^5 * 5)")
    orb = conjugacy_orbit(W.group, W.reflection_indices[0], W.reflection_indices)
    print(f"reflection conjugacy class size: {len(orb)}")
    sub = four_generator_subset(W)
    print(f"four-element generating subset: {sub}")
    print(f"stabilizer of a generic point: {len(stabilizer_Wp(W, [1, 2, -3, 5]))}")
    print(f"H1(W) trivial: {h1_weyl_is_trivial(W)}")
    print(f"total {time.time()-t0:.1f}s")
    return 0


if __name__ == "__main__":
    sys.exit(main())
