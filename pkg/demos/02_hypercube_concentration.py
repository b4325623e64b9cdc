#!/usr/bin/env python3
"""Watch the intrinsic dimension diverge on a concentrating family.

The n-cube with uniform measure, observed through the normalized
coordinate sum, spreads binomial mass on {0, 1/n, ..., 1}.  Its observable
diameter shrinks like 1/sqrt(n), so the dimension grows roughly linearly:
the hallmark of concentration of measure.
"""

from intrinsic_dim import HypercubeSpec, hamming_cube_structure, intrinsic_dimension_grid

print(f"{'n':>4}  {'integral':>12}  {'dimension':>12}  growth")
previous = None
for n in (1, 2, 4, 8, 16, 32, 64):
    result = intrinsic_dimension_grid(hamming_cube_structure(HypercubeSpec(n)))
    dimension = float(result.dimension)
    growth = f"x{dimension / previous:.2f}" if previous else ""
    print(f"{n:>4}  {float(result.integral):>12.6f}  {dimension:>12.4f}  {growth}")
    previous = dimension

print("\nn = 1 and n = 2 are exact rationals on the default grid:")
for n in (1, 2):
    result = intrinsic_dimension_grid(hamming_cube_structure(HypercubeSpec(n)))
    print(f"  n={n}: integral {result.integral}, dimension {result.dimension}")
