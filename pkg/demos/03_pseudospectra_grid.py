"""sigma_min(zI - A) on a grid, for both matrices of a constructed pair.

Prints a coarse picture of which eps-pseudospectra each grid point belongs to;
the two pictures are identical.
"""
import numpy as np

from pseudopairs import ConstructionInput, GridSpec, build_pair, pseudospectrum_grid

pair = build_pair(ConstructionInput("powers", 2, n=2, m=5))
print("t =", pair.t)
g = GridSpec(-1.0, 3.0, -2.0, 2.0, 40, 20)  # avoids the eigenvalue 1
sa = pseudospectrum_grid(pair.A, g)
sb = pseudospectrum_grid(pair.B, g)
print("max relative difference over the grid:", np.max(np.abs(sa - sb) / sb))

# eps levels at the quintiles of the A grid, on a log scale
levels = 10.0 ** np.quantile(np.log10(sa), [0.2, 0.4, 0.6, 0.8])
chars = "#%+-."


def picture(s):
    idx = np.searchsorted(levels, s)          # 0 means inside the smallest level
    return "\n".join("".join(chars[k] for k in row) for row in idx[::-1])


print("\nlevels:", ", ".join(f"{x:.2e}" for x in levels), " (# is inside the smallest)")
print("\nA")
print(picture(sa))
print("\nB")
print(picture(sb))
