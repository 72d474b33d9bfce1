"""Continuity of the derivative in its order.

D^{n + 1/k} should approach D^n as k grows.  The table below tracks the
sup-distance between the two (over the central half of the grid) for
n = 0, 1, 2 and k = 10 ... 1000.

At n >= 1 the gap falls roughly like 1/k.  At n = 0 it stalls: the
finite zero-frequency bin of the discrete transform contributes an
order-dependent offset that does not shrink with k, a floor of the
discretization rather than of the identity itself.
"""
import numpy as np

from fracspectral import make_grid, order_continuity_gap, sample

grid = make_grid(-16.0, 16.0, 4096)
sig = sample(lambda x: np.exp(-x * x), grid)

ks = (10, 30, 100, 300, 1000)
print("sup |D^(n+1/k) f - D^n f|  on the central half")
print(f"{'n':>3}" + "".join(f"{'k=' + str(k):>12}" for k in ks))
for n in (0, 1, 2):
    gaps = [order_continuity_gap(sig, n, k) for k in ks]
    print(f"{n:>3}" + "".join(f"{g:>12.2e}" for g in gaps))

print()
print("ratio gap(k=1000)/gap(k=10):")
for n in (0, 1, 2):
    g10 = order_continuity_gap(sig, n, 10)
    g1000 = order_continuity_gap(sig, n, 1000)
    print(f"  n={n}: {g1000 / g10:.3f}")
