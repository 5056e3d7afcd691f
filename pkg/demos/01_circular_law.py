"""Circular law warm-up: sample a Ginibre matrix, look at its spectrum.

Draws a single n = 500 matrix, prints the fraction of eigenvalues inside
the unit disk and a coarse radial histogram against the flat-density
prediction, then shows that the one-point correlation rho_1/n evaluated
through the kernel matches 1/pi inside and ~0 outside.
"""

import math

import numpy as np

from gaplab import CorrelationRequest, EnsembleKind, eigvals_general, rho_k, sample_ginibre

n = 500
vals = eigvals_general(sample_ginibre(n, seed=1).matrix).values
inside = np.mean(np.abs(vals) < 1.0)
print(f"n = {n}: fraction of eigenvalues with |z| < 1: {inside:.3f}")

print("\nradial density (eigenvalue share per annulus, flat prediction in brackets):")
edges = np.linspace(0, 1.0, 6)
for lo, hi in zip(edges, edges[1:]):
    share = np.mean((np.abs(vals) >= lo) & (np.abs(vals) < hi))
    predicted = hi**2 - lo**2
    print(f"  [{lo:.1f}, {hi:.1f}): {share:.3f}  [{predicted:.3f}]")

print("\nscaled one-point function rho_1/n via the kernel (n = 100):")
for r in (0.0, 0.5, 0.9, 1.5):
    val = rho_k(CorrelationRequest(EnsembleKind.GINIBRE, (complex(r),), 100)) / 100
    print(f"  |z| = {r}: {val:.6f}   (1/pi = {1/math.pi:.6f} inside, 0 outside)")
