"""How far can the (9,10) entry of A grow before the pseudospectra split?

The certified mu' is at most half of inf max(|P1|, |P2|), so there is slack:
scaling the entry by a modest factor still leaves the 2x2 block dominated.
The split appears first near w = 1 + 1/z for the roots z of P1.
"""
import numpy as np

from pseudopairs import ConstructionInput, build_pair, pseudospectra_equal_sampled
from pseudopairs.construct import critical_samples
from pseudopairs.spectral import standard_samples

pair = build_pair(ConstructionInput("powers", 1e4, n=2, m=3))
samples = np.concatenate([standard_samples(0, center=1.0), critical_samples(pair.u, pair.c, 1.0)])
for k in (1, 2, 4, 6, 6.5, 7, 10, 100):
    A = pair.A.copy()
    A[8, 9] *= k
    rep = pseudospectra_equal_sampled(A, pair.B, samples)
    print(f"entry x {k:5}:  max relative difference {rep['max_rel_diff']:.3e}  equal: {rep['passed']}")
