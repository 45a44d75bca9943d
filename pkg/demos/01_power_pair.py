"""Two 10x10 matrices with the same pseudospectra whose squares and cubes
differ in norm by more than 10^4."""
import numpy as np

from pseudopairs import ConstructionInput, build_pair, operator_norm, resolvent_norm

pair = build_pair(ConstructionInput("powers", 1e4, n=2, m=3))
A, B = pair.A, pair.B
print("u =", pair.u, " c4..c7 =", [str(c) for c in pair.c])
print("certified mu' =", pair.mu, " t =", pair.t)

# the pair differs in a single entry
print("entries that differ:", np.argwhere(A != B).tolist())

# ||A^n|| / ||B^n|| for the two exponents
for n in (2, 3):
    r = operator_norm(np.linalg.matrix_power(A, n)) / operator_norm(np.linalg.matrix_power(B, n))
    print(f"||A^{n}|| / ||B^{n}|| = {r:.4g}")

# ...while the resolvent norms agree wherever we look
for z in (0.5, 1 + 0.3j, 2.0, -1.5 + 2j, 10j):
    print(f"z = {z!s:>10}:  {resolvent_norm(z, A):.12e}  {resolvent_norm(z, B):.12e}")

print("report passed:", pair.passed)
