"""Frame bounds, the frame inequality and the canonical dual.

Run: python demos/01_frame_bounds.py
"""
import numpy as np

from wovenframes import canonical_dual, example_frame, frame_operator, harmonic_frame, optimal_bounds

# A stretched orthonormal basis: the first vector has norm 2, so A = 1 and B = 4.
f = example_frame(4)
b = optimal_bounds(f)
print(f"{f!r}: A = {b.lower:g}, B = {b.upper:g}, ratio {b.ratio:g}")

# The bounds are the extreme eigenvalues of the frame operator.
print("eigenvalues of S:", np.linalg.eigvalsh(frame_operator(f)))

# Three equiangular vectors in the plane form a tight frame with A = B = 3/2.
m = harmonic_frame(2, 3)
print(f"{m!r}: bounds {optimal_bounds(m)}")

# Every x is recovered from its frame coefficients through the dual.
x = np.array([0.3, -1.2])
coeffs = f.matrix.T @ x
print("reconstruction:", canonical_dual(f).matrix @ coeffs, "from", x)
