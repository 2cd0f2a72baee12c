"""Angles between a nullspace and the subsets' coordinate spaces.

Run: python demos/05_angles.py
"""
from wovenframes import Frame, riesz_compatibility, standard_basis, woven_angle_sup, woven_constants

e2 = standard_basis(2)
sup, arg = woven_angle_sup(e2, e2)
print(f"(E2, E2): sup cosine {sup:.6f} at sigma={arg.bits()}")

# A woven pair always has the sup below 1, but the converse fails.
swapped = Frame([[0, 1], [1, 0]])
sup, arg = woven_angle_sup(e2, swapped)
print(f"(E2, swapped): sup {sup:.6f} < 1 yet woven={woven_constants(e2, swapped).woven}")

# Riesz-type compatibility of a redundant frame.
f = Frame([[1, 0], [0, 1], [1, 1]])
sup, arg = riesz_compatibility(f)
print(f"{{e1, e2, e1+e2}}: largest cosine {sup:.6f} at sigma={arg.indices}")
