"""Exhaustive weaving: which pairs of frames stay frames under every mix?

Run: python demos/02_weaving_oracle.py
"""
from wovenframes import Frame, PartitionSet, standard_basis, weaving_synthesis, woven_constants

e2 = standard_basis(2)
rep = woven_constants(e2, e2)
print(f"(E2, E2): woven={rep.woven}, C={rep.uniform_lower}, D={rep.uniform_upper}")

# Swapping the basis vectors breaks weaving: choosing g_0 = e2 and f_1 = e2 loses e1.
swapped = Frame([[0, 1], [1, 0]])
rep = woven_constants(e2, swapped)
p = PartitionSet(rep.n, rep.worst_sigma)
print(f"(E2, swapped): woven={rep.woven}, worst sigma={p.indices}")
print(weaving_synthesis(e2, swapped, p))

# The per-subset table for a 3-vector pair.
f = Frame([[1, 0], [0, 1], [1, 1]])
g = Frame([[1, 0.2], [0.1, 1], [1, -1]])
rep = woven_constants(f, g)
for mask in range(1 << rep.n):
    lo, up, ok = rep.per_sigma(mask)
    print(f"  sigma={PartitionSet(3, mask).bits()}  lower={lo:.4f}  upper={up:.4f}  frame={ok}")
print(f"uniform constants: [{rep.uniform_lower:.4f}, {rep.uniform_upper:.4f}]")
