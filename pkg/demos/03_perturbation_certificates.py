"""Small perturbations are woven, and the oracle agrees.

Run: python demos/03_perturbation_certificates.py
"""
import math

import numpy as np

from wovenframes import check_operator_perturbation, check_perturbation, cross_check, example_frame
from wovenframes.generate import perturb, random_frame
from wovenframes.prng import SplitMix64

# An operator close to the identity applied to F = {2 e1, e2}.
f = example_frame(4)
cert = check_operator_perturbation(f, np.diag([1.0, 0.5]))
report, consistent = cross_check(cert)
print(f"||(I - T) T_F|| = {cert.measured['perturbation_norm']}, holds={cert.holds}")
print(f"oracle: woven={report.woven}, C={report.uniform_lower:.4f}, D={report.uniform_upper:.4f}")
print(f"certified interval: [{cert.predicted_lower:.4f}, {cert.predicted_upper:.4f}]")

# Random frames pushed by growing fractions of sqrt(A).
rng = SplitMix64(2024)
base = random_frame(3, 6, rng)
for target in (0.25, 0.5, 0.9, 1.2):
    g = perturb(base, target, rng)
    cert = check_perturbation(base, g)
    rep, _ = cross_check(cert)
    a, delta = cert.measured["lower_bound_A"], cert.measured["perturbation_norm"]
    bound = (math.sqrt(a) - delta) ** 2 if cert.holds else float("nan")
    print(f"target {target:4}: holds={cert.holds!s:5}  bound={bound:.4f}  "
          f"oracle C={rep.uniform_lower:.4f}  woven={rep.woven}")
