"""When is a frame woven with a scaled copy of its canonical dual?

Run: python demos/04_scaled_duals.py
"""
from wovenframes import (
    alpha_interval,
    check_scaled_dual,
    cross_check,
    example_frame,
    optimal_bounds,
    ratio_threshold_r0,
    scaled_alpha_llhl,
)

r0 = ratio_threshold_r0()
print(f"harmonic-mean scale stays admissible while B/A < r0 = {r0:.10f}")
for m in (1.5, 2.5, 3.3, 3.7, 3.99):
    f = example_frame(m)
    b = optimal_bounds(f)
    iv = alpha_interval(b)
    hm = scaled_alpha_llhl(b)
    mid = 0.5 * (iv.lo + iv.hi)
    cert = check_scaled_dual(f, mid)
    rep, _ = cross_check(cert)
    print(f"B/A={b.ratio:<5.4g}: interval ({iv.lo:.4f}, {iv.hi:.4f}), 2AB/(A+B)={hm:.4f} "
          f"{'inside' if iv.contains(hm) else 'outside'}; midpoint certified={cert.holds}, "
          f"oracle woven={rep.woven}")
