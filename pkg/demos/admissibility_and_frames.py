"""What makes a chart signal a usable wavelet.

Two conditions gate reconstruction: the weak integral against the
boundary weight has to vanish, and every mode's scale integral has to be
positive and finite.  The built-in difference-of-powers wavelet is
engineered to pass; a constant fails both ways; a classical flat wavelet
lifted onto the chart passes with an almost tight frame.
"""

import warnings

import numpy as np

from circlet import (
    CircleGrid,
    CircleSignal,
    frame_bounds,
    lambda_sequence,
    make_dog,
    mexican_hat,
    stereo_lift,
    weak_admissibility,
)

grid = CircleGrid(1024)

dog = make_dog(2.0)
report = lambda_sequence(dog, n_max=32)
print("balanced difference-of-powers wavelet, alpha = 2")
print(f"  weak integral:    {abs(report.weak_integral):.2e}")
print(f"  mode integrals:   min {report.inf_lambda:.6f}, max {report.sup_lambda:.6f}")
print(f"  admissible:       {report.admissible}")
c1, c2 = frame_bounds(report)
print(f"  frame bounds:     {c1:.6f} .. {c2:.6f} (ratio {c2 / c1:.3f})")

print("\nmode integral profile (every 4th mode):")
for n in range(0, 33, 4):
    print(f"  n = {n:2d}: {report.lambda_of(n):.6f}")

# the unbalanced variant keeps a nonzero weak integral
unbalanced = make_dog(2.0, balanced=False)
print(f"\nunbalanced weak integral: {abs(weak_admissibility(unbalanced)):.4f}")

flat = CircleSignal(grid, np.ones(grid.n_samples, dtype=complex))
with warnings.catch_warnings():
    warnings.simplefilter("ignore", RuntimeWarning)
    flat_report = lambda_sequence(flat, n_max=32)
print(f"constant signal admissible: {flat_report.admissible}")

lifted = lambda_sequence(stereo_lift(mexican_hat(), grid), n_max=32)
b1, b2 = frame_bounds(lifted)
print(f"\nlifted flat wavelet admissible: {lifted.admissible}")
print(f"  frame bounds {b1:.4f} .. {b2:.4f}; the plateau sits near the")
print(f"  flat-line admissibility constant, lambda_32 = {lifted.lambda_of(32):.4f}")
