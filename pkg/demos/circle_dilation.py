"""How dilation acts on the half-circle chart.

Dilating an angle by a moves it through the tangent map, outward for
a > 1 and toward the chart center for a < 1.  Acting on a signal reads
it at the reciprocal dilation, so a > 1 widens a bump the way a coarse
wavelet scale should, and the chain-rule weight raised to the
representation exponent keeps the norm exactly fixed.
"""

import numpy as np

from circlet import CircleGrid, CircleSignal, dilate_angle, multiplier, rep_action

grid = CircleGrid(1024)
t = grid.nodes

print("dilated angles for a few starting points:")
for theta in (-1.2, -0.5, 0.0, 0.5, 1.2):
    row = "  ".join(f"a={a}: {dilate_angle(theta, a):+.4f}" for a in (0.25, 1.0, 4.0))
    print(f"  theta {theta:+.1f} -> {row}")

# the chain-rule weight at the same points
print("\nmultiplier lambda(a, theta):")
for theta in (-1.2, 0.0, 1.2):
    row = "  ".join(f"a={a}: {multiplier(a, theta):.4f}" for a in (0.25, 1.0, 4.0))
    print(f"  theta {theta:+.1f} -> {row}")

gamma = CircleSignal(grid, np.exp(-np.tan(t) ** 2))
print(f"\nbump norm: {gamma.norm():.10f}")
for a, vt in ((3.0, 0.0), (0.2, 0.9), (7.0, -1.3)):
    acted = rep_action(gamma, a, vt)
    print(f"after (a={a}, vartheta={vt:+.1f}): norm {acted.norm():.10f}")

# a = 4 spreads the bump toward the chart ends, a = 1/4 sharpens it
half = np.abs(t) < 0.35


def center_fraction(sig):
    return np.sum(np.abs(sig.values[half]) ** 2) / np.sum(np.abs(sig.values) ** 2)


print(f"\nenergy fraction inside |theta| < 0.35:")
print(f"  undilated bump: {center_fraction(gamma):.4f}")
print(f"  a = 4 (coarse): {center_fraction(rep_action(gamma, 4.0, 0.0)):.4f}")
print(f"  a = 1/4 (fine): {center_fraction(rep_action(gamma, 0.25, 0.0)):.4f}")
