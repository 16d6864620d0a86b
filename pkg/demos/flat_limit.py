"""The chart action turns into plain affine translation and dilation.

Two statements, both checked numerically.  First, projecting through the
tangent map exactly swaps chart dilation for line dilation at any scale.
Second, blowing the circle radius up by R and shrinking the group move
accordingly makes the conjugated chart action converge to the affine
action on the line, with error falling like 1/R^2 for a smooth bump.
"""

import numpy as np

from circlet import (
    CircleGrid,
    CircleSignal,
    ContractionParams,
    LineGrid,
    check_intertwining,
    contract_point,
    euclidean_limit_error,
    smooth_bump,
)
from circlet.line import LineSignal

cgrid = CircleGrid(1024)
lgrid = LineGrid(-16.0, 16.0, 2048)

gamma = CircleSignal.from_evaluator(cgrid, lambda t: np.exp(-np.tan(t) ** 2))
print("dilation intertwining residual through the projection:")
for a in (0.3, 1.0, 2.0, 7.0):
    print(f"  a = {a}: {check_intertwining(gamma, a, lgrid):.2e}")

f = LineSignal.from_evaluator(lgrid, smooth_bump(1.0))
print("\ncontracted group points for the move (b=0.7, a=2):")
for R in (10.0, 100.0, 1000.0):
    vt, a = contract_point(0.7, 2.0, ContractionParams(R))
    print(f"  R = {R:6.0f}: rotate by {vt:.6f}, dilate by {a}")

print("\nflat-limit error, conjugated chart action vs affine action:")
for b, a in ((0.7, 2.0), (-1.0, 0.5)):
    errs = [euclidean_limit_error(f, b, a, ContractionParams(R)) for R in (10.0, 100.0, 1000.0)]
    ratio = errs[0] / errs[2]
    print(f"  move (b={b}, a={a}): " + " -> ".join(f"{e:.2e}" for e in errs)
          + f"  (shrink x{ratio:.0f})")
