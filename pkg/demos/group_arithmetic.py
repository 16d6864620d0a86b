"""Tour of the group layer: composition, inversion, factorization.

Every group element carries a dilation a > 0, a shear b, and a rotation
angle theta.  The 2x2 matrix picture is the ground truth; the closed-form
composition must agree with the matrix product, and any unit-determinant
matrix factors back into (a, b, theta).
"""

from circlet import (
    AffineElement,
    GroupElement,
    affine_compose,
    affine_embed,
    compose,
    haar_weight,
    inverse,
    iwasawa_decompose,
    matrix,
)


def mat_str(m):
    return f"[[{m.m11:+.4f} {m.m12:+.4f}] [{m.m21:+.4f} {m.m22:+.4f}]]"


g = GroupElement(a=2.0, b=0.7, theta=0.3)
h = GroupElement(a=0.5, b=-1.2, theta=-0.9)

print("g =", g)
print("h =", h)
print("matrix(g) =", mat_str(matrix(g)))

gh = compose(g, h)
print("\ncompose(g, h) =", gh)
prod = matrix(g) @ matrix(h)
print("matrix product  ", mat_str(prod))
print("matrix(gh)      ", mat_str(matrix(gh)))

ginv = inverse(g)
e = compose(g, ginv)
print("\ng g^-1 =", e)

back = iwasawa_decompose(prod)
print("\nfactor the product back:", back)

# the affine subgroup (theta = 0) closes under composition
p = affine_compose(AffineElement(2.0, 1.0), AffineElement(0.5, -0.3))
print("\naffine product of (2,1) and (0.5,-0.3):", p)
print("same thing through the embedding:",
      compose(affine_embed(AffineElement(2.0, 1.0)), affine_embed(AffineElement(0.5, -0.3))))

# left Haar measure weight da db dtheta / a^2
print("haar weight at a=2:", haar_weight(g))
print("haar weight at a=0.5:", haar_weight(h))

det_drift = abs(matrix(gh).det() - 1.0)
print(f"\ndeterminant drift through all of this: {det_drift:.2e}")
