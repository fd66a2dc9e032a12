"""
Four special matrix families and their closed forms
====================================================

Builds small members of each family, evaluates the closed-form
determinant and inverse, and cross-checks both against plain exact
elimination. Everything is arbitrary-precision rational, so every
comparison below is exact equality, not a tolerance.
"""

from hilbx import Matrix, SpecialSpec, build, closed_det, closed_inv
from hilbx.exactmat import mat_det_exact, mat_inv_exact, rat_str


def show(mat: Matrix) -> str:
    return "\n".join("  ".join(rat_str(e) for e in mat.row(i)) for i in range(mat.rows))


# The Hilbert matrix: entries 1/(i+j-1)
h4 = SpecialSpec.hilbert(4)
print("Hilbert n=4:")
print(show(build(h4)))
print("determinant:", rat_str(closed_det(h4)), "(elimination agrees:",
      closed_det(h4) == mat_det_exact(build(h4)), ")")

# Its inverse is all integers, one of the two properties the cipher uses.
print("\ninverse (note: every entry an integer):")
print(show(closed_inv(h4)))
assert closed_inv(h4) == mat_inv_exact(build(h4))

# Hilbert is the Cauchy matrix with x_i = i and y_j = j-1.
cauchy = SpecialSpec.cauchy([1, 2, 3, 4], [0, 1, 2, 3])
assert build(cauchy) == build(h4)
print("\nCauchy with x=(1..4), y=(0..3) rebuilds Hilbert exactly:", build(cauchy) == build(h4))

# Vandermonde, with row exponents starting at 1.
vspec = SpecialSpec.vandermonde([2, 3, 5])
print("\nVandermonde nodes (2, 3, 5):")
print(show(build(vspec)))
print("determinant:", rat_str(closed_det(vspec)))
assert closed_inv(vspec) == mat_inv_exact(build(vspec))

# Combinatorial: y everywhere, x added on the diagonal.
cspec = SpecialSpec.combinatorial(3, 2, 1)
print("\nCombinatorial n=3, x=2, y=1:")
print(show(build(cspec)))
print("determinant x^(n-1) (x+ny):", rat_str(closed_det(cspec)))
print("inverse is combinatorial again:")
print(show(closed_inv(cspec)))
