"""
Multiplier ideals of a single monomial ideal
============================================

Start with the ideal (x^2) in one variable and watch its multiplier ideal
shrink as the exponent grows.
"""
from fractions import Fraction

from mmibs.algebra import minimalize
from mmibs.mmi import candidate_walls, jumping_numbers, mixed_multiplier_ideal
from mmibs.newton import newton_polyhedron, resolution_data

ideal = minimalize([(2,)])

# The Newton polyhedron of (x^2) is the half-line v >= 2.
print(newton_polyhedron(ideal))

# Everything downstream only needs rays, e-values and k-values.
rd = resolution_data([ideal])
print("rays", rd.rays, "e", rd.e, "k", rd.k)

# J changes only where 2*lambda crosses an integer.
for lam in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4), Fraction(1), Fraction(5, 4)):
    print(f"J((x^2)^{lam}) =", mixed_multiplier_ideal(rd, [lam]).generators)

print("candidate walls:", [(w.coeffs, w.rhs) for w in candidate_walls(rd, 2)])
print("jumping numbers up to 2:", [str(c) for c in jumping_numbers(rd, 2)])
