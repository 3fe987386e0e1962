"""
Jumping walls of the pair ((x), (xy))
=====================================

With two ideals the exponent becomes a point of the quarter plane, and the
multiplier ideal is constant on the cells cut out by finitely many lines.
"""
from fractions import Fraction

from mmibs.algebra import minimalize
from mmibs.mmi import candidate_walls, is_jumping_point, mixed_multiplier_ideal, region_report
from mmibs.newton import resolution_data
from mmibs.plot import emit_wall_plot

Q = Fraction
pair = [minimalize([(1, 0)]), minimalize([(1, 1)])]
rd = resolution_data(pair)

walls = candidate_walls(rd, 1)
for w in walls:
    print("wall", w.coeffs, "=", w.rhs)

# A point on z1 + z2 = 1 and one just off it.
for lam in ((Q(1, 2), Q(1, 2)), (Q(1, 3), Q(1, 2))):
    print(lam, mixed_multiplier_ideal(rd, lam).generators, "jump" if is_jumping_point(rd, lam) else "no jump")

# The constancy region of (3/4, 1/2): every probe with the same ideal.
report = region_report(rd, (Q(3, 4), Q(1, 2)), 1)
print("ideal at base", report.ideal_at_base.generators)
print("same ideal at", [tuple(map(str, p)) for p in report.constancy_sample])

path = emit_wall_plot(walls, "pair_walls.svg", 1, points=[(Q(1, 2), Q(1, 2))])
print("wrote", path)
