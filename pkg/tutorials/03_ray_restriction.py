"""
Restricting to a ray
====================

Along the ray mu * alpha the jumping points of a tuple are the jumping
numbers of the single ideal a1^alpha1 * a2^alpha2.  Here both sides are
computed and compared.
"""
from mmibs.algebra import minimalize, product_power
from mmibs.mmi import jumping_numbers, ray_jumping_numbers
from mmibs.newton import resolution_data

pair = [minimalize([(1, 0)]), minimalize([(0, 1)])]
rd = resolution_data(pair)

for alpha in ((1, 1), (1, 2), (2, 3)):
    along_ray = ray_jumping_numbers(rd, pair, alpha, 1)
    product = product_power(pair, alpha)
    single = jumping_numbers(resolution_data([product]), 1)
    print(alpha, product.generators, [str(m) for m in along_ray], [str(m) for m in single])

# On alpha = (1, 2) the point (1/2, 1) counts: lowering z1 alone changes
# nothing, but every point strictly below it has a larger ideal.
