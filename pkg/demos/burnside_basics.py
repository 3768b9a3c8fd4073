"""
Burnside rings and tables of marks
==================================

Build a small permutation group, list its subgroup classes and multiply
finite G-sets through the ghost map.
"""

from fractions import Fraction

from eqzeta import builtin_group, burnside_ring
from eqzeta.burnside import (
    cartesian_product,
    coset_gset,
    forget_to_integer,
    gset_decompose,
    natural_gset,
    to_permutation_character,
)

# S3 acting on {0, 1, 2}
G = builtin_group("symmetric", 3)
print(G)

# Subgroup classes come in a fixed order: by subgroup order, then by the
# lexicographically least member. H0 is trivial, the last one is G itself.
for c in G.subgroup_classes:
    print(f"H{c.index}: order {c.order}, {len(c.members)} conjugate(s)")

# The table of marks: row K, column H, entry = |(G/H)^K|.
# It is upper triangular, with |N(H)|/|H| on the diagonal.
for row in G.marks.marks:
    print(" ".join(f"{m:2d}" for m in row))

# Ring elements are rational combinations of the basis [G/H].
R = burnside_ring(G)
x = R.basis(1)                  # S3/Z2, the three points
print("x =", x.render(), " ghost", [str(v) for v in R.ghost(x)])

# Products are computed in ghost space and pulled back
print("x*x =", (x * x).render())

# The same answer from an explicit product of G-sets
X = natural_gset(G)
print("decomposed X x X =", gset_decompose(cartesian_product(X, X)).render())

# Rational coefficients are allowed
y = R.basis(0) * Fraction(1, 2) - R.one
print("y =", y.render(), " |y| =", forget_to_integer(y))

# Permutation characters on the element classes (e), (01), (012)
print("character of x:", [str(v) for v in to_permutation_character(x)])
print("character of [S3/Z3]:",
      [str(v) for v in to_permutation_character(R.coset(G.subgroup_classes[2].representative))])

# Coset spaces are explicit G-sets too
Y = coset_gset(G, G.subgroup_classes[2].representative)
print(len(Y), "points, orbits:", Y.orbits())
