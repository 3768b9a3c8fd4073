"""
Symmetric powers and the lambda series
======================================

Expand (1-t)^(-[X]) for a G-set X and compare with explicit enumeration of
multisets. Then raise (1-t^m) to rational Burnside exponents.
"""

from fractions import Fraction

from eqzeta import builtin_group, burnside_ring
from eqzeta.burnside import coset_gset, gset_decompose, sym_power_explicit
from eqzeta.gseries import ExponentTerm, expand_product, lambda_series, power_series

G = builtin_group("cyclic", 6)
R = burnside_ring(G)
Z3 = G.subgroup_classes[2].representative

# Z6/Z3 has two points swapped by the generator
X = coset_gset(G, Z3)
S = lambda_series(X, 6)
print(S.render())

# Coefficient k is the k-th symmetric power. Check k = 3 directly.
print("S^3 X =", gset_decompose(sym_power_explicit(X, 3)).render())

# power_series uses the ghost map instead of enumeration, so it also
# accepts virtual and rational exponents
print(power_series(1, R.basis(2), 6) == S)

# (1-t^2)^(-1/2 [Z6/Z3]): coefficient 2 is half a G-set
half = power_series(2, R.basis(2) * Fraction(1, 2), 6)
print(half.render())

# Its point count is still the ordinary binomial series
print([str(c) for c in half.forget()])

# Products of such factors, expanded to order 8
P = expand_product([ExponentTerm(2, R.basis(2) * Fraction(1, 2)),
                    ExponentTerm(3, R.basis(1) * Fraction(1, 3))], 8)
print(P.render())
