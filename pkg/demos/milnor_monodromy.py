"""
Monodromy zeta functions from resolution strata
===============================================

Each stratum of an equivariant resolution is a record (m, H, Hhat, chi).
The zeta function of the monodromy is a product of (1-t^m) factors with
Burnside ring exponents.
"""

import warnings

from eqzeta import builtin_group, burnside_ring
from eqzeta.acampo import (
    ResolutionStratum,
    lefschetz_from_strata,
    milnor_fibre_euler,
    validate_stratum,
    zeta_acampo,
)
from eqzeta.burnside import forget_to_integer
from eqzeta.eqtop import LefschetzSequence, zeta_from_lefschetz

# The cusp x^2 + y^3 with Z6 acting by (x, y) -> (-x, w y), w^3 = 1
G = builtin_group("cyclic", 6)
e, z2, z3, z6 = (c.representative for c in G.subgroup_classes)
strata = [ResolutionStratum(2, z6, z3, 1),
          ResolutionStratum(3, z6, z2, 1),
          ResolutionStratum(6, z6, e, -1),
          ResolutionStratum(2, e, e, 0),
          ResolutionStratum(3, z2, e, 0)]

# The last stratum has chi = 0 and |Z2/e| = 2 does not divide 3, so it is
# reported but does not stop the computation
print(validate_stratum(G, strata[-1]))
with warnings.catch_warnings(record=True) as caught:
    warnings.simplefilter("always")
    z = zeta_acampo(G, strata)
print(len(caught), "warning(s)")
print(z.product_form())
print(z.series.render())

# The degree is the equivariant Euler characteristic of the Milnor fibre.
# Its point count is 1 - mu with mu = 2.
print(z.degree.render(), "->", forget_to_integer(z.degree))
print(milnor_fibre_euler(G, strata) == z.degree)

# The same zeta function from Lefschetz numbers of the monodromy iterates
L = LefschetzSequence([lefschetz_from_strata(G, strata, k) for k in range(1, 7)])
print(zeta_from_lefschetz(L, 6).product_form())

# S3 acting on the quadric by permuting coordinates
S3 = builtin_group("symmetric", 3)
e, z2 = S3.subgroup_classes[0].representative, S3.subgroup_classes[1].representative
quadric = [ResolutionStratum(2, z2, z2, 3),
           ResolutionStratum(2, z2, e, 3),
           ResolutionStratum(2, e, e, -6)]
zq = zeta_acampo(S3, quadric)
print(zq.product_form())

# Forgetting the action leaves the constant series 1
print([str(c) for c in zq.classical_zeta])
print(milnor_fibre_euler(S3, quadric).render())
