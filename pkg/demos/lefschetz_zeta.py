"""
Equivariant Euler characteristics and zeta functions of maps
============================================================

From isotropy strata to an Euler characteristic, and from Lefschetz numbers
of iterates to a zeta function written as a product of (1-t^m) factors.
"""

from eqzeta import builtin_group, burnside_ring
from eqzeta.eqtop import (
    IsotropyStratum,
    LefschetzSequence,
    euler_from_cells,
    euler_from_strata,
    s_from_lefschetz,
    zeta_from_lefschetz,
)

G = builtin_group("symmetric", 3)
R = burnside_ring(G)

# A space with one fixed point, three points with Z2 isotropy and a free part
# of Euler characteristic -6. Coefficient h is chi(X_h) |H| / |G|.
chi = euler_from_strata(G, [IsotropyStratum(3, 1), IsotropyStratum(1, 3),
                            IsotropyStratum(0, -6)])
print("chi_G =", chi.render())

# A circle of 6 free 0-cells and 6 free 1-cells has chi_G = 0
print(euler_from_cells(G, [(0, R.basis(0)), (1, R.basis(0))]).render())

# The identity map: every iterate has Lefschetz number chi_G
L = LefschetzSequence([chi] * 8)
z = zeta_from_lefschetz(L, 8)
print(z.product_form())
print("degree", z.degree.render())

# A periodic map of period 2 swapping two free orbits.
# Odd iterates have no fixed points; even iterates are the identity.
two_free = R.basis(0) * 2
L = LefschetzSequence([R.zero if m % 2 else two_free for m in range(1, 13)])
S = s_from_lefschetz(L)
print([(m, s.render()) for m, s in S.items() if s])
z = zeta_from_lefschetz(L)
print(z.product_form())

# The classical zeta function is the point count of each coefficient
print([str(c) for c in z.classical_zeta])
