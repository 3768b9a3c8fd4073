"""Burnside-ring invariants of finite group actions.

Arithmetic in the rationalized Burnside ring of a finite group, symmetric
power series of G-sets, equivariant Euler characteristics, and equivariant
zeta functions of maps and of monodromy (from resolution strata).
"""
from .acampo import (
    ResolutionStratum,
    lefschetz_from_strata,
    milnor_fibre_euler,
    validate_stratum,
    zeta_acampo,
)
from .burnside import (
    BurnsideElement,
    BurnsideRing,
    GSetExplicit,
    burnside_ring,
    cartesian_product,
    coset_gset,
    disjoint_union,
    forget_to_integer,
    from_ghost,
    gset_decompose,
    mul,
    natural_gset,
    sym_power_explicit,
    to_ghost,
    to_permutation_character,
)
from .eqtop import (
    IsotropyStratum,
    LefschetzSequence,
    SSequence,
    ZetaResult,
    degree_from_s,
    euler_from_cells,
    euler_from_strata,
    lefschetz_from_s,
    lefschetz_single_isotropy,
    s_from_lefschetz,
    zeta_from_lefschetz,
)
from .errors import *  # noqa: F401,F403
from .groups import (
    FiniteGroup,
    Subgroup,
    build_group_from_permutations,
    builtin_group,
    class_of,
    element_conjugacy_classes,
    enumerate_subgroup_classes,
    make_subgroup,
    orbit_sizes_on_cosets,
    pair_class_of,
    parse_cycles,
    subgroup_generated,
    table_of_marks,
)
from .gseries import (
    ExponentTerm,
    GSeries,
    degree_of_product,
    expand_product,
    inverse,
    lambda_series,
    mul_series,
    normalize_terms,
    power_series,
)

__version__ = "0.1.0"
