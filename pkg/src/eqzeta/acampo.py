"""Equivariant monodromy zeta function from resolution strata.

A stratum record ``(m, H, Hhat, euler)`` describes the points of the
exceptional divisor where ``f o pi = z_1^m`` locally, whose isotropy group is
conjugate to H while the kernel of the isotropy action on the normal slice is
the matching conjugate of Hhat.  Each such stratum contributes the factor
``(1 - t^m)^(-|Hhat| euler / |G| [G/Hhat])``.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .burnside import burnside_ring
from .eqtop import ZetaResult, make_zeta_result
from .errors import StratumError, StratumWarning
from .groups import (
    Subgroup,
    class_of,
    is_cyclic_quotient,
    is_normal,
    make_subgroup,
    pair_class_of,
)
from .gseries import DEFAULT_ORDER, ExponentTerm

__all__ = [
    "ResolutionStratum",
    "ZetaResult",
    "validate_stratum",
    "merge_strata",
    "zeta_acampo",
    "lefschetz_from_strata",
    "milnor_fibre_euler",
]


@dataclass(frozen=True)
class ResolutionStratum:
    m: int
    H: Subgroup
    Hhat: Subgroup
    euler: int


def validate_stratum(G, s):
    """Diagnostics for every violated stratum condition; empty list means valid."""
    diags = []
    if not isinstance(s.m, int) or s.m < 1:
        return [f"multiplicity m={s.m!r} is not a positive integer"]
    for name, S in (("H", s.H), ("Hhat", s.Hhat)):
        try:
            make_subgroup(G, S.members)
        except Exception as exc:
            diags.append(f"{name} is not a subgroup: {exc}")
    if diags:
        return diags
    if not s.Hhat.issubset(s.H):
        return ["containment: Hhat is not contained in H"]
    if not is_normal(G, s.Hhat, s.H):
        return ["normality: Hhat is not normal in H"]
    if not is_cyclic_quotient(G, s.H, s.Hhat):
        diags.append("cyclicity: H/Hhat is not cyclic")
    idx = s.H.order // s.Hhat.order
    if s.m % idx:
        diags.append(f"divisibility: |H/Hhat| = {idx} does not divide m = {s.m}")
    return diags


def _check_strata(G, strata, strict):
    errors = []
    for i, s in enumerate(strata):
        diags = validate_stratum(G, s)
        if not diags:
            continue
        lines = [f"stratum {i} (m={s.m}): {d}" for d in diags]
        # zero-Euler strata contribute nothing, so they only warn
        if strict and s.euler != 0:
            errors.extend(lines)
        else:
            for line in lines:
                warnings.warn(line, StratumWarning, stacklevel=3)
    if errors:
        raise StratumError(errors)


def merge_strata(G, strata):
    """Sum Euler characteristics of strata with equal m and conjugate pairs."""
    merged = {}
    for s in strata:
        key = (s.m, pair_class_of(G, s.H, s.Hhat))
        if key in merged:
            prev = merged[key]
            merged[key] = ResolutionStratum(s.m, prev.H, prev.Hhat, prev.euler + s.euler)
        else:
            merged[key] = s
    return list(merged.values())


def _exponent(G, s):
    """|Hhat| euler / |G| [G/Hhat]"""
    R = burnside_ring(G)
    return R.basis(class_of(G, s.Hhat)) * Fraction(s.Hhat.order * s.euler, G.order)


def zeta_acampo(G, strata, N=DEFAULT_ORDER, strict=True):
    """Equivariant monodromy zeta function as a product over strata.

    With ``strict`` (the default) any stratum of nonzero Euler characteristic
    that fails :func:`validate_stratum` raises StratumError.
    """
    strata = list(strata)
    _check_strata(G, strata, strict)
    terms = [ExponentTerm(s.m, _exponent(G, s))
             for s in merge_strata(G, strata) if s.euler]
    return make_zeta_result(terms, N, burnside_ring(G))


def lefschetz_from_strata(G, strata, k):
    """Lambda^G(phi^k) = sum over strata with m | k of m |Hhat| euler / |G| [G/Hhat]."""
    total = burnside_ring(G).zero
    for s in strata:
        if k % s.m == 0:
            total = total + _exponent(G, s) * s.m
    return total


def milnor_fibre_euler(G, strata):
    """Equivariant Euler characteristic of the Milnor fibre."""
    total = burnside_ring(G).zero
    for s in strata:
        total = total + _exponent(G, s) * s.m
    return total
