"""Equivariant Euler characteristics and zeta functions of maps.

Equivariant Lefschetz numbers are taken as given: a map phi enters only
through the sequence Lambda^G(phi^m), m = 1..M.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .burnside import burnside_ring
from .errors import HorizonError, NonIntegralEulerWarning
from .gseries import (
    DEFAULT_ORDER,
    ExponentTerm,
    degree_of_product,
    expand_product,
    normalize_terms,
    render_product,
    terms_to_json,
)

__all__ = [
    "IsotropyStratum",
    "LefschetzSequence",
    "SSequence",
    "ZetaResult",
    "euler_from_strata",
    "euler_from_cells",
    "lefschetz_single_isotropy",
    "s_from_lefschetz",
    "lefschetz_from_s",
    "zeta_from_lefschetz",
    "degree_from_s",
]


@dataclass(frozen=True)
class IsotropyStratum:
    """The points with isotropy in class ``h``, with Euler characteristic ``euler``."""
    h: int
    euler: int


class _Sequence:
    """Values indexed by m = 1..horizon."""

    def __init__(self, values):
        self.values = tuple(values)
        if not self.values:
            raise HorizonError("a sequence needs at least one term")
        ring = self.values[0].ring
        if any(v.ring is not ring for v in self.values):
            raise ValueError("sequence mixes groups")
        self.ring = ring

    @property
    def horizon(self):
        return len(self.values)

    def __getitem__(self, m):
        if not 1 <= m <= self.horizon:
            raise IndexError(m)
        return self.values[m - 1]

    def items(self):
        return enumerate(self.values, start=1)

    def __eq__(self, other):
        return type(other) is type(self) and self.values == other.values

    def __repr__(self):
        return f"{type(self).__name__}({[v.render() for v in self.values]})"


class LefschetzSequence(_Sequence):
    """Lambda^G(phi^m) for m = 1..horizon."""


class SSequence(_Sequence):
    """The classes s_m with Lambda^G(phi^m) = sum_{d | m} s_d."""


@dataclass(frozen=True)
class ZetaResult:
    factors: list           # normalized ExponentTerms
    series: object          # GSeries
    degree: object          # BurnsideElement
    classical_zeta: list    # Fractions, forgetful image of series

    def product_form(self):
        return render_product(self.factors)

    def to_json(self):
        return {
            "factors": terms_to_json(self.factors),
            "series": self.series.to_json(),
            "degree": self.degree.to_json(),
            "classical_zeta": [[q.numerator, q.denominator] for q in self.classical_zeta],
        }


def make_zeta_result(terms, N, ring):
    factors = normalize_terms(terms)
    series = expand_product(factors, N, ring=ring)
    return ZetaResult(factors, series, degree_of_product(factors, ring=ring), series.forget())


def euler_from_strata(G, strata):
    """sum_h chi(X_h) |H|/|G| [G/H].

    A coefficient that is not an integer triggers NonIntegralEulerWarning;
    for strata of an actual action it equals chi(X_h/G).
    """
    R = burnside_ring(G)
    coeffs = [Fraction(0)] * R.rank
    seen = set()
    for s in strata:
        if s.h in seen:
            raise ValueError(f"duplicate stratum for class {s.h}")
        if not 0 <= s.h < R.rank:
            raise ValueError(f"class index {s.h} out of range")
        seen.add(s.h)
        q = Fraction(s.euler * R.table[s.h].order, G.order)
        if q.denominator != 1:
            warnings.warn(f"stratum of class {s.h}: coefficient {q} is not an integer",
                          NonIntegralEulerWarning, stacklevel=2)
        coeffs[s.h] = q
    return R.element(coeffs)


def euler_from_cells(G, cells):
    """Alternating sum of the cell G-sets, given as (dim, BurnsideElement) pairs."""
    R = burnside_ring(G)
    total = R.zero
    for dim, cellset in cells:
        if not cellset.is_effective():
            raise ValueError("cell sets must be integral and effective")
        total = total + cellset if dim % 2 == 0 else total - cellset
    return total


def lefschetz_single_isotropy(G, lef, h):
    """Lambda(phi) |H|/|G| [G/H] for a space with all isotropy in class h."""
    R = burnside_ring(G)
    return R.basis(h) * Fraction(lef * R.table[h].order, G.order)


def s_from_lefschetz(L):
    """Invert Lambda^G(phi^m) = sum_{d | m} s_d, ascending in m."""
    s = []
    for m, lam in L.items():
        acc = lam
        for d in range(1, m // 2 + 1):
            if m % d == 0:
                acc = acc - s[d - 1]
        s.append(acc)
    return SSequence(s)


def lefschetz_from_s(S):
    out = []
    for m in range(1, S.horizon + 1):
        acc = S.ring.zero
        for d in range(1, m + 1):
            if m % d == 0:
                acc = acc + S[d]
        out.append(acc)
    return LefschetzSequence(out)


def zeta_from_lefschetz(L, N=None):
    """prod_m (1 - t^m)^(-s_m/m), expanded to order N (default: min(12, horizon)).

    Factors with m > N do not affect the expansion, but they are still part
    of the product form, so the factor list covers the whole horizon.
    """
    if N is None:
        N = min(DEFAULT_ORDER, L.horizon)
    if N > L.horizon:
        raise HorizonError(f"order {N} needs Lefschetz numbers up to m = {N}, "
                           f"got {L.horizon}")
    S = s_from_lefschetz(L)
    terms = [ExponentTerm(m, s / m) for m, s in S.items() if s]
    return make_zeta_result(terms, N, L.ring)


def degree_from_s(S):
    """sum_m s_m, the degree of the zeta product."""
    total = S.ring.zero
    for _, s in S.items():
        total = total + s
    return total
