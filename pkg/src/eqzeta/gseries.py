"""Truncated power series in t with Burnside-ring coefficients.

Series are handled in ghost space: a series over the Burnside ring is the
same thing as one rational series per subgroup class K (the K-fixed-point
counts of each coefficient).  Powers ``(1 - t^m)^(-b)`` with rational b are
defined there as ``exp(b * log(...))``, which is additive in b and agrees
with symmetric powers when b is an honest G-set.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import scalar
from .burnside import burnside_ring, gset_decompose, sym_power_explicit
from .errors import GroupMismatchError, NonUnitError, SizeLimitError

DEFAULT_ORDER = 12
MAX_ORDER = 64
MAX_MULTISETS = 10 ** 6

__all__ = [
    "DEFAULT_ORDER",
    "MAX_ORDER",
    "GSeries",
    "ExponentTerm",
    "lambda_series",
    "power_series",
    "mul_series",
    "inverse",
    "expand_product",
    "degree_of_product",
    "normalize_terms",
    "render_product",
    "terms_to_json",
]


def _check_order(N):
    if N < 0:
        raise ValueError("truncation order must be non-negative")
    if N > MAX_ORDER:
        raise SizeLimitError(f"truncation order {N} exceeds the cap of {MAX_ORDER}")


@dataclass(frozen=True, eq=False)
class GSeries:
    """c_0 + c_1 t + ... + c_N t^N with each c_k a BurnsideElement."""
    ring: object
    coeffs: tuple

    @property
    def order(self):
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, GSeries):
            return NotImplemented
        return self.ring is other.ring and self.coeffs == other.coeffs

    __hash__ = None

    def truncate(self, N):
        return GSeries(self.ring, self.coeffs[:N + 1])

    def ghost_series(self):
        """One rational series per subgroup class."""
        gh = [self.ring.ghost(c) for c in self.coeffs]
        return [[v[k] for v in gh] for k in range(self.ring.rank)]

    @classmethod
    def from_ghost_series(cls, ring, ghosts):
        n = min(len(s) for s in ghosts)
        return cls(ring, tuple(ring.unghost([s[d] for s in ghosts]) for d in range(n)))

    @classmethod
    def constant(cls, ring, N, value=None):
        value = ring.one if value is None else value
        return cls(ring, (value,) + (ring.zero,) * N)

    def forget(self):
        """Coefficientwise cardinality, as a list of Fractions."""
        return [c.ring.ghost(c)[0] for c in self.coeffs]

    def __mul__(self, other):
        return mul_series(self, other)

    def render(self):
        return "\n".join(f"t^{k}: {c.render()}" for k, c in enumerate(self.coeffs))

    def to_json(self):
        return [c.to_json() for c in self.coeffs]

    def __repr__(self):
        return f"GSeries(order={self.order}, {self.ring!r})"


@dataclass(frozen=True)
class ExponentTerm:
    """The factor ``(1 - t^m)^(-exponent)``.

    The sign follows the symmetric-power convention: exponent [X] gives the
    series 1 + [X] t^m + [S^2 X] t^(2m) + ...
    """
    m: int
    exponent: object

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("m must be a positive integer")

    def render(self):
        return f"(1-t^{self.m})^({(-self.exponent).render()})"


def _ghost_log(m, b, N):
    """Per-class log of (1 - t^m)^(-b)."""
    R = b.ring
    out = []
    for k in range(R.rank):
        acc = [Fraction(0)] * (N + 1)
        for h, q in b.components():
            for size in R.orbit_sizes[k][h]:
                if m * size > N:
                    continue
                for j in range(1, N // (m * size) + 1):
                    acc[m * size * j] += q / j
        out.append(acc)
    return out


def lambda_series(X, N=DEFAULT_ORDER, max_multisets=MAX_MULTISETS):
    """1 + [X] t + [S^2 X] t^2 + ..., by enumerating symmetric powers."""
    _check_order(N)
    if comb(X.size + N, N) > max_multisets:
        raise SizeLimitError(f"symmetric powers of a {X.size}-point set to order {N} "
                             f"exceed {max_multisets} multisets")
    R = burnside_ring(X.group)
    return GSeries(R, tuple(gset_decompose(sym_power_explicit(X, k), check=False)
                            for k in range(N + 1)))


def power_series(m, b, N=DEFAULT_ORDER):
    """(1 - t^m)^(-b) for a rational Burnside element b."""
    _check_order(N)
    if m < 1:
        raise ValueError("m must be a positive integer")
    return GSeries.from_ghost_series(b.ring, [scalar.exp(g) for g in _ghost_log(m, b, N)])


def mul_series(A, B):
    if A.ring is not B.ring:
        raise GroupMismatchError("series over different groups")
    ga, gb = A.ghost_series(), B.ghost_series()
    return GSeries.from_ghost_series(A.ring, [scalar.mul(x, y) for x, y in zip(ga, gb)])


def inverse(A):
    if A.coeffs[0] != A.ring.one:
        raise NonUnitError("constant term is not [G/G]")
    return GSeries.from_ghost_series(A.ring, [scalar.inverse(s) for s in A.ghost_series()])


def expand_product(terms, N=DEFAULT_ORDER, ring=None):
    """prod (1 - t^m)^(-exponent) over the terms, to order N.

    ``ring`` is needed only when ``terms`` is empty.
    """
    _check_order(N)
    terms = list(terms)
    if ring is None:
        if not terms:
            raise ValueError("ring is required for an empty product")
        ring = terms[0].exponent.ring
    logs = [[Fraction(0)] * (N + 1) for _ in range(ring.rank)]
    for t in terms:
        if t.exponent.ring is not ring:
            raise GroupMismatchError("factors over different groups")
        for acc, g in zip(logs, _ghost_log(t.m, t.exponent, N)):
            for d, x in enumerate(g):
                if x:
                    acc[d] += x
    return GSeries.from_ghost_series(ring, [scalar.exp(g) for g in logs])


def degree_of_product(terms, ring=None):
    """sum m * exponent over the factors (1 - t^m)^(-exponent)."""
    terms = list(terms)
    total = None
    for t in terms:
        total = t.exponent * t.m if total is None else total + t.exponent * t.m
    if total is None:
        if ring is None:
            raise ValueError("ring is required for an empty product")
        return ring.zero
    return total


def normalize_terms(terms):
    """Merge factors by (m, subgroup class), drop trivial ones and sort.

    Every output term has an exponent supported on a single class, so two
    products compare equal exactly when their normalized lists do.
    """
    merged = {}
    for t in terms:
        R = t.exponent.ring
        for h, q in t.exponent.components():
            merged[(t.m, h)] = merged.get((t.m, h), 0) + q
    out = []
    for (m, h), q in sorted(merged.items()):
        if q:
            out.append(ExponentTerm(m, R.basis(h) * q))
    return out


def render_product(terms):
    return "·".join(t.render() for t in terms) if terms else "1"


def terms_to_json(terms):
    """Factors as {m, power}, where power is the exponent as displayed."""
    return [{"m": t.m, "power": (-t.exponent).to_json()} for t in terms]
