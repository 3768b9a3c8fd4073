"""Burnside ring arithmetic through the table of marks.

An element of the rationalized Burnside ring is stored as one Fraction per
subgroup class.  Products are computed in ghost space (fixed-point counts),
where multiplication is componentwise, and pulled back by triangular
back-substitution on the table of marks.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations_with_replacement
from numbers import Rational

from .errors import GroupMismatchError, InvalidActionError
from .groups import (
    class_of,
    left_cosets,
    orbit_sizes_on_cosets,
    Subgroup,
)

__all__ = [
    "BurnsideRing",
    "BurnsideElement",
    "GSetExplicit",
    "burnside_ring",
    "to_ghost",
    "from_ghost",
    "mul",
    "gset_decompose",
    "cartesian_product",
    "disjoint_union",
    "sym_power_explicit",
    "coset_gset",
    "natural_gset",
    "forget_to_integer",
    "to_permutation_character",
    "format_fraction",
]


def format_fraction(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class BurnsideRing:
    """The rationalized Burnside ring of a finite group.

    Use :func:`burnside_ring` to get the shared instance for a group; elements
    from different ring instances never mix.
    """

    def __init__(self, group):
        self.group = group
        self.table = group.subgroup_classes
        self.marks = group.marks.marks
        self.rank = self.table.class_count

    def element(self, coeffs):
        return BurnsideElement(self, tuple(Fraction(c) for c in coeffs))

    @cached_property
    def zero(self):
        return self.element([0] * self.rank)

    @cached_property
    def one(self):
        return self.basis(self.rank - 1)

    def basis(self, h):
        """The transitive G-set [G/H] for subgroup class h."""
        c = [0] * self.rank
        c[h] = 1
        return self.element(c)

    def coset(self, H):
        """[G/H] for an explicit Subgroup H."""
        return self.basis(class_of(self.group, H))

    def scalar(self, q):
        return self.one * q

    def index_of(self, h):
        """|G/H| for class h."""
        return self.group.order // self.table[h].order

    @cached_property
    def orbit_sizes(self):
        """orbit_sizes[k][h]: K-orbit sizes on G/H for class representatives."""
        G, T = self.group, self.table
        return tuple(
            tuple(tuple(orbit_sizes_on_cosets(G, K.representative, H.representative))
                  for H in T)
            for K in T)

    def ghost(self, b):
        c = b.coeffs
        return tuple(
            sum((row[h] * c[h] for h in range(self.rank) if c[h] and row[h]), Fraction(0))
            for row in self.marks)

    def unghost(self, v):
        # marks[k][h] vanishes for k > h, so solve from the last row up
        n = self.rank
        c = [Fraction(0)] * n
        for k in range(n - 1, -1, -1):
            row = self.marks[k]
            acc = Fraction(v[k]) - sum((row[h] * c[h] for h in range(k + 1, n) if c[h]),
                                       Fraction(0))
            c[k] = acc / row[k]
        return BurnsideElement(self, tuple(c))

    def class_name(self, h):
        return f"[G/H{h}]"

    def __repr__(self):
        return f"<BurnsideRing of {self.group!r}>"


@lru_cache(maxsize=None)
def burnside_ring(group):
    """The (cached) Burnside ring of ``group``."""
    return BurnsideRing(group)


@dataclass(frozen=True, eq=False)
class BurnsideElement:
    """sum_h coeffs[h] * [G/H_h] with rational coefficients."""
    ring: BurnsideRing
    coeffs: tuple

    def _check(self, other):
        if not isinstance(other, BurnsideElement):
            return False
        if other.ring is not self.ring:
            raise GroupMismatchError("Burnside elements over different groups")
        return True

    def _coerce(self, other):
        if isinstance(other, BurnsideElement):
            self._check(other)
            return other
        if isinstance(other, Rational):
            return self.ring.scalar(other)
        return None

    def __eq__(self, other):
        if isinstance(other, BurnsideElement):
            return other.ring is self.ring and other.coeffs == self.coeffs
        if isinstance(other, Rational):
            return self == self.ring.scalar(other)
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BurnsideElement(self.ring, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return BurnsideElement(self.ring, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            q = Fraction(other)
            return BurnsideElement(self.ring, tuple(a * q for a in self.coeffs))
        if isinstance(other, BurnsideElement):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, q):
        if not isinstance(q, Rational):
            return NotImplemented
        return self * (1 / Fraction(q))

    def __bool__(self):
        return any(self.coeffs)

    def __getitem__(self, h):
        return self.coeffs[h]

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def is_effective(self):
        return self.is_integral() and all(c >= 0 for c in self.coeffs)

    def support(self):
        return [h for h, c in enumerate(self.coeffs) if c]

    def components(self):
        """(h, coeff) pairs for the nonzero coefficients, in class order."""
        return [(h, c) for h, c in enumerate(self.coeffs) if c]

    def to_json(self):
        return [{"class_index": h, "numerator": c.numerator, "denominator": c.denominator}
                for h, c in self.components()]

    def render(self):
        parts = []
        for h, c in self.components():
            name = self.ring.class_name(h)
            mag = abs(c)
            term = name if mag == 1 else f"{format_fraction(mag)}·{name}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts) if parts else "0"

    __str__ = render

    def __repr__(self):
        return f"BurnsideElement({self.render()})"


def to_ghost(b):
    """Fixed-point counts of b, one per subgroup class."""
    return b.ring.ghost(b)


def from_ghost(ring, v):
    """The unique element whose ghost vector is v."""
    return ring.unghost(v)


def mul(a, b):
    if a.ring is not b.ring:
        raise GroupMismatchError("Burnside elements over different groups")
    R = a.ring
    return R.unghost([x * y for x, y in zip(R.ghost(a), R.ghost(b))])


def forget_to_integer(b):
    """Cardinality: sum_h coeff_h |G/H_h|."""
    R = b.ring
    return sum((c * R.index_of(h) for h, c in b.components()), Fraction(0))


def to_permutation_character(b):
    """Value of the permutation character at each element conjugacy class."""
    R = b.ring
    G = R.group
    out = []
    for cls in G.conjugacy_classes:
        g = cls[0]
        val = Fraction(0)
        for h, c in b.components():
            H = R.table[h].representative
            # fixed cosets xH of g are those with x^-1 g x in H
            n_fixed = sum(1 for x in G.elements if G.conj(G.inv(x), g) in H) // H.order
            val += c * n_fixed
        out.append(val)
    return tuple(out)


# Explicit G-sets
# ---------------

@dataclass(frozen=True, eq=False)
class GSetExplicit:
    """A finite G-set: ``action[g][x]`` is the point g·x."""
    group: object
    size: int
    action: tuple

    def __post_init__(self):
        object.__setattr__(self, "action", tuple(tuple(r) for r in self.action))

    def validate(self):
        G, A, n = self.group, self.action, self.size
        if len(A) != G.order or any(len(row) != n for row in A):
            raise InvalidActionError("action table has the wrong shape")
        if any(A[0][x] != x for x in range(n)):
            raise InvalidActionError("identity does not act trivially")
        for g in G.elements:
            if sorted(A[g]) != list(range(n)):
                raise InvalidActionError(f"element {g} does not act bijectively")
            for h in G.elements:
                gh = G.product[g][h]
                if any(A[gh][x] != A[g][A[h][x]] for x in range(n)):
                    raise InvalidActionError("action does not respect composition")
        return self

    def orbits(self):
        seen = [False] * self.size
        out = []
        for x in range(self.size):
            if seen[x]:
                continue
            orb = sorted({row[x] for row in self.action})
            for y in orb:
                seen[y] = True
            out.append(orb)
        return out

    def stabilizer(self, x):
        return Subgroup(tuple(g for g in self.group.elements if self.action[g][x] == x))

    def fixed_points(self, K):
        return sum(1 for x in range(self.size)
                   if all(self.action[k][x] == x for k in K.members))

    def __len__(self):
        return self.size


def coset_gset(G, H):
    """G acting on the left cosets G/H."""
    P = G.product
    cosets = left_cosets(G, H)
    where = {}
    for i, c in enumerate(cosets):
        for x in c:
            where[x] = i
    action = [[where[P[g][c[0]]] for c in cosets] for g in G.elements]
    return GSetExplicit(G, len(cosets), action)


def natural_gset(G):
    """A permutation group acting on its domain ``range(degree)``."""
    if G.perms is None:
        raise InvalidActionError("group has no permutation representation")
    return GSetExplicit(G, G.degree, [list(p) for p in G.perms])


def gset_decompose(X, check=True):
    """Write X as sum_h k_h [G/H_h] by counting orbits by stabilizer class."""
    G = X.group
    R = burnside_ring(G)
    if check:
        X.validate()
    coeffs = [0] * R.rank
    for orb in X.orbits():
        coeffs[class_of(G, X.stabilizer(orb[0]))] += 1
    result = R.element(coeffs)
    if check:
        direct = tuple(X.fixed_points(K.representative) for K in R.table)
        assert R.ghost(result) == direct, "orbit decomposition disagrees with marks"
    return result


def cartesian_product(X, Y):
    if X.group is not Y.group:
        raise GroupMismatchError("G-sets over different groups")
    n = Y.size
    action = [[ax[i // n] * n + ay[i % n] for i in range(X.size * n)]
              for ax, ay in zip(X.action, Y.action)]
    return GSetExplicit(X.group, X.size * n, action)


def disjoint_union(X, Y):
    if X.group is not Y.group:
        raise GroupMismatchError("G-sets over different groups")
    off = X.size
    action = [list(ax) + [off + y for y in ay] for ax, ay in zip(X.action, Y.action)]
    return GSetExplicit(X.group, X.size + Y.size, action)


def sym_power_explicit(X, k):
    """k-th symmetric power: multisets of k points, as sorted tuples."""
    pts = list(combinations_with_replacement(range(X.size), k))
    index = {p: i for i, p in enumerate(pts)}
    action = [[index[tuple(sorted(row[x] for x in p))] for p in pts] for row in X.action]
    return GSetExplicit(X.group, len(pts), action)
