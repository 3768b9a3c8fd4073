"""Finite groups as multiplication tables, their subgroup classes and marks.

Elements are the integers ``0 .. order-1`` with ``0`` the identity.  Groups
are normally built from permutations; the permutations are kept so that
subgroups can be printed in cycle notation.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import gcd

from .errors import ContainmentError, InvalidSubgroupError, SizeLimitError

DEFAULT_MAX_ORDER = 512

__all__ = [
    "DEFAULT_MAX_ORDER",
    "FiniteGroup",
    "Subgroup",
    "SubgroupClass",
    "SubgroupClassTable",
    "TableOfMarks",
    "build_group_from_permutations",
    "builtin_group",
    "parse_cycles",
    "format_cycles",
    "subgroup_generated",
    "make_subgroup",
    "enumerate_subgroup_classes",
    "class_of",
    "pair_class_of",
    "table_of_marks",
    "orbit_sizes_on_cosets",
    "element_conjugacy_classes",
]


# Permutations
# ------------

def _compose(p, q):
    # apply q first, then p
    return tuple(p[i] for i in q)


def _perm_inverse(p):
    inv = [0] * len(p)
    for i, v in enumerate(p):
        inv[v] = i
    return tuple(inv)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree):
    """Parse cycle notation such as ``"(0 1 2)(3 4)"`` into an image tuple.

    Points are 0-based; ``"()"`` is the identity.  Commas are accepted as
    separators inside a cycle.
    """
    text = text.strip()
    if _CYCLE_RE.sub("", text).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    perm = list(range(degree))
    seen = set()
    for body in _CYCLE_RE.findall(text):
        pts = [int(tok) for tok in body.replace(",", " ").split()]
        for x in pts:
            if not 0 <= x < degree:
                raise ValueError(f"point {x} out of range for degree {degree}")
            if x in seen:
                raise ValueError(f"point {x} repeated in {text!r}")
            seen.add(x)
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def format_cycles(perm):
    """Cycle notation for an image tuple, fixed points omitted."""
    seen = set()
    parts = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = [start]
        seen.add(start)
        x = perm[start]
        while x != start:
            cyc.append(x)
            seen.add(x)
            x = perm[x]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


# Groups
# ------

class FiniteGroup:
    """A finite group given by its multiplication table.

    ``product[a][b]`` is the id of ``a*b``; when the group comes from
    permutations, ``a*b`` means "apply b, then a", so that ``perms`` is a
    left action on ``range(degree)``.
    """

    def __init__(self, product, inverse=None, label=None, perms=None):
        self.product = tuple(tuple(row) for row in product)
        self.order = len(self.product)
        if inverse is None:
            inverse = [row.index(0) for row in self.product]
        self.inverse = tuple(inverse)
        self.label = label
        self.perms = tuple(perms) if perms is not None else None

    @property
    def elements(self):
        return range(self.order)

    @property
    def degree(self):
        return len(self.perms[0]) if self.perms else None

    def mul(self, a, b):
        return self.product[a][b]

    def inv(self, a):
        return self.inverse[a]

    def conj(self, g, x):
        """g x g^-1"""
        return self.product[self.product[g][x]][self.inverse[g]]

    def element_order(self, a):
        k, x = 1, a
        while x != 0:
            x = self.product[x][a]
            k += 1
        return k

    def element_name(self, a):
        if self.perms is not None:
            return format_cycles(self.perms[a])
        return str(a)

    def check_axioms(self):
        """Exhaustively verify identity, inverses and associativity."""
        P, n = self.product, self.order
        for a in range(n):
            if P[0][a] != a or P[a][0] != a:
                return False
            if P[a][self.inverse[a]] != 0:
                return False
        return all(P[P[a][b]][c] == P[a][P[b][c]]
                   for a in range(n) for b in range(n) for c in range(n))

    # lazily computed structure, see the module-level functions
    @cached_property
    def subgroup_classes(self):
        return _enumerate_subgroup_classes(self)

    @cached_property
    def marks(self):
        return _table_of_marks(self, self.subgroup_classes)

    @cached_property
    def conjugacy_classes(self):
        return _element_conjugacy_classes(self)

    @cached_property
    def whole(self):
        return Subgroup(tuple(self.elements))

    @cached_property
    def trivial(self):
        return Subgroup((0,))

    def __repr__(self):
        name = self.label or "FiniteGroup"
        return f"<{name} of order {self.order}>"


def build_group_from_permutations(degree, generators, max_order=DEFAULT_MAX_ORDER,
                                  label=None):
    """Close a list of permutations of ``range(degree)`` into a FiniteGroup.

    Generators may be image tuples or cycle-notation strings.  Element ids are
    assigned breadth-first from the identity, applying generators in order.
    """
    gens = []
    for g in generators:
        p = parse_cycles(g, degree) if isinstance(g, str) else tuple(g)
        if sorted(p) != list(range(degree)):
            raise ValueError(f"generator {g!r} is not a permutation of {degree} points")
        gens.append(p)

    identity = tuple(range(degree))
    index = {identity: 0}
    perms = [identity]
    queue = deque([identity])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = _compose(g, x)
            if y not in index:
                if len(perms) >= max_order:
                    raise SizeLimitError(f"group order exceeds the cap of {max_order}")
                index[y] = len(perms)
                perms.append(y)
                queue.append(y)

    product = [[index[_compose(a, b)] for b in perms] for a in perms]
    inverse = [index[_perm_inverse(a)] for a in perms]
    return FiniteGroup(product, inverse, label=label, perms=perms)


def builtin_group(family, n, max_order=DEFAULT_MAX_ORDER):
    """Cyclic, symmetric or dihedral group in its standard permutation form.

    ``dihedral`` n is the symmetry group of the n-gon, of order 2n; n = 1
    and n = 2 are realized on 2 and 4 points so that the action is faithful.
    """
    if n < 1:
        raise SizeLimitError(f"n must be positive, got {n}")
    if family == "cyclic":
        if n > max_order:
            raise SizeLimitError(f"cyclic group of order {n} exceeds the cap of {max_order}")
        gens = [tuple((i + 1) % n for i in range(n))] if n > 1 else []
        return build_group_from_permutations(max(n, 1), gens, max_order, label=f"C{n}")
    if family == "symmetric":
        if n > 6:
            raise SizeLimitError("symmetric groups are limited to n <= 6")
        gens = []
        if n > 1:
            gens = [parse_cycles("(0 1)", n),
                    tuple((i + 1) % n for i in range(n))]
        return build_group_from_permutations(n, gens, max_order, label=f"S{n}")
    if family == "dihedral":
        if 2 * n > max_order:
            raise SizeLimitError(f"dihedral group of order {2 * n} exceeds the cap of {max_order}")
        if n == 1:
            return build_group_from_permutations(2, ["(0 1)"], max_order, label="D1")
        if n == 2:
            return build_group_from_permutations(4, ["(0 1)(2 3)", "(0 2)(1 3)"],
                                                 max_order, label="D2")
        rot = tuple((i + 1) % n for i in range(n))
        ref = tuple((-i) % n for i in range(n))
        return build_group_from_permutations(n, [rot, ref], max_order, label=f"D{n}")
    raise ValueError(f"unknown group family {family!r}")


# Subgroups
# ---------

@dataclass(frozen=True)
class Subgroup:
    members: tuple

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    @property
    def order(self):
        return len(self.members)

    @cached_property
    def member_set(self):
        return frozenset(self.members)

    def __contains__(self, x):
        return x in self.member_set

    def __len__(self):
        return len(self.members)

    def issubset(self, other):
        return self.member_set <= other.member_set


def _closure(G, gens):
    P = G.product
    elems = {0}
    frontier = [0]
    gens = [g for g in gens if g != 0]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = P[x][g]
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return frozenset(elems)


def subgroup_generated(G, gens):
    """The subgroup of G generated by a list of element ids."""
    for g in gens:
        if not 0 <= g < G.order:
            raise InvalidSubgroupError(f"element id {g} out of range")
    return Subgroup(tuple(_closure(G, gens)))


def make_subgroup(G, members):
    """Wrap a set of element ids as a Subgroup, checking closure."""
    s = frozenset(members)
    if 0 not in s:
        raise InvalidSubgroupError("subgroup must contain the identity")
    for a in s:
        if not 0 <= a < G.order:
            raise InvalidSubgroupError(f"element id {a} out of range")
        if G.inverse[a] not in s:
            raise InvalidSubgroupError("set is not closed under inverses")
        for b in s:
            if G.product[a][b] not in s:
                raise InvalidSubgroupError("set is not closed under multiplication")
    return Subgroup(tuple(s))


def generators_of(G, S):
    """A small generating set of S, chosen greedily in id order."""
    gens = []
    span = frozenset([0])
    for x in S.members:
        if x not in span:
            gens.append(x)
            span = _closure(G, gens)
            if len(span) == S.order:
                break
    return gens


def _conjugate_set(G, g, members):
    return frozenset(G.conj(g, x) for x in members)


@dataclass(frozen=True)
class SubgroupClass:
    index: int
    representative: Subgroup
    members: tuple          # every subgroup in the class
    normalizer_order: int

    @property
    def order(self):
        return self.representative.order

    @property
    def size(self):
        return len(self.members)


@dataclass(frozen=True)
class SubgroupClassTable:
    classes: tuple
    lookup: dict            # frozenset of members -> class index

    @property
    def class_count(self):
        return len(self.classes)

    def __len__(self):
        return len(self.classes)

    def __getitem__(self, i):
        return self.classes[i]

    def __iter__(self):
        return iter(self.classes)


def _enumerate_subgroup_classes(G):
    # Cyclic subgroups, then joins with cyclic subgroups until nothing new.
    # Joins commute with conjugation, so only one subgroup per class is joined.
    cyclic = {}
    for g in G.elements:
        c = _closure(G, [g])
        cyclic.setdefault(c, g)
    cyc_gens = sorted(cyclic.values())

    found = {}              # every subgroup seen -> index into raw
    raw = []                # (order, least member tuple, sorted member tuples, generators)

    def add_class(S, gens):
        orbit = {_conjugate_set(G, g, S) for g in G.elements}
        for T in orbit:
            found[T] = len(raw)
        members = sorted(tuple(sorted(T)) for T in orbit)
        raw.append((len(S), members[0], members, gens))

    for c, g in cyclic.items():
        if c not in found:
            add_class(c, [g])
    i = 0
    while i < len(raw):
        sgens = raw[i][3]
        S = _closure(G, sgens)
        for c in cyc_gens:
            if c in S:
                continue
            J = _closure(G, sgens + [c])
            if J not in found:
                add_class(J, sgens + [c])
        i += 1
    raw.sort(key=lambda r: (r[0], r[1]))

    classes = []
    lookup = {}
    for i, (_, rep, members, _gens) in enumerate(raw):
        subs = tuple(Subgroup(m) for m in members)
        for s in subs:
            lookup[s.member_set] = i
        classes.append(SubgroupClass(i, Subgroup(rep), subs, G.order // len(members)))
    return SubgroupClassTable(tuple(classes), lookup)


def enumerate_subgroup_classes(G):
    """All conjugacy classes of subgroups, in canonical order.

    Classes are sorted by subgroup order, then by the lexicographically least
    sorted member tuple in the class; class 0 is trivial, the last is G.
    """
    return G.subgroup_classes


def class_of(G, S, table=None):
    """Index of the subgroup class containing S."""
    table = table or G.subgroup_classes
    if not isinstance(S, Subgroup):
        S = Subgroup(tuple(S))
    try:
        return table.lookup[S.member_set]
    except KeyError:
        make_subgroup(G, S.members)     # raises with a precise reason
        raise InvalidSubgroupError("subgroup not found in class table") from None


def pair_class_of(G, H, Hhat):
    """Canonical id of the pair (H, Hhat) up to simultaneous conjugation.

    The id is the lexicographically least ``(gHg^-1, gHhat g^-1)`` over all g,
    each component as a sorted member tuple.
    """
    if not Hhat.issubset(H):
        raise ContainmentError("Hhat is not contained in H")
    best = None
    for g in G.elements:
        cand = (tuple(sorted(_conjugate_set(G, g, H.members))),
                tuple(sorted(_conjugate_set(G, g, Hhat.members))))
        if best is None or cand < best:
            best = cand
    return best


# Marks
# -----

@dataclass(frozen=True)
class TableOfMarks:
    """``marks[k][h]`` = number of points of G/H fixed by K (K row, H column)."""
    marks: tuple

    @property
    def dimension(self):
        return len(self.marks)

    def __getitem__(self, kh):
        k, h = kh
        return self.marks[k][h]

    def column(self, h):
        return tuple(row[h] for row in self.marks)


def _table_of_marks(G, table):
    n = table.class_count
    marks = [[0] * n for _ in range(n)]
    for K in table:
        for H in table:
            if K.order > H.order or H.order % K.order:
                continue
            inside = sum(1 for Kc in K.members if Kc.issubset(H.representative))
            # |{g : g^-1 K g <= H}| = |N(K)| * #{conjugates of K inside H}
            marks[K.index][H.index] = K.normalizer_order * inside // H.order
    return TableOfMarks(tuple(tuple(r) for r in marks))


def table_of_marks(G, table=None):
    if table is None or table is G.subgroup_classes:
        return G.marks
    return _table_of_marks(G, table)


def left_cosets(G, H):
    """Left cosets xH as sorted tuples, ordered by least element."""
    P = G.product
    seen = set()
    cosets = []
    for x in G.elements:
        if x in seen:
            continue
        c = tuple(sorted(P[x][h] for h in H.members))
        seen.update(c)
        cosets.append(c)
    return cosets


def orbit_sizes_on_cosets(G, K, H):
    """Sizes of the K-orbits on G/H, sorted ascending."""
    P = G.product
    cosets = left_cosets(G, H)
    where = {}
    for i, c in enumerate(cosets):
        for x in c:
            where[x] = i
    done = [False] * len(cosets)
    sizes = []
    for i, c in enumerate(cosets):
        if done[i]:
            continue
        orbit = {where[P[k][c[0]]] for k in K.members}
        for j in orbit:
            done[j] = True
        sizes.append(len(orbit))
    return sorted(sizes)


def _element_conjugacy_classes(G):
    seen = set()
    classes = []
    for x in G.elements:
        if x in seen:
            continue
        cls = sorted({G.conj(g, x) for g in G.elements})
        seen.update(cls)
        classes.append(tuple(cls))
    classes.sort(key=lambda c: (G.element_order(c[0]), c[0]))
    return tuple(classes)


def element_conjugacy_classes(G):
    """Conjugacy classes of elements, ordered by element order then least id."""
    return G.conjugacy_classes


def is_normal(G, N, H):
    """True if N is normal in H (both subgroups of G)."""
    return all(_conjugate_set(G, h, N.members) == N.member_set for h in H.members)


def is_cyclic_quotient(G, H, N):
    """True if H/N is cyclic, N normal in H."""
    idx = H.order // N.order
    if idx == 1:
        return True
    nmem = list(N.members)
    for h in H.members:
        if h in N:
            continue
        if len(_closure(G, nmem + [h])) == H.order:
            return True
    return False


def lcm(a, b):
    return a * b // gcd(a, b)
