"""Materialized permutation groups and their action-theoretic predicates.

Groups at this scale (a few hundred thousand elements at most) are simply
enumerated: closure under right multiplication by the generators, elements
kept as packed byte strings in BFS discovery order.  Every predicate below
works off that element list, which keeps witnesses deterministic.
"""

import itertools
from dataclasses import dataclass
from math import factorial, lcm

from .elements import Permutation, _pad
from .errors import LimitExceeded

DEFAULT_GROUP_LIMIT = 2_000_000


class PermGroup:
    """A permutation group on {0,...,n-1}, held as its full element set."""

    def __init__(self, degree, generators, elements):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = elements            # list of bytes, identity first
        self.element_set = frozenset(elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __contains__(self, p) -> bool:
        images = p.images if isinstance(p, Permutation) else bytes(p)
        return images in self.element_set

    def __eq__(self, other):
        return (isinstance(other, PermGroup)
                and self.degree == other.degree
                and self.element_set == other.element_set)

    def __hash__(self):
        return hash((self.degree, self.element_set))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    def perms(self):
        """Elements wrapped back into Permutation, in discovery order."""
        return [Permutation._trusted(b) for b in self.elements]

    def is_trivial(self) -> bool:
        return self.order == 1

    def exponent(self) -> int:
        return lcm(*(Permutation._trusted(b).order() for b in self.elements))

    # ----- orbits ------------------------------------------------------

    def orbit(self, point: int) -> list:
        return _orbit(point, self.generators, lambda x, g: g.images[x])

    def orbits_on_points(self) -> list:
        seen = set()
        out = []
        for x in range(self.degree):
            if x in seen:
                continue
            orb = self.orbit(x)
            seen.update(orb)
            out.append(orb)
        return out

    def is_transitive(self) -> bool:
        return len(self.orbit(0)) == self.degree if self.degree else True

    def orbit_of_tuple(self, t) -> list:
        return _orbit(tuple(t), self.generators,
                      lambda tt, g: tuple(g.images[x] for x in tt))

    def orbits_on_tuples(self, k: int) -> list:
        """Orbit partition of all ordered k-tuples of distinct points."""
        seen = set()
        out = []
        for t in itertools.permutations(range(self.degree), k):
            if t in seen:
                continue
            orb = self.orbit_of_tuple(t)
            seen.update(orb)
            out.append(orb)
        return out

    def orbit_of_set(self, s) -> list:
        return _orbit(frozenset(s), self.generators,
                      lambda ss, g: frozenset(g.images[x] for x in ss))

    def orbits_on_sets(self, k: int) -> list:
        seen = set()
        out = []
        for c in itertools.combinations(range(self.degree), k):
            s = frozenset(c)
            if s in seen:
                continue
            orb = self.orbit_of_set(s)
            seen.update(orb)
            out.append(orb)
        return out

    # ----- transitivity ladder -----------------------------------------

    def transitivity_degree(self, max_k: int | None = None) -> int:
        """Largest k with a single orbit on ordered k-tuples (0 if intransitive)."""
        n = self.degree
        cap = n if max_k is None else min(max_k, n)
        k = 0
        while k < cap:
            k += 1
            full = 1
            for i in range(k):
                full *= n - i
            if len(self.orbit_of_tuple(tuple(range(k)))) < full:
                return k - 1
        return cap

    def homogeneity_degree(self) -> int:
        """Largest k <= n/2 with a single orbit on k-subsets."""
        n = self.degree
        best = 0
        for k in range(1, n // 2 + 1):
            full = 1
            for i in range(k):
                full = full * (n - i) // (i + 1)
            if len(self.orbit_of_set(range(k))) < full:
                break
            best = k
        return best

    # ----- stabilizers and restrictions --------------------------------

    def point_stabilizer(self, points) -> "PermGroup":
        """Pointwise stabilizer, materialized by filtering the element list.

        Accepts a single point or an iterable of points.
        """
        pts = [points] if isinstance(points, int) else list(points)
        kept = [b for b in self.elements if all(b[x] == x for x in pts)]
        return _from_elements(self.degree, kept)

    def setwise_stabilizer(self, points) -> "PermGroup":
        s = frozenset(points)
        kept = [b for b in self.elements
                if frozenset(b[x] for x in s) == s]
        return _from_elements(self.degree, kept)

    def restriction(self, points) -> "PermGroup":
        """The action induced on an invariant subset, relabeled to 0..m-1."""
        pts = sorted(points)
        pos = {p: i for i, p in enumerate(pts)}
        for b in self.generators:
            if not all(b.images[p] in pos for p in pts):
                raise ValueError("subset is not invariant under the group")
        relabeled = []
        seen = set()
        for b in self.elements:
            img = bytes(pos[b[p]] for p in pts)
            if img not in seen:
                seen.add(img)
                relabeled.append(img)
        return _from_elements(len(pts), relabeled)

    # ----- primitivity --------------------------------------------------

    def minimal_block(self, a: int, b: int) -> frozenset:
        """Smallest block of a G-congruence containing both points (union-find
        pair-merge: merging a~b and closing under the generator action)."""
        n = self.degree
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        queue = [(a, b)]
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
        while queue:
            x, y = queue.pop()
            for g in self.generators:
                gx, gy = find(g.images[x]), find(g.images[y])
                if gx != gy:
                    parent[gx] = gy
                    queue.append((gx, gy))
        root = find(a)
        return frozenset(x for x in range(n) if find(x) == root)

    def imprimitivity_block(self) -> frozenset | None:
        """A nontrivial block if one exists, else None."""
        n = self.degree
        if n == 1:
            return None
        if not self.is_transitive():
            for orb in self.orbits_on_points():
                if 1 < len(orb) < n:
                    return frozenset(orb)
            # every orbit is a singleton: the group is trivial and any pair works
            return frozenset({0, 1})
        for b in range(1, n):
            block = self.minimal_block(0, b)
            if len(block) < n:
                return block
        return None

    def is_primitive(self) -> bool:
        """Transitive with no nontrivial block system."""
        if self.degree == 1:
            return True
        return self.is_transitive() and self.imprimitivity_block() is None

    def is_k_primitive(self, k: int) -> bool:
        """k-transitive, with the (k-1)-point stabilizer primitive on the rest."""
        n = self.degree
        if not 1 <= k <= n - 1 and not (k == 1 and n == 1):
            raise ValueError("need 1 <= k <= degree-1")
        if self.transitivity_degree(max_k=k) < k:
            return False
        if k == 1:
            return self.is_primitive()
        fixed = list(range(k - 1))
        stab = self.point_stabilizer(fixed)
        rest = [x for x in range(n) if x not in fixed]
        return stab.restriction(rest).is_primitive()

    def is_generously_k_transitive(self, k: int) -> bool:
        """Setwise stabilizer of every (k+1)-set induces the full symmetric
        group on it (checked on one representative per orbit of (k+1)-sets)."""
        m = k + 1
        if not 1 <= k <= self.degree - 1:
            raise ValueError("need 1 <= k <= degree-1")
        target = factorial(m)
        for orb in self.orbits_on_sets(m):
            rep = sorted(orb[0])
            pos = {p: i for i, p in enumerate(rep)}
            induced = set()
            for b in self.elements:
                if all(b[x] in pos for x in rep):
                    induced.add(tuple(pos[b[x]] for x in rep))
                    if len(induced) == target:
                        break
            if len(induced) < target:
                return False
        return True

    # ----- orbitals ------------------------------------------------------

    def orbitals(self) -> list:
        """Orbits on ordered pairs, diagonal ones first, with pairing flags."""
        out = [Orbital(pairs=tuple((x, x) for x in orb), diagonal=True,
                       self_paired=True)
               for orb in self.orbits_on_points()]
        if self.degree < 2:
            return out
        for orb in self.orbits_on_tuples(2):
            pairs = tuple(orb)
            pair_set = set(pairs)
            out.append(Orbital(
                pairs=pairs,
                diagonal=False,
                self_paired=all((b, a) in pair_set for a, b in pairs),
            ))
        return out


@dataclass(frozen=True)
class Orbital:
    pairs: tuple
    diagonal: bool
    self_paired: bool

    def __len__(self):
        return len(self.pairs)


def _orbit(start, generators, act):
    seen = {start}
    queue = [start]
    i = 0
    while i < len(queue):
        x = queue[i]
        i += 1
        for g in generators:
            y = act(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return queue


def _from_elements(degree: int, elements) -> PermGroup:
    """Wrap an already-closed element list (subgroup filters, normalizers)."""
    if not elements:
        elements = [bytes(range(degree))]
    gens = [Permutation._trusted(b) for b in elements]
    return PermGroup(degree, gens, list(elements))


def enumerate_group(generators, degree: int | None = None,
                    limit: int = DEFAULT_GROUP_LIMIT) -> PermGroup:
    """Close a generating set under products; identity is always included."""
    gens = [g if isinstance(g, Permutation) else Permutation(g)
            for g in generators]
    if degree is None:
        if not gens:
            raise ValueError("degree required for an empty generating set")
        degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generator degree mismatch")
    identity = bytes(range(degree))
    tables = [_pad(g.images) for g in gens]
    elements = [identity]
    seen = {identity}
    i = 0
    while i < len(elements):
        current = elements[i]
        i += 1
        for table in tables:
            nxt = current.translate(table)
            if nxt not in seen:
                if len(seen) >= limit:
                    raise LimitExceeded(len(seen), limit)
                seen.add(nxt)
                elements.append(nxt)
    return PermGroup(degree, gens, elements)


def trivial_group(degree: int) -> PermGroup:
    return enumerate_group([], degree=degree)


def strongly_connected(n: int, arcs) -> bool:
    """Is the digraph on 0..n-1 with the given arcs strongly connected?
    (Kosaraju-style double sweep; small n, so plain BFS twice.)"""
    fwd = [[] for _ in range(n)]
    back = [[] for _ in range(n)]
    for a, b in arcs:
        fwd[a].append(b)
        back[b].append(a)

    def reaches_all(adj):
        seen = {0}
        stack = [0]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return len(seen) == n

    return reaches_all(fwd) and reaches_all(back)
