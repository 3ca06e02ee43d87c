"""Transformation monoid enumeration and structure queries.

Monoids here always contain the identity, whether or not it was listed as a
generator.  Enumeration is breadth-first over products, so each element's
stored word is a shortest generator word and element indices are stable for
a fixed generator list; "minimal witness" always means minimal in this
discovery order.
"""

from dataclasses import dataclass
from typing import Optional

from .elements import Transformation, _pad
from .errors import LimitExceeded

DEFAULT_MONOID_LIMIT = 2_000_000


class TransMonoid:
    """A fully enumerated transformation monoid with Cayley tables."""

    def __init__(self, degree, generators, elements, index,
                 right_cayley, left_cayley, words):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = elements          # list of Transformation, id first
        self._index = index               # images bytes -> element index
        self.right_cayley = right_cayley  # [i][j] = index of elem_i * gen_j
        self.left_cayley = left_cayley    # [i][j] = index of gen_j * elem_i
        self.words = words                # shortest generator word per index

    @property
    def size(self):
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, t):
        return isinstance(t, Transformation) and t.images in self._index

    def __repr__(self):
        return (f"TransMonoid(degree={self.degree}, size={self.size}, "
                f"generators={len(self.generators)})")

    def element_index(self, t) -> int:
        """Index of an element given as Transformation or index."""
        if isinstance(t, int):
            if not 0 <= t < self.size:
                raise ValueError(f"element index {t} out of range")
            return t
        try:
            return self._index[t.images]
        except KeyError:
            raise ValueError(f"{t!r} is not in this monoid") from None

    def product(self, i: int, j: int) -> int:
        a = self.elements[i].images
        b = self.elements[j].images
        return self._index[a.translate(_pad(b))]

    def idempotent_indices(self):
        return [i for i, t in enumerate(self.elements) if t.is_idempotent()]

    def unit_indices(self):
        """Indices of the invertible elements, in discovery order."""
        return [i for i, t in enumerate(self.elements) if t.is_permutation()]


def froidure_pin(generators, degree=None, limit=DEFAULT_MONOID_LIMIT) -> TransMonoid:
    """Enumerate ⟨generators ∪ {id}⟩ breadth-first with Cayley tables.

    Raises LimitExceeded past the element budget, reporting the partial
    count found so far.
    """
    generators = [g if isinstance(g, Transformation) else Transformation(g)
                  for g in generators]
    if degree is None:
        if not generators:
            raise ValueError("need a degree when there are no generators")
        degree = generators[0].degree
    if any(g.degree != degree for g in generators):
        raise ValueError("generators act on different point counts")

    ident = Transformation.identity(degree)
    elements = [ident]
    index = {ident.images: 0}
    padded = [_pad(g.images) for g in generators]
    right = []
    words = [()]
    i = 0
    while i < len(elements):
        row = []
        base = elements[i].images
        for j, table in enumerate(padded):
            img = base.translate(table)
            at = index.get(img)
            if at is None:
                if len(elements) >= limit:
                    raise LimitExceeded(len(elements), limit)
                at = len(elements)
                index[img] = at
                elements.append(Transformation(img))
                words.append(words[i] + (j,))
            row.append(at)
        right.append(row)
        i += 1

    left = []
    for t in elements:
        pad_t = _pad(t.images)
        left.append([index[g.images.translate(pad_t)] for g in generators])
    return TransMonoid(degree, generators, elements, index, right, left, words)


# ----- Green's relations ------------------------------------------------


@dataclass(frozen=True)
class GreenStructure:
    r_class: tuple
    l_class: tuple
    h_class: tuple
    j_class: tuple

    def class_members(self, kind):
        labels = getattr(self, kind + "_class")
        out = {}
        for i, c in enumerate(labels):
            out.setdefault(c, []).append(i)
        return [out[c] for c in sorted(out)]

    def counts(self):
        return {kind: len(set(getattr(self, kind + "_class")))
                for kind in ("r", "l", "h", "j")}


def _scc(n, out_edges):
    """Strongly connected components, iterative Tarjan; component ids are
    renumbered so they increase with the smallest member index."""
    UNSEEN = -1
    low = [0] * n
    num = [UNSEEN] * n
    on_stack = bytearray(n)
    stack = []
    comp = [UNSEEN] * n
    counter = 0
    comps = 0
    for root in range(n):
        if num[root] != UNSEEN:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                num[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = 1
            advanced = False
            edges = out_edges(v)
            while pi < len(edges):
                w = edges[pi]
                pi += 1
                if num[w] == UNSEEN:
                    work[-1] = (v, pi)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], num[w])
            if advanced:
                continue
            work.pop()
            if low[v] == num[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = 0
                    comp[w] = comps
                    if w == v:
                        break
                comps += 1
            if work:
                u, _ = work[-1]
                low[u] = min(low[u], low[v])
    # renumber by first appearance
    remap = {}
    for i in range(n):
        remap.setdefault(comp[i], len(remap))
    return tuple(remap[comp[i]] for i in range(n))


def green(monoid: TransMonoid) -> GreenStructure:
    """R/L/J as mutual reachability in the right/left/two-sided Cayley
    graphs; H as the meet of R and L."""
    cached = getattr(monoid, "_green", None)
    if cached is not None:
        return cached
    n = monoid.size
    right = monoid.right_cayley
    left = monoid.left_cayley
    r = _scc(n, lambda v: right[v])
    l = _scc(n, lambda v: left[v])
    j = _scc(n, lambda v: right[v] + left[v])
    pair_ids = {}
    h = []
    for i in range(n):
        key = (r[i], l[i])
        h.append(pair_ids.setdefault(key, len(pair_ids)))
    structure = GreenStructure(tuple(r), tuple(l), tuple(h), tuple(j))
    monoid._green = structure
    return structure


def is_r_related(monoid, a, b):
    g = green(monoid)
    return g.r_class[monoid.element_index(a)] == g.r_class[monoid.element_index(b)]


def is_l_related(monoid, a, b):
    g = green(monoid)
    return g.l_class[monoid.element_index(a)] == g.l_class[monoid.element_index(b)]


def is_h_related(monoid, a, b):
    g = green(monoid)
    return g.h_class[monoid.element_index(a)] == g.h_class[monoid.element_index(b)]


def is_j_related(monoid, a, b):
    g = green(monoid)
    return g.j_class[monoid.element_index(a)] == g.j_class[monoid.element_index(b)]


def idempotents(monoid: TransMonoid):
    return [monoid.elements[i] for i in monoid.idempotent_indices()]


# ----- property verdicts ------------------------------------------------


@dataclass(frozen=True)
class PropertyVerdict:
    """Boolean with an attached minimal witness when false."""

    holds: bool
    witness: Optional[tuple] = None

    def __bool__(self):
        return self.holds


def _verdict_true():
    return PropertyVerdict(True)


def is_regular(monoid: TransMonoid) -> PropertyVerdict:
    """Every R-class must contain an idempotent; witness: least element
    whose R-class has none."""
    g = green(monoid)
    good = {g.r_class[i] for i in monoid.idempotent_indices()}
    for i in range(monoid.size):
        if g.r_class[i] not in good:
            return PropertyVerdict(False, (monoid.elements[i],))
    return _verdict_true()


def is_completely_regular(monoid: TransMonoid) -> PropertyVerdict:
    g = green(monoid)
    good = {g.h_class[i] for i in monoid.idempotent_indices()}
    for i in range(monoid.size):
        if g.h_class[i] not in good:
            return PropertyVerdict(False, (monoid.elements[i],))
    return _verdict_true()


def is_inverse(monoid: TransMonoid) -> PropertyVerdict:
    """Regular with commuting idempotents; witness: a non-regular element
    or the least non-commuting idempotent pair."""
    reg = is_regular(monoid)
    if not reg.holds:
        return reg
    idem = monoid.idempotent_indices()
    for a in idem:
        for b in idem:
            if a < b and monoid.product(a, b) != monoid.product(b, a):
                return PropertyVerdict(
                    False, (monoid.elements[a], monoid.elements[b]))
    return _verdict_true()


def is_clifford(monoid: TransMonoid) -> PropertyVerdict:
    inv = is_inverse(monoid)
    if not inv.holds:
        return inv
    return is_completely_regular(monoid)


def is_intra_regular(monoid: TransMonoid) -> PropertyVerdict:
    """a must lie in S·a²·S for every a; equivalently a and a² generate the
    same two-sided ideal, so the check is one J-class comparison."""
    g = green(monoid)
    for i in range(monoid.size):
        sq = monoid.product(i, i)
        if g.j_class[i] != g.j_class[sq]:
            return PropertyVerdict(False, (monoid.elements[i],))
    return _verdict_true()


def has_all_square_roots(monoid: TransMonoid) -> PropertyVerdict:
    """Is squaring surjective?  Witness: least element that is no square."""
    squares = {monoid.product(i, i) for i in range(monoid.size)}
    for i in range(monoid.size):
        if i not in squares:
            return PropertyVerdict(False, (monoid.elements[i],))
    return _verdict_true()


def sqrt_in_cyclic_check(monoid: TransMonoid) -> PropertyVerdict:
    """Does every x have a square root among its own powers?"""
    for i in range(monoid.size):
        if _cyclic_sqrt_power(monoid, i) is None:
            return PropertyVerdict(False, (monoid.elements[i],))
    return _verdict_true()


def _cyclic_sqrt_power(monoid, i):
    """Least m ≥ 1 with (x^m)² = x for x = element i, or None."""
    seen = set()
    power = i
    m = 1
    while power not in seen:
        seen.add(power)
        if monoid.product(power, power) == i:
            return m
        power = monoid.product(power, i)
        m += 1
    return None


def power_cycle(monoid: TransMonoid, x) -> tuple:
    """(tail, period) of the power sequence x, x², x³, …: the least t ≥ 0
    and p ≥ 1 with x^(t+1+p) = x^(t+1)."""
    i = monoid.element_index(x)
    seen = {}
    power = i
    step = 0
    while power not in seen:
        seen[power] = step
        power = monoid.product(power, i)
        step += 1
    tail = seen[power]
    return tail, step - seen[power]


def is_union_of_odd_groups(monoid: TransMonoid) -> PropertyVerdict:
    """Every element must sit in a group H-class of odd order."""
    g = green(monoid)
    sizes = {}
    for c in g.h_class:
        sizes[c] = sizes.get(c, 0) + 1
    with_idem = {g.h_class[i] for i in monoid.idempotent_indices()}
    for i in range(monoid.size):
        c = g.h_class[i]
        if c not in with_idem or sizes[c] % 2 == 0:
            return PropertyVerdict(False, (monoid.elements[i],))
    return _verdict_true()


def is_r_commutative(monoid: TransMonoid) -> PropertyVerdict:
    """ab R ba for all a, b; witness: least pair breaking it."""
    g = green(monoid)
    r = g.r_class
    n = monoid.size
    for a in range(n):
        for b in range(a + 1, n):
            if r[monoid.product(a, b)] != r[monoid.product(b, a)]:
                return PropertyVerdict(
                    False, (monoid.elements[a], monoid.elements[b]))
    return _verdict_true()
