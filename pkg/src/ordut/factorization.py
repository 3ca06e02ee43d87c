"""Strong factorizability S = EG and the transversal equivalence harness.

An element a of a transformation monoid factors as an idempotent times a
unit exactly when some unit g makes a·g idempotent; then a = (a·g)·g⁻¹.
The harness ties this to the ordered k-ut property of the unit group: when
the property holds every rank-k extension ⟨G,t⟩ is strongly factorizable,
and when it fails the avoided (tuple, partition) pair converts into a
concrete unfactorizable map.
"""

import random
from dataclasses import dataclass
from typing import Optional

from .elements import Permutation, Transformation, _pad
from .errors import TheoremMismatch
from .groups import PermGroup, _from_elements
from .monoid import TransMonoid, froidure_pin, DEFAULT_MONOID_LIMIT
from .transversal import has_ordered_kut


@dataclass(frozen=True)
class Factorization:
    element: Transformation
    idempotent: Transformation
    unit: Permutation

    def verify(self):
        """Defining equations plus the regularity identity
        a·(g⁻¹·e)·a = a; raises on any miss."""
        a, e, g = self.element, self.idempotent, self.unit
        if e * g != a:
            raise RuntimeError("factorization does not multiply back")
        if not e.is_idempotent():
            raise RuntimeError("claimed idempotent is not idempotent")
        ge = g.inverse() * e
        if a * ge * a != a:
            raise RuntimeError("factorized element fails the regularity identity")


def units(monoid: TransMonoid) -> PermGroup:
    """The group of invertible elements (closed because the monoid is)."""
    perms = [monoid.elements[i].images for i in monoid.unit_indices()]
    return _from_elements(monoid.degree, perms)


def eg_witness(monoid: TransMonoid, a) -> Optional[Factorization]:
    """First unit g in discovery order with a·g idempotent, packaged as
    a = (a·g)·g⁻¹; None when no unit works."""
    ai = monoid.element_index(a)
    elem = monoid.elements[ai]
    base = elem.images
    for gi in monoid.unit_indices():
        g = monoid.elements[gi]
        img = base.translate(_pad(g.images))
        if _idempotent_images(img):
            g = Permutation._trusted(g.images)
            fact = Factorization(elem, Transformation(img), g.inverse())
            fact.verify()
            return fact
    return None


def _idempotent_images(img):
    return all(img[v] == v for v in set(img))


def is_strongly_factorizable(monoid: TransMonoid):
    """True when every element admits an idempotent-times-unit form.

    Returns (holds, witness): witness is the least element with no
    factorization, or None.
    """
    unit_pads = [_pad(monoid.elements[i].images) for i in monoid.unit_indices()]
    for i, elem in enumerate(monoid.elements):
        base = elem.images
        if not any(_idempotent_images(base.translate(p)) for p in unit_pads):
            return False, elem
    return True, None


def generate_with_group(group: PermGroup, t: Transformation,
                        limit=DEFAULT_MONOID_LIMIT) -> TransMonoid:
    """⟨G, t⟩ as a monoid."""
    if t.degree != group.degree:
        raise ValueError("map and group act on different point counts")
    gens = list(group.generators) + [t]
    return froidure_pin(gens, degree=group.degree, limit=limit)


# ----- rank-k map enumeration up to conjugacy ---------------------------


def rank_k_representatives(group: PermGroup, k: int):
    """One rank-k map per conjugacy orbit t ↦ g⁻¹tg, in image-list order.

    ⟨G, t⟩ and ⟨G, g⁻¹tg⟩ are conjugate monoids, so every ⟨G,t⟩ property
    tested here is constant on these orbits.
    """
    n = group.degree
    if not 1 <= k <= n:
        raise ValueError(f"rank must lie in 1..{n}")
    conj_pairs = [(g.inverse().images, _pad(g.images))
                  for g in group.perms()]
    seen = set()
    reps = []
    for images in _rank_k_images(n, k):
        if images in seen:
            continue
        reps.append(Transformation(images))
        padded = _pad(images)
        for inv_img, pad_g in conj_pairs:
            seen.add(inv_img.translate(padded).translate(pad_g))
    return reps


def _rank_k_images(n, k):
    """All image tuples of rank-k maps on n points, lexicographically."""
    stack = [(bytes(), 0)]
    while stack:
        prefix, distinct = stack.pop()
        if len(prefix) == n:
            if distinct == k:
                yield prefix
            continue
        remaining = n - len(prefix)
        for v in range(n - 1, -1, -1):
            nd = distinct + (v not in prefix)
            if nd > k or nd + remaining - 1 < k:
                continue
            stack.append((prefix + bytes([v]), nd))


def random_rank_k_map(n, k, rng) -> Transformation:
    image = rng.sample(range(n), k)
    while True:
        coloring = [rng.randrange(k) for _ in range(n)]
        if len(set(coloring)) == k:
            break
    return Transformation([image[c] for c in coloring])


# ----- the equivalence harness ------------------------------------------


@dataclass
class EquivalenceReport:
    degree: int
    group_order: int
    k: int
    mode: str
    ordered_ut_holds: bool
    tested: int
    rows: list
    counterexample: Optional[tuple]    # (t, unfactorizable element)
    consistent: bool

    def render(self):
        lines = [
            f"degree={self.degree} |G|={self.group_order} k={self.k} "
            f"mode={self.mode}",
            f"ordered {self.k}-ut: {str(self.ordered_ut_holds).lower()}",
        ]
        lines.extend(self.rows)
        if self.counterexample is not None:
            t, elem = self.counterexample
            lines.append(f"unfactorizable: t={t} element={elem}")
        lines.append(f"tested={self.tested} consistent="
                     f"{str(self.consistent).lower()}")
        return "\n".join(lines)


def check_equivalence_theorem(group: PermGroup, k: int, mode: str = "all",
                              seed: int = 0, count: int = 20,
                              limit=DEFAULT_MONOID_LIMIT) -> EquivalenceReport:
    """Cross-check ordered k-ut against strong factorizability of ⟨G,t⟩.

    Positive side: every tested rank-k t must give a strongly factorizable
    monoid.  Negative side: the avoided (tuple, partition) witness is
    turned into the map sending the i-th part onto the i-th tuple entry,
    whose monoid must contain an unfactorizable element.  Any mismatch
    raises TheoremMismatch; a clean run returns the report.
    """
    if mode not in ("all", "sample"):
        raise ValueError(f"unknown mode {mode!r}")
    verdict = has_ordered_kut(group, k)
    rows = []
    if not verdict.holds:
        t = map_from_avoided_pair(*verdict.witness)
        monoid = generate_with_group(group, t, limit=limit)
        holds, witness = is_strongly_factorizable(monoid)
        if holds:
            raise TheoremMismatch(
                f"ordered {k}-ut fails but the witness-derived map "
                f"t={t} generates a strongly factorizable monoid",
                detail={"t": t, "witness_pair": verdict.witness})
        rows.append(f"t={t} factorizable=false witness={witness}")
        report = EquivalenceReport(
            group.degree, group.order, k, mode, False, 1, rows,
            (t, witness), True)
        return report

    if mode == "all":
        maps = rank_k_representatives(group, k)
    else:
        rng = random.Random(seed)
        maps = [random_rank_k_map(group.degree, k, rng) for _ in range(count)]
    for t in maps:
        monoid = generate_with_group(group, t, limit=limit)
        holds, witness = is_strongly_factorizable(monoid)
        if not holds:
            raise TheoremMismatch(
                f"ordered {k}-ut holds but t={t} gives an unfactorizable "
                f"element {witness}",
                detail={"t": t, "element": witness})
        fact = eg_witness(monoid, t)
        rows.append(f"t={t} factorizable=true "
                    f"witness=e={fact.idempotent},g={fact.unit.cycle_string()}")
    return EquivalenceReport(
        group.degree, group.order, k, mode, True, len(maps), rows, None, True)


def map_from_avoided_pair(ktuple, partition) -> Transformation:
    """Turn an avoided (tuple, partition) pair into a map by sending every
    point of the i-th part to the i-th tuple entry."""
    entries = ktuple.entries
    return Transformation([entries[c] for c in partition.color_of])
