"""Universal transversal deciders.

A group G on n points has the ordered k-ut property when for every ordered
k-tuple of distinct points and every ordered partition of the points into k
nonempty parts there is some g mapping the i-th tuple entry into the i-th
part.  The unordered variant asks only that some image of each k-set meets
every part of each k-partition exactly once.

Two decision strategies are provided.  The exhaustive one encodes ordered
partitions as base-k integers and marks, for every tuple in an orbit, the
k^(n-k) colorings that tuple lies across; an unmarked surjective code is a
counterexample.  The csp one searches for an avoided coloring directly by
backtracking.  Both report the same verdicts; witnesses from either are
re-verified by a sweep over the whole group before they are returned.
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Optional

from .errors import LimitExceeded
from .groups import PermGroup

# colorings examined, csp nodes, or partition scans, whichever the strategy
DEFAULT_WORK_LIMIT = 200_000_000
# exhaustive strategy allocates one byte per k-coloring; beyond this, refuse
EXHAUSTIVE_CELL_LIMIT = 10 ** 8
# auto strategy prefers exhaustive only while the table stays modest
_AUTO_CELL_CUTOFF = 2_000_000
_AUTO_MARK_CUTOFF = 8_000_000


@dataclass(frozen=True)
class KTuple:
    """An ordered tuple of pairwise distinct points."""

    entries: tuple

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(set(self.entries)) != len(self.entries):
            raise ValueError("tuple entries must be pairwise distinct")

    @property
    def k(self):
        return len(self.entries)

    def render(self) -> str:
        return "(" + ",".join(str(a + 1) for a in self.entries) + ")"


@dataclass(frozen=True)
class OrderedPartition:
    """A surjective coloring of the points with parts indexed 0..k-1."""

    color_of: tuple
    k: int

    def __post_init__(self):
        object.__setattr__(self, "color_of", tuple(self.color_of))
        seen = set(self.color_of)
        if seen != set(range(self.k)):
            raise ValueError("every part of an ordered partition must be nonempty")

    def parts(self):
        out = [[] for _ in range(self.k)]
        for x, c in enumerate(self.color_of):
            out[c].append(x)
        return tuple(tuple(p) for p in out)

    def render(self) -> str:
        return "[" + "|".join(
            ",".join(str(x + 1) for x in p) for p in self.parts()) + "]"


def is_section(t, p: OrderedPartition) -> bool:
    """True when the i-th entry lies in the i-th part."""
    entries = t.entries if isinstance(t, KTuple) else tuple(t)
    if len(entries) != p.k:
        raise ValueError(f"arity mismatch: {len(entries)}-tuple against "
                         f"{p.k}-partition")
    return all(p.color_of[a] == i for i, a in enumerate(entries))


@dataclass(frozen=True)
class UtVerdict:
    holds: bool
    witness: Optional[tuple]        # (KTuple, OrderedPartition) when holds is false
    strategy: str                   # exhaustive | csp | trivial
    work: dict = field(compare=False, default_factory=dict)

    def witness_text(self) -> Optional[str]:
        if self.witness is None:
            return None
        t, p = self.witness
        return f"tuple={t.render()}; parts={p.render()}"


class _WorkMeter:
    """Shared step counter with a hard budget."""

    __slots__ = ("total", "limit")

    def __init__(self, limit):
        self.total = 0
        self.limit = limit

    def add(self, steps):
        self.total += steps
        if self.total > self.limit:
            raise LimitExceeded(
                self.total, self.limit,
                f"transversal search passed its work budget of {self.limit} "
                f"steps; raise the limit to continue")


def has_ordered_kut(group: PermGroup, k: int, strategy: str = "auto",
                    limit: int = DEFAULT_WORK_LIMIT) -> UtVerdict:
    """Decide the ordered k-ut property.

    strategy is "exhaustive", "csp", or "auto" (pick by table size).  A
    negative verdict carries a (tuple, partition) pair that no group element
    maps into section position; the pair is re-checked against every element
    before it is returned.
    """
    n = group.degree
    _check_k(k, n)
    if k == 1:
        # a 1-partition has a single part holding every point
        return UtVerdict(True, None, "trivial", {})
    if strategy not in ("auto", "exhaustive", "csp"):
        raise ValueError(f"unknown strategy {strategy!r}")
    cells = k ** n
    if strategy == "exhaustive" and cells > EXHAUSTIVE_CELL_LIMIT:
        raise LimitExceeded(
            cells, EXHAUSTIVE_CELL_LIMIT,
            f"exhaustive sweep would need {cells} coloring cells for k={k}, "
            f"n={n}; use the csp strategy instead")
    meter = _WorkMeter(limit)
    orbits = group.orbits_on_tuples(k)
    reps = [orbit[0] for orbit in orbits]
    if strategy == "auto":
        marks = sum(len(o) for o in orbits) * k ** (n - k)
        feasible = cells <= _AUTO_CELL_CUTOFF and marks <= _AUTO_MARK_CUTOFF
        strategy = "exhaustive" if feasible else "csp"
    prefix = _sound_prefix_depth(group, k)
    work = {"cells": cells, "orbit_reps": len(reps), "steps": 0}
    for rep in reps:
        orbit = group.orbit_of_tuple(rep)
        if strategy == "exhaustive":
            coloring = _exhaustive_avoided(orbit, k, n, meter)
        else:
            coloring = find_avoiding_partition(orbit, k, n, meter=meter,
                                               symmetry_prefix=prefix)
        if coloring is not None:
            witness = (KTuple(rep), OrderedPartition(coloring, k))
            _recheck_witness(group, witness)
            work["steps"] = meter.total
            return UtVerdict(False, witness, strategy, work)
    work["steps"] = meter.total
    return UtVerdict(True, None, strategy, work)


def has_kut(group: PermGroup, k: int,
            limit: int = DEFAULT_WORK_LIMIT) -> UtVerdict:
    """Decide the unordered k-ut property: every image orbit of every k-set
    must contain a transversal of every k-partition."""
    n = group.degree
    _check_k(k, n)
    if k == 1:
        return UtVerdict(True, None, "trivial", {})
    meter = _WorkMeter(limit)
    set_orbits = group.orbits_on_sets(k)
    orbit_id = {}
    for i, orbit in enumerate(set_orbits):
        for s in orbit:
            orbit_id[s] = i
    wanted = set(range(len(set_orbits)))
    work = {"set_orbits": len(set_orbits), "partitions": 0, "steps": 0}
    for coloring in _partition_colorings(n, k):
        work["partitions"] += 1
        parts = [[] for _ in range(k)]
        for x, c in enumerate(coloring):
            parts[c].append(x)
        hit = set()
        scanned = 0
        for section in product(*parts):
            scanned += 1
            hit.add(orbit_id[frozenset(section)])
            if hit == wanted:
                break
        meter.add(scanned)
        if hit != wanted:
            missing = min(wanted - hit)
            rep = min(set_orbits[missing], key=sorted)
            witness = (KTuple(sorted(rep)), OrderedPartition(coloring, k))
            _recheck_set_witness(group, rep, coloring, k)
            work["steps"] = meter.total
            return UtVerdict(False, witness, "exhaustive", work)
    work["steps"] = meter.total
    return UtVerdict(True, None, "exhaustive", work)


def find_avoiding_partition(orbit, k: int, n: int, meter=None,
                            symmetry_prefix: int = 0):
    """Search for a surjective k-coloring no orbit tuple is a section of.

    Returns the coloring as a length-n tuple of part indices, or None when
    every surjective coloring contains some orbit tuple in section position
    (the search is complete).  Points are colored in descending order of
    participation across the orbit; part indices are tried in ascending
    order.  symmetry_prefix pins the first that-many points in variable
    order to parts 0,1,..., which is sound only when the orbit is closed
    under a group that is that-fold transitive; callers own that guarantee.
    """
    tuples = [tuple(t) for t in orbit]
    if not tuples:
        raise ValueError("empty orbit")
    if meter is None:
        meter = _WorkMeter(DEFAULT_WORK_LIMIT)

    participation = [0] * n
    for t in tuples:
        for x in t:
            participation[x] += 1
    order = sorted(range(n), key=lambda x: (-participation[x], x))

    # occ[x] lists (tuple index, position) pairs
    occ = [[] for _ in range(n)]
    for ti, t in enumerate(tuples):
        for pos, x in enumerate(t):
            occ[x].append((ti, pos))

    m = len(tuples)
    pinned = [0] * m
    violated = [0] * m
    color = [-1] * n
    used = [0] * k          # points currently wearing each color
    banned = [[0] * k for _ in range(n)]
    ban_trail = []

    def assign(x, c):
        """Returns False on immediate conflict; always leaves counters
        consistent so undo(x, c) reverses the step."""
        ok = True
        for ti, pos in occ[x]:
            if pos == c:
                pinned[ti] += 1
            else:
                violated[ti] += 1
        for ti, pos in occ[x]:
            if violated[ti] == 0 and pinned[ti] == k:
                ok = False
                break
        return ok

    def undo(x, c):
        for ti, pos in occ[x]:
            if pos == c:
                pinned[ti] -= 1
            else:
                violated[ti] -= 1

    def propagate(x):
        """Ban forced colors on still-open tuples; false on wipeout."""
        for ti, pos in occ[x]:
            if violated[ti] != 0 or pinned[ti] != k - 1:
                continue
            t = tuples[ti]
            for p2, y in enumerate(t):
                if color[y] == -1:
                    if banned[y][p2] == 0 and sum(
                            1 for d in range(k) if banned[y][d] == 0) == 1:
                        return False    # last legal color just died
                    banned[y][p2] += 1
                    ban_trail.append((y, p2))
                    break
        return True

    def unwind(trail_mark):
        while len(ban_trail) > trail_mark:
            y, p2 = ban_trail.pop()
            banned[y][p2] -= 1

    missing_colors = k

    def dead_color(depth):
        """A color nobody wears yet and no open point may legally take."""
        for c in range(k):
            if used[c]:
                continue
            if not any(banned[order[i]][c] == 0 for i in range(depth, n)):
                return True
        return False

    def dive(depth):
        nonlocal missing_colors
        if depth == n:
            return missing_colors == 0
        x = order[depth]
        remaining = n - depth
        if missing_colors > remaining:
            return False
        if missing_colors and dead_color(depth):
            return False
        if depth < symmetry_prefix:
            candidates = (depth,)
        else:
            candidates = range(k)
        for c in candidates:
            if banned[x][c]:
                continue
            meter.add(1)
            fresh = used[c] == 0
            color[x] = c
            used[c] += 1
            if fresh:
                missing_colors -= 1
            if assign(x, c):
                mark = len(ban_trail)
                if propagate(x) and dive(depth + 1):
                    return True
                unwind(mark)
            undo(x, c)
            color[x] = -1
            used[c] -= 1
            if fresh:
                missing_colors += 1
        return False

    if dive(0):
        return tuple(color)
    return None


# ----- internals --------------------------------------------------------


def _check_k(k, n):
    if not 1 <= k <= n:
        raise ValueError(f"k must lie in 1..{n}, got {k}")


def _sound_prefix_depth(group, k):
    if k < 2 or not group.is_transitive():
        return 0
    return 2 if k >= 2 and group.transitivity_degree(max_k=2) >= 2 else 1


def _exhaustive_avoided(orbit, k, n, meter):
    """Mark every coloring met by some orbit tuple; return an unmarked
    surjective one, or None."""
    weight = [k ** x for x in range(n)]
    size = k ** n
    covered = bytearray(size)
    for t in orbit:
        base = 0
        members = set(t)
        for pos, x in enumerate(t):
            base += pos * weight[x]
        offsets = [0]
        for x in range(n):
            if x in members:
                continue
            w = weight[x]
            offsets = [s + d * w for s in offsets for d in range(k)]
        for s in offsets:
            covered[base + s] = 1
        meter.add(len(offsets))
    meter.add(size)
    for code in range(size):
        if covered[code]:
            continue
        coloring = _decode(code, k, n)
        if coloring is not None:
            return coloring
    return None


def _decode(code, k, n):
    """Base-k digits of code, or None when not surjective."""
    digits = []
    seen = 0
    for _ in range(n):
        code, d = divmod(code, k)
        digits.append(d)
        seen |= 1 << d
    if seen != (1 << k) - 1:
        return None
    return tuple(digits)


def _partition_colorings(n, k):
    """All surjective colorings in restricted-growth form: the first point
    wears color 0 and each new color extends the current maximum by one.
    Exactly one representative per unordered k-partition."""
    coloring = [0] * n

    def grow(i, top):
        if n - i < k - 1 - top:
            return      # not enough points left to reach k colors
        if i == n:
            if top == k - 1:
                yield tuple(coloring)
            return
        for c in range(min(top + 1, k - 1) + 1):
            coloring[i] = c
            yield from grow(i + 1, max(top, c))

    yield from grow(1, 0)


def _recheck_witness(group, witness):
    t, p = witness
    for g in group.perms():
        if all(p.color_of[g(a)] == i for i, a in enumerate(t.entries)):
            raise RuntimeError(
                "internal error: claimed witness is reachable via "
                f"{g.cycle_string()}")


def _recheck_set_witness(group, rep, coloring, k):
    for s in group.orbit_of_set(rep):
        colors = {coloring[x] for x in s}
        if len(colors) == k:
            raise RuntimeError(
                "internal error: claimed set witness has a transversal image")
