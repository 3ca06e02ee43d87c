"""Named group constructions.

Catalog names carry their degree after an @ sign, e.g. ``A5@5``,
``PSL(2,7)@8``, ``AGL(1,8)@8``; the suffix is validated against the
construction so a shell typo cannot silently hand back the wrong action.
Every constructor closes its generators and checks the resulting order
against the textbook formula before returning.
"""

import re

from .elements import Permutation
from .errors import InputFormatError
from .fields import make_field
from .groups import PermGroup, enumerate_group, trivial_group

# Degree-12 generators for the Mathieu group M11, produced by the coset
# action of the degree-11 copy on an index-12 subgroup and checked here by
# order, transitivity degree and stabilizer orbit shape (see tests).
_M11_DEG11 = [
    [(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10)],
    [(2, 6, 10, 7), (3, 9, 4, 5)],
]
_M11_DEG12 = [
    [(1, 2, 3, 5, 8, 11, 4, 6, 10, 7, 9)],
    [(0, 1), (2, 4, 7, 3), (5, 9), (6, 8, 10, 11)],
]


def symmetric_group(n: int) -> PermGroup:
    if n == 1:
        return trivial_group(1)
    gens = [Permutation.from_cycles(n, [(0, 1)])]
    if n > 2:
        gens.append(Permutation.from_cycles(n, [tuple(range(n))]))
    return _checked(gens, n, _factorial(n), f"S{n}")


def alternating_group(n: int) -> PermGroup:
    if n <= 2:
        return trivial_group(n)
    gens = [Permutation.from_cycles(n, [(0, 1, 2)])]
    if n > 3:
        cycle = tuple(range(n)) if n % 2 else tuple(range(1, n))
        gens.append(Permutation.from_cycles(n, [cycle]))
    return _checked(gens, n, _factorial(n) // 2, f"A{n}")


def cyclic_group(n: int) -> PermGroup:
    if n == 1:
        return trivial_group(1)
    return _checked([Permutation.from_cycles(n, [tuple(range(n))])], n, n, f"C{n}")


def dihedral_group(n: int) -> PermGroup:
    if n < 3:
        raise ValueError("dihedral action needs degree >= 3")
    rot = Permutation.from_cycles(n, [tuple(range(n))])
    refl = Permutation([(n - x) % n for x in range(n)])
    return _checked([rot, refl], n, 2 * n, f"D{n}")


def mathieu11(degree: int = 11) -> PermGroup:
    if degree not in (11, 12):
        raise ValueError("M11 acts here on 11 or 12 points")
    cycles = _M11_DEG11 if degree == 11 else _M11_DEG12
    gens = [Permutation.from_cycles(degree, c) for c in cycles]
    return _checked(gens, degree, 7920, f"M11@{degree}")


# ----- affine and projective families over GF(q) -----------------------


def affine_group(q: int, gamma: bool = False) -> PermGroup:
    """AGL(1,q) = {x -> a x + b, a != 0} on the q field codes; with
    gamma=True the field automorphisms are thrown in (AGammaL)."""
    field = make_field(q)
    gens = [_affine_perm(field, 1, 1)]
    if q > 2:
        gens.append(_affine_perm(field, field.primitive, 0))
    if gamma and field.e > 1:
        gens.append(_frobenius_perm(field))
    expected = q * (q - 1) * (field.e if gamma else 1)
    name = ("AGammaL" if gamma else "AGL") + f"(1,{q})"
    return _checked(gens, q, expected, name)


def affine_half_group(q: int) -> PermGroup:
    """The index-2 subgroup of AGL(1,q): all translations, square multipliers."""
    field = make_field(q)
    if q % 2 == 0 or q < 3:
        raise ValueError("the half-affine group needs odd q >= 3")
    lam2 = field.mul(field.primitive, field.primitive)
    gens = [_affine_perm(field, 1, 1), _affine_perm(field, lam2, 0)]
    return _checked(gens, q, q * (q - 1) // 2, f"AGL(1,{q})-half")


def projective_group(q: int, kind: str = "PGL") -> PermGroup:
    """Moebius actions on the projective line: q field codes plus infinity=q.

    kind is one of PSL, PGL, PSigmaL, PGammaL.  PSL uses square-determinant
    maps (for even q it coincides with PGL); the Sigma/Gamma variants adjoin
    the field automorphisms.
    """
    field = make_field(q)
    kind = kind.strip()
    if kind not in ("PSL", "PGL", "PSigmaL", "PGammaL"):
        raise ValueError(f"unknown projective kind {kind!r}")
    lam = field.primitive
    translation = _moebius_perm(field, 1, 1, 0, 1)
    inversion = _moebius_perm(field, 0, 1, 1, 0)
    gens = [translation]
    base_order = q * (q * q - 1)
    if kind in ("PGL", "PGammaL") or q % 2 == 0:
        if q > 2:
            gens.append(_moebius_perm(field, lam, 0, 0, 1))
        gens.append(inversion)
        small = base_order
    else:
        lam2 = field.mul(lam, lam)
        gens.append(_moebius_perm(field, lam2, 0, 0, 1))
        gens.append(_moebius_perm(field, 0, field.neg(1), 1, 0))
        small = base_order // 2
    if kind in ("PSigmaL", "PGammaL") and field.e > 1:
        gens.append(_projective_frobenius_perm(field))
    expected = small * (field.e if kind in ("PSigmaL", "PGammaL") else 1)
    return _checked(gens, q + 1, expected, f"{kind}(2,{q})")


def _affine_perm(field, a, b):
    return Permutation([field.add(field.mul(a, x), b) for x in range(field.q)])


def _frobenius_perm(field):
    return Permutation([field.frobenius(x) for x in range(field.q)])


def _moebius_perm(field, a, b, c, d):
    """x -> (a x + b) / (c x + d) on the projective line, infinity = q."""
    det = field.add(field.mul(a, d), field.neg(field.mul(b, c)))
    if det == 0:
        raise ValueError("singular moebius map")
    inf = field.q
    images = []
    for x in range(field.q):
        num = field.add(field.mul(a, x), b)
        den = field.add(field.mul(c, x), d)
        images.append(inf if den == 0 else field.mul(num, field.inv(den)))
    images.append(inf if c == 0 else field.mul(a, field.inv(c)))
    return Permutation(images)


def _projective_frobenius_perm(field):
    images = [field.frobenius(x) for x in range(field.q)]
    images.append(field.q)
    return Permutation(images)


def _checked(gens, degree, expected_order, name) -> PermGroup:
    group = enumerate_group(gens, degree=degree)
    if group.order != expected_order:
        raise RuntimeError(
            f"construction self-check failed for {name}: order {group.order}, "
            f"expected {expected_order}")
    return group


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# ----- the name catalog -------------------------------------------------

_NAME_RE = re.compile(
    r"(?P<family>[A-Za-z]+)"
    r"(?:\((?P<args>[\d,\s]+)\))?"
    r"(?P<plain>\d+)?"
    r"(?P<half>-half)?"
    r"@(?P<degree>\d+)$")


def catalog(name: str) -> PermGroup:
    """Look up a named action like ``S5@5``, ``PSL(2,7)@8``, ``AGL(1,8)@8``."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise InputFormatError(f"cannot parse group name {name!r}")
    family = m.group("family")
    degree = int(m.group("degree"))
    half = bool(m.group("half"))
    args = m.group("args")
    plain = m.group("plain")

    def need_degree(expected):
        if degree != expected:
            raise InputFormatError(
                f"{name!r}: this action lives on {expected} points, not {degree}")

    if family in ("S", "A", "C", "D") and plain and not args and not half:
        n = int(plain)
        need_degree(n)
        return {"S": symmetric_group, "A": alternating_group,
                "C": cyclic_group, "D": dihedral_group}[family](n)
    if family == "M" and plain == "11" and not half:
        return mathieu11(degree)
    if family == "M11" or (family == "M" and plain):
        raise InputFormatError(f"unknown Mathieu action {name!r}")
    if args:
        parts = [int(t) for t in re.split(r"[,\s]+", args.strip()) if t]
        if family in ("PSL", "PGL", "PSigmaL", "PGammaL") and not half:
            if len(parts) != 2 or parts[0] != 2:
                raise InputFormatError(f"{name!r}: only the 2-dimensional "
                                       "projective actions are available")
            q = parts[1]
            need_degree(q + 1)
            return projective_group(q, family)
        if family in ("AGL", "AGammaL"):
            if len(parts) != 2 or parts[0] != 1:
                raise InputFormatError(f"{name!r}: only the 1-dimensional "
                                       "affine actions are available")
            q = parts[1]
            need_degree(q)
            if half:
                if family != "AGL":
                    raise InputFormatError(f"{name!r}: -half applies to AGL only")
                return affine_half_group(q)
            return affine_group(q, gamma=family == "AGammaL")
    raise InputFormatError(f"unknown group name {name!r}")


def catalog_help() -> str:
    return "\n".join([
        "S<n>@<n>, A<n>@<n>, C<n>@<n>, D<n>@<n>   symmetric/alternating/cyclic/dihedral",
        "M11@11, M11@12                           Mathieu group actions",
        "PSL(2,q)@q+1, PGL(2,q)@q+1               projective line actions, q <= 64",
        "PSigmaL(2,q)@q+1, PGammaL(2,q)@q+1       with field automorphisms",
        "AGL(1,q)@q, AGammaL(1,q)@q               affine line actions, q <= 64",
        "AGL(1,q)-half@q                          index-2 subgroup, square multipliers (odd q)",
    ])
