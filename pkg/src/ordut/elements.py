"""Transformations and permutations of a finite set.

Points are 0-based internally: a map on {0, ..., n-1} is stored as the packed
byte string of its images, so composition is a single ``bytes.translate`` call.
Products act on the right throughout the package: ``x . (a*b) = (x . a) . b``,
meaning ``a*b`` applies ``a`` first.  All text formats (cycles, image lists,
kernel classes) are 1-based; conversion happens only at the parse/print edge.
"""

from math import lcm

MAX_DEGREE = 255  # byte-packed images; plenty for every construction here

_FULL = bytes(range(256))


def _pad(images: bytes) -> bytes:
    # translate() wants a 256-byte table; the tail is never consulted
    return images + _FULL[len(images):]


class Transformation:
    """A map from {0,...,n-1} to itself, given by its tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        b = bytes(images)
        if not b or len(b) > MAX_DEGREE:
            raise ValueError(f"degree must be between 1 and {MAX_DEGREE}")
        if max(b) >= len(b):
            raise ValueError("image out of range")
        self.images = b

    @classmethod
    def identity(cls, degree: int):
        return cls(range(degree))

    @classmethod
    def from_one_based(cls, images):
        return cls(x - 1 for x in images)

    @classmethod
    def constant(cls, degree: int, value: int):
        return cls([value] * degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other):
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch")
        prod = self.images.translate(_pad(other.images))
        if isinstance(self, Permutation) and isinstance(other, Permutation):
            return Permutation._trusted(prod)
        return Transformation(prod)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a transformation")
        acc = Transformation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        if isinstance(self, Permutation):
            return Permutation._trusted(acc.images)
        return acc

    def __eq__(self, other):
        return isinstance(other, Transformation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def is_permutation(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def is_idempotent(self) -> bool:
        img = self.images
        return all(img[v] == v for v in set(img))

    def rank(self) -> int:
        return len(set(self.images))

    def image(self) -> tuple:
        return tuple(sorted(set(self.images)))

    def kernel_classes(self) -> tuple:
        """Partition of the domain by equal image, classes sorted by image value."""
        by_value = {}
        for x, v in enumerate(self.images):
            by_value.setdefault(v, []).append(x)
        return tuple(tuple(by_value[v]) for v in sorted(by_value))

    def one_based(self) -> tuple:
        return tuple(x + 1 for x in self.images)

    def __str__(self):
        return "[" + ",".join(str(x + 1) for x in self.images) + "]"

    def __repr__(self):
        return f"{type(self).__name__}({str(self)})"


class Permutation(Transformation):
    """A bijective transformation; supports inversion and cycle notation."""

    __slots__ = ()

    def __init__(self, images):
        super().__init__(images)
        if len(set(self.images)) != len(self.images):
            raise ValueError("not a bijection")

    @classmethod
    def _trusted(cls, images: bytes):
        # internal: skip the bijectivity scan for products of known bijections
        p = Transformation.__new__(cls)
        p.images = images
        return p

    @classmethod
    def from_cycles(cls, degree: int, cycles):
        """Build from 0-based cycles, e.g. from_cycles(5, [(0, 1), (2, 3, 4)])."""
        img = list(range(degree))
        seen = set()
        for cyc in cycles:
            for x in cyc:
                if x in seen:
                    raise ValueError(f"point {x} repeated across cycles")
                seen.add(x)
            for i, x in enumerate(cyc):
                img[x] = cyc[(i + 1) % len(cyc)]
        return cls(img)

    def inverse(self):
        inv = bytearray(len(self.images))
        for x, v in enumerate(self.images):
            inv[v] = x
        return Permutation._trusted(bytes(inv))

    def order(self) -> int:
        cycs = self.cycles()
        return lcm(*(len(c) for c in cycs)) if cycs else 1

    def cycles(self) -> list:
        """Nontrivial cycles as 0-based tuples, each starting at its least point."""
        out = []
        seen = set()
        for x in range(len(self.images)):
            if x in seen or self.images[x] == x:
                seen.add(x)
                continue
            cyc = [x]
            seen.add(x)
            y = self.images[x]
            while y != x:
                cyc.append(y)
                seen.add(y)
                y = self.images[y]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """1-based cycle notation; the identity prints as ``()``."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(x + 1) for x in c) + ")" for c in cycs)

    def __str__(self):
        return self.cycle_string()


def compose(a: Transformation, b: Transformation) -> Transformation:
    """Product ``a*b`` under the right action: apply ``a`` first, then ``b``."""
    return a * b
