"""Small finite fields with fully materialized arithmetic tables.

Elements of GF(p^e) are integer codes 0..q-1: the element sum(c_i x^i) has
code sum(c_i p^i), so 0 and 1 are the field's zero and one.  Non-prime
fields reduce modulo the fixed polynomial listed in data/irreducible_polys.txt;
the table construction itself proves irreducibility, since a reducible
modulus would leave some nonzero code without an inverse.
"""

from functools import lru_cache
from importlib import resources

MAX_FIELD_ORDER = 64


class FiniteField:
    def __init__(self, p: int, e: int, poly: tuple | None):
        self.p = p
        self.e = e
        self.q = p ** e
        self.poly = poly  # coefficients low-to-high, monic; None for prime fields
        self._mul = _build_mul_table(p, e, poly)
        self._inv = self._invert_all()
        self.primitive = self._find_primitive()

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        total = 0
        power = 1
        for _ in range(self.e):
            total += ((a % self.p + b % self.p) % self.p) * power
            a //= self.p
            b //= self.p
            power *= self.p
        return total

    def neg(self, a: int) -> int:
        total = 0
        power = 1
        for _ in range(self.e):
            total += ((self.p - a % self.p) % self.p) * power
            a //= self.p
            power *= self.p
        return total

    def mul(self, a: int, b: int) -> int:
        return self._mul[a][b]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        acc = 1
        while k:
            if k & 1:
                acc = self.mul(acc, a)
            a = self.mul(a, a)
            k >>= 1
        return acc

    def frobenius(self, a: int) -> int:
        return self.power(a, self.p)

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise ValueError("0 is not in the multiplicative group")
        k, acc = 1, a
        while acc != 1:
            acc = self.mul(acc, a)
            k += 1
        return k

    def _invert_all(self):
        inv = [None] * self.q
        for a in range(1, self.q):
            for b in range(1, self.q):
                if self._mul[a][b] == 1:
                    inv[a] = b
                    break
            if inv[a] is None:
                raise ValueError(
                    f"modulus for q={self.q} is not irreducible: "
                    f"code {a} has no inverse")
        return inv

    def _find_primitive(self) -> int:
        for a in range(2, self.q):
            if self.multiplicative_order(a) == self.q - 1:
                return a
        return 1  # q = 2

    def __repr__(self):
        return f"FiniteField(q={self.q})"


def _build_mul_table(p, e, poly):
    q = p ** e
    if e == 1:
        return [[(a * b) % p for b in range(q)] for a in range(q)]

    def digits(code):
        out = []
        for _ in range(e):
            out.append(code % p)
            code //= p
        return out

    def code(ds):
        total = 0
        for c in reversed(ds):
            total = total * p + c
        return total

    top = poly[:e]  # x^e = -(c0 + c1 x + ... + c_{e-1} x^{e-1}) mod p
    reduction = [(-c) % p for c in top]
    table = []
    for a in range(q):
        da = digits(a)
        row = []
        for b in range(q):
            db = digits(b)
            prod = [0] * (2 * e - 1)
            for i, ca in enumerate(da):
                if ca:
                    for j, cb in enumerate(db):
                        prod[i + j] = (prod[i + j] + ca * cb) % p
            for i in range(2 * e - 2, e - 1, -1):
                c = prod[i]
                if c:
                    prod[i] = 0
                    for j, r in enumerate(reduction):
                        prod[i - e + j] = (prod[i - e + j] + c * r) % p
            row.append(code(prod[:e]))
        table.append(row)
    return table


@lru_cache(maxsize=None)
def _poly_table():
    text = (resources.files("ordut") / "data" / "irreducible_polys.txt").read_text()
    table = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        q_txt, coeffs = line.split(":")
        table[int(q_txt)] = tuple(int(t) for t in coeffs.split())
    return table


def _prime_power(q: int):
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e = 0
    m = q
    while m % p == 0:
        m //= p
        e += 1
    if m != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


@lru_cache(maxsize=None)
def make_field(q: int) -> FiniteField:
    """The field of order q, for prime powers q <= 64."""
    if q > MAX_FIELD_ORDER:
        raise ValueError(f"field order {q} exceeds the supported bound "
                         f"{MAX_FIELD_ORDER}")
    p, e = _prime_power(q)
    if e == 1:
        field = FiniteField(p, 1, None)
    else:
        poly = _poly_table().get(q)
        if poly is None:
            raise ValueError(f"no reduction polynomial on file for q={q}")
        field = FiniteField(p, e, poly)
    # cheap structural self-checks; the axiom sweeps live in the test suite
    if field.power(field.primitive, q - 1) != 1:
        raise RuntimeError(f"broken arithmetic for q={q}")
    a = field.primitive
    for _ in range(e):
        a = field.frobenius(a)
    if a != field.primitive:
        raise RuntimeError(f"frobenius does not have order {e} for q={q}")
    return field
