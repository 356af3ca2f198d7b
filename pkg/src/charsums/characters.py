"""Multiplicative characters of F_{q^n}^* via a discrete-log table.

A fixed generator theta identifies the character group with Z/(N-1): the
character of index k sends theta^j to exp(2*pi*i*k*j/(N-1)), and every
character extends by chi(0) = 0.  Values are unit-circle doubles; all the
exactness lives in the integer dlog arithmetic.
"""

import cmath
from math import gcd, pi

from .fields import Element, FieldDescriptor, find_generator
from .util import CapExceeded

DEFAULT_TABLE_CAP = 10_000_000


class CharacterTable:
    """Dense dlog table for one field plus the (N-1)-st roots of unity."""

    def __init__(self, fd, theta, dlog, roots):
        self.fd = fd
        self.theta = theta
        self.dlog = dlog  # indexed by Element.encode(); -1 at the zero element
        self.roots = roots

    def character(self, index: int) -> "Character":
        return Character(self, index % (self.fd.N - 1))

    def trivial_character(self) -> "Character":
        return Character(self, 0)

    def all_characters(self):
        return [Character(self, k) for k in range(self.fd.N - 1)]

    def nontrivial_characters(self):
        return [Character(self, k) for k in range(1, self.fd.N - 1)]

    def log(self, a: Element) -> int:
        v = self.dlog[a.encode()]
        if v < 0:
            raise ValueError("discrete log of zero")
        return v

    def __repr__(self):
        return f"CharacterTable({self.fd.field_str}, theta={self.theta.text()})"


class Character:
    """chi_k for the table's generator; callable on Elements."""

    __slots__ = ("table", "index")

    def __init__(self, table, index):
        self.table = table
        self.index = index

    @property
    def order(self) -> int:
        m = self.table.fd.N - 1
        return m // gcd(m, self.index)

    def is_trivial(self) -> bool:
        return self.index == 0

    def __call__(self, a: Element) -> complex:
        t = self.table
        j = t.dlog[a.encode()]
        if j < 0:
            return 0j
        return t.roots[self.index * j % (t.fd.N - 1)]

    def __eq__(self, other):
        return (
            isinstance(other, Character)
            and other.table is self.table
            and other.index == self.index
        )

    def __hash__(self):
        return hash(self.index)

    def __repr__(self):
        return f"Character(index={self.index}, order={self.order})"


def build_table(fd: FieldDescriptor, seed: int = 0, cap: int = DEFAULT_TABLE_CAP) -> CharacterTable:
    """Enumerate powers of a seeded generator into a dense dlog array.

    Rejects fields with N - 1 above the cap; callers that only need orders
    (not character values) should stay on the order-test functions instead.
    """
    if fd.n < 2:
        raise ValueError("character machinery requires a proper extension (n >= 2)")
    m = fd.N - 1
    if m > cap:
        raise CapExceeded(f"N - 1 = {m} exceeds the dlog table cap {cap}")
    theta = find_generator(fd, seed)
    dlog = [-1] * fd.N
    acc = fd.one
    for j in range(m):
        e = acc.encode()
        if dlog[e] != -1:
            raise AssertionError("generator power cycle closed early")
        dlog[e] = j
        acc = acc * theta
    if acc != fd.one:
        raise AssertionError("generator powers did not cycle back to one")
    tau = 2 * pi / m
    roots = tuple(cmath.exp(1j * (tau * j)) for j in range(m))
    return CharacterTable(fd, theta, dlog, roots)


def characters_of_order(table: CharacterTable, d: int):
    """The euler_phi(d) characters of exact order d, ascending index.

    Indices are (N-1)e/d for e coprime to d; for d = 1 this is just the
    trivial character.
    """
    m = table.fd.N - 1
    if d < 1 or m % d:
        raise ValueError(f"{d} does not divide N - 1 = {m}")
    if d == 1:
        return [table.trivial_character()]
    step = m // d
    return [Character(table, step * e) for e in range(1, d) if gcd(e, d) == 1]


def trivial_on_subfield(chi: Character, d: int) -> bool:
    """Whether chi restricts trivially to F_{q^d}^*: iff (q^d - 1) | index."""
    fd = chi.table.fd
    if d < 1 or fd.n % d:
        raise ValueError(f"{d} does not divide n = {fd.n}")
    return chi.index % (fd.q**d - 1) == 0
