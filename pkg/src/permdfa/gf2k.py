"""Arithmetic in GF(2^k) and one-dimensional affine maps.

An element sum c_i x^i is stored as the integer sum c_i 2^i, which is also the
index of the corresponding DFA state.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .groups import DEFAULT_ELEMENT_CAP, PermGroup
from .perm import Permutation

# primitive polynomials, so x itself generates the multiplicative group
DEFAULT_MODULI = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10000011,
    8: 0b100011101,
    9: 0b1000010001,
    10: 0b10000001001,
    11: 0b100000000101,
    12: 0b1000001010011,
    13: 0b10000000011011,
    14: 0b100010001000011,
    15: 0b1000000000000011,
    16: 0b10001000000001011,
}


class ReducibleModulusError(ValueError):
    pass


def poly_mod(a: int, m: int) -> int:
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bit-vector polynomials."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def is_irreducible(m: int) -> bool:
    """Trial division by every polynomial of degree 1..deg(m)/2."""
    k = m.bit_length() - 1
    if k < 1:
        return False
    for d in range(2, 1 << (k // 2 + 1)):
        if poly_mod(m, d) == 0:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


class Gf2kField:
    def __init__(self, k: int, modulus: int | None = None):
        if not 1 <= k <= 16:
            raise ValueError("k must be between 1 and 16")
        if modulus is None:
            modulus = DEFAULT_MODULI[k]
        if modulus.bit_length() - 1 != k:
            raise ValueError(f"modulus must have degree {k}")
        if not is_irreducible(modulus):
            raise ReducibleModulusError(f"{modulus:#b} is reducible over GF(2)")
        self.k = k
        self.modulus = modulus
        self.size = 1 << k

    def __repr__(self):
        return f"Gf2kField(k={self.k}, modulus={self.modulus:#b})"

    def __eq__(self, other):
        return isinstance(other, Gf2kField) and (self.k, self.modulus) == (other.k, other.modulus)

    def __hash__(self):
        return hash((self.k, self.modulus))

    def _check(self, a: int):
        if not 0 <= a < self.size:
            raise ValueError(f"{a} is not an element of GF(2^{self.k})")

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        self._check(a)
        self._check(b)
        return poly_mod(clmul(a, b), self.modulus)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        r, base = 1, a
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, self.size - 2)

    @property
    def x(self) -> int:
        """The class of the polynomial x."""
        return poly_mod(0b10, self.modulus)

    def multiplicative_order(self, a: int) -> int:
        n = self.size - 1
        order = n
        for p in _prime_factors(n):
            while order % p == 0 and self.pow(a, order // p) == 1:
                order //= p
        return order

    @cached_property
    def generator(self) -> int:
        """A generator of the multiplicative group (x when the modulus is primitive)."""
        for g in [self.x] + list(range(1, self.size)):
            if g and self.multiplicative_order(g) == self.size - 1:
                return g
        raise AssertionError("no multiplicative generator found")

    def format(self, a: int) -> str:
        terms = []
        for i in reversed(range(self.k)):
            if a >> i & 1:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return "+".join(terms) or "0"


def field_new(k: int, modulus: int | None = None) -> Gf2kField:
    return Gf2kField(k, modulus)


@dataclass(frozen=True)
class AffineMap:
    """xi -> alpha * xi + beta."""

    field: Gf2kField
    alpha: int
    beta: int

    def __post_init__(self):
        if self.alpha == 0:
            raise ValueError("alpha must be non-zero")
        self.field._check(self.alpha)
        self.field._check(self.beta)

    def __call__(self, xi: int) -> int:
        return self.field.mul(self.alpha, xi) ^ self.beta

    def then(self, other: "AffineMap") -> "AffineMap":
        """Apply self first, then other."""
        f = self.field
        return AffineMap(f, f.mul(self.alpha, other.alpha), f.mul(self.beta, other.alpha) ^ other.beta)

    def permutation(self) -> Permutation:
        return Permutation(self(xi) for xi in range(self.field.size))


def affine_permutation(field: Gf2kField, alpha: int, beta: int) -> Permutation:
    return AffineMap(field, alpha, beta).permutation()


def agl_group(field: Gf2kField, cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    gens = [affine_permutation(field, field.generator, 0), affine_permutation(field, 1, 1)]
    return PermGroup(gens, field.size, cap=cap)


def translation_subgroup(field: Gf2kField) -> PermGroup:
    gens = [affine_permutation(field, 1, 1 << i) for i in range(field.k)]
    return PermGroup(gens, field.size)


def span(vectors: Iterable[int]) -> frozenset[int]:
    """GF(2)-linear span of bit vectors."""
    out = {0}
    for v in vectors:
        out |= {u ^ v for u in out}
    return frozenset(out)


def translation_block(field: Gf2kField) -> frozenset[int]:
    """Elements whose x^(k-1) coefficient is zero."""
    return span(1 << i for i in range(field.k - 1))
