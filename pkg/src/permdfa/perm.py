"""Transformations and permutations of {0, ..., n-1}.

Composition is left to right: ``x * (p * q) == (x * p) * q``, so ``(p * q)(x)``
means "apply p, then q".  Points are 0-based internally and 1-based in every
textual representation (cycle notation, image lists).
"""

from __future__ import annotations

import re
from math import gcd
from typing import Iterable, Sequence


class CycleParseError(ValueError):
    """Base class for cycle-notation parse failures."""


class CycleSyntaxError(CycleParseError):
    pass


class PointOutOfRangeError(CycleParseError):
    pass


class RepeatedPointError(CycleParseError):
    pass


class NotAPermutationError(ValueError):
    pass


class Transformation:
    """A total map {0..n-1} -> {0..n-1} stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Iterable[int]):
        images = tuple(int(v) for v in images)
        n = len(images)
        for v in images:
            if not 0 <= v < n:
                raise ValueError(f"image {v} out of range for degree {n}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("transformations are immutable")

    @classmethod
    def identity(cls, degree: int) -> "Transformation":
        return cls(range(degree))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Transformation") -> "Transformation":
        if not isinstance(other, Transformation):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        images = tuple(other.images[v] for v in self.images)
        if isinstance(self, Permutation) and isinstance(other, Permutation):
            return Permutation._trusted(images)
        return Transformation(images)

    def __eq__(self, other) -> bool:
        return isinstance(other, Transformation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def is_permutation(self) -> bool:
        return len(set(self.images)) == len(self.images)

    def as_permutation(self) -> "Permutation":
        return Permutation(self.images)

    def is_identity(self) -> bool:
        return all(i == v for i, v in enumerate(self.images))

    def image_of_set(self, points: Iterable[int]) -> frozenset[int]:
        return frozenset(self.images[x] for x in points)

    def one_based(self) -> list[int]:
        return [v + 1 for v in self.images]

    def __repr__(self) -> str:
        return f"Transformation({list(self.images)})"


class Permutation(Transformation):
    """A bijective transformation."""

    __slots__ = ()

    def __init__(self, images: Iterable[int]):
        super().__init__(images)
        if not self.is_permutation():
            raise NotAPermutationError(f"{list(self.images)} is not a bijection")

    @classmethod
    def _trusted(cls, images: tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @classmethod
    def from_cycles(cls, text: str, degree: int) -> "Permutation":
        return parse_cycles(text, degree)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, v in enumerate(self.images):
            inv[v] = i
        return Permutation._trusted(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        base = self if k >= 0 else self.inverse()
        result = Permutation._trusted(tuple(range(self.degree)))
        k = abs(k)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Cycles in canonical order: each starts at its least point, sorted by it."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        o = 1
        for c in self.cycles():
            o = o * len(c) // gcd(o, len(c))
        return o

    def sign(self) -> int:
        return -1 if self.parity() else 1

    def parity(self) -> int:
        # n minus the number of cycles (fixed points included), mod 2
        return (self.degree - len(self.cycles(include_fixed=True))) % 2

    def is_even(self) -> bool:
        return self.parity() == 0

    def conjugate(self, h: "Permutation") -> "Permutation":
        """Return h^-1 * self * h."""
        return h.inverse() * self * h

    def __str__(self) -> str:
        return format_cycles(self)

    def __repr__(self) -> str:
        return f"Permutation.from_cycles({format_cycles(self)!r}, {self.degree})"


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation such as ``(1,2,3)(4,5)`` or ``()``.

    Whitespace is ignored.  Raises a ``CycleSyntaxError``, ``PointOutOfRangeError``
    or ``RepeatedPointError`` as appropriate.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    s = "".join(text.split())
    if not s:
        raise CycleSyntaxError("empty cycle text")
    pos = 0
    cycles: list[list[int]] = []
    for m in _CYCLE_RE.finditer(s):
        if m.start() != pos:
            raise CycleSyntaxError(f"unexpected text {s[pos:m.start()]!r}")
        pos = m.end()
        body = m.group(1)
        if body == "":
            continue
        pts = []
        for tok in body.split(","):
            if not tok.isdigit():
                raise CycleSyntaxError(f"bad point {tok!r} in {m.group(0)!r}")
            pts.append(int(tok))
        cycles.append(pts)
    if pos != len(s):
        raise CycleSyntaxError(f"unexpected text {s[pos:]!r}")

    images = list(range(degree))
    used: set[int] = set()
    for cyc in cycles:
        for p in cyc:
            if not 1 <= p <= degree:
                raise PointOutOfRangeError(f"point {p} not in 1..{degree}")
            if p in used:
                raise RepeatedPointError(f"point {p} appears twice")
            used.add(p)
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            images[a - 1] = b - 1
    return Permutation._trusted(tuple(images))


def format_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in c) + ")" for c in cyc)


def cycle(points: Sequence[int], degree: int) -> Permutation:
    """The cycle through the given 0-based points."""
    images = list(range(degree))
    for a, b in zip(points, list(points[1:]) + list(points[:1])):
        images[a] = b
    return Permutation(images)


def identity(degree: int) -> Permutation:
    return Permutation._trusted(tuple(range(degree)))
