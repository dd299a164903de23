"""Permutation groups given by generators, enumerated by breadth-first closure.

Elements are stored as compact keys (``bytes`` for degree <= 256, tuples
otherwise).  Everything here works on explicit element sets; there are no
stabilizer chains, so the element cap bounds every computation.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from math import factorial
from typing import Iterable, Iterator, Sequence

from .perm import Permutation, identity

DEFAULT_ELEMENT_CAP = 5_000_000

_TAIL = bytes(range(256))


class CapExceededError(RuntimeError):
    """Raised when an enumeration would exceed the element cap."""

    def __init__(self, cap: int, what: str = "group"):
        super().__init__(f"{what} has more than {cap} elements (raise the element cap)")
        self.cap = cap


class IntransitiveGroupError(ValueError):
    pass


class Codec:
    """Key encoding and right-multiplication for one degree."""

    def __init__(self, degree: int):
        self.degree = degree
        self.compact = degree <= 256

    def encode(self, images: Sequence[int]):
        return bytes(images) if self.compact else tuple(images)

    def table(self, key):
        # multiplier for "apply key afterwards"
        return key + _TAIL[len(key):] if self.compact else key

    def mul(self, a, table):
        if self.compact:
            return a.translate(table)
        return tuple(table[v] for v in a)

    def inverse(self, key):
        inv = [0] * len(key)
        for i, v in enumerate(key):
            inv[v] = i
        return self.encode(inv)

    def identity(self):
        return self.encode(range(self.degree))


def closure(codec: Codec, generators: Sequence, cap: int, what: str = "group") -> frozenset:
    """Breadth-first closure of the identity under right multiplication."""
    start = codec.identity()
    seen = {start}
    tables = [codec.table(g) for g in generators]
    queue = deque([start])
    mul = codec.mul
    while queue:
        e = queue.popleft()
        for t in tables:
            f = mul(e, t)
            if f not in seen:
                seen.add(f)
                if len(seen) > cap:
                    raise CapExceededError(cap, what)
                queue.append(f)
    return frozenset(seen)


class PermGroup:
    """A permutation group of a fixed degree.

    The element set is computed lazily on first use and cached.
    """

    def __init__(self, generators: Iterable[Permutation], degree: int | None = None,
                 *, cap: int = DEFAULT_ELEMENT_CAP):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if not isinstance(g, Permutation):
                g = Permutation(g.images)
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
        self.degree = degree
        self.cap = cap
        self.codec = Codec(degree)
        self._gens: tuple[Permutation, ...] | None = tuple(
            g if isinstance(g, Permutation) else Permutation(g.images) for g in gens)
        self._keys: frozenset | None = None

    @classmethod
    def from_keys(cls, degree: int, keys: Iterable, *, cap: int = DEFAULT_ELEMENT_CAP) -> "PermGroup":
        """Wrap an element set that is already known to be a group."""
        g = cls((), degree, cap=cap)
        g._gens = None
        g._keys = frozenset(keys)
        return g

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls((), degree)

    @property
    def generators(self) -> tuple[Permutation, ...]:
        if self._gens is None:
            self._gens = self._small_generating_set()
        return self._gens

    @property
    def keys(self) -> frozenset:
        if self._keys is None:
            self._keys = closure(self.codec, [self.codec.encode(g.images) for g in self._gens], self.cap)
        return self._keys

    def enumerate(self) -> "PermGroup":
        self.keys
        return self

    def _small_generating_set(self) -> tuple[Permutation, ...]:
        # deterministic greedy: walk sorted elements, keep those not yet generated
        gens: list = []
        have = {self.codec.identity()}
        for k in sorted(self._keys):
            if len(have) == len(self._keys):
                break
            if k not in have:
                gens.append(k)
                have = set(closure(self.codec, gens, self.cap))
        return tuple(Permutation._trusted(tuple(k)) for k in gens)

    def order(self) -> int:
        return len(self.keys)

    def __len__(self) -> int:
        return self.order()

    def __iter__(self) -> Iterator[Permutation]:
        for k in sorted(self.keys):
            yield Permutation._trusted(tuple(k))

    def elements(self) -> list[Permutation]:
        return list(self)

    def __contains__(self, p: Permutation) -> bool:
        return p.degree == self.degree and self.codec.encode(p.images) in self.keys

    def __eq__(self, other) -> bool:
        return isinstance(other, PermGroup) and other.degree == self.degree and other.keys == self.keys

    def __hash__(self) -> int:
        return hash((self.degree, self.keys))

    def is_trivial(self) -> bool:
        if self._keys is None:
            return all(g.is_identity() for g in self._gens)
        return len(self._keys) == 1

    def is_subgroup_of(self, other: "PermGroup") -> bool:
        return self.degree == other.degree and self.keys <= other.keys

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        return f"PermGroup(degree={self.degree}, generators=[{gens}])"


def enumerate_group(generators: Sequence[Permutation], degree: int | None = None,
                    cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    return PermGroup(generators, degree, cap=cap).enumerate()


def _generator_tables(G: PermGroup) -> list[tuple[int, ...]]:
    if G._gens is not None:
        return [g.images for g in G._gens]
    return [g.images for g in G.generators]


def orbits(G: PermGroup) -> list[frozenset[int]]:
    """Orbits sorted by least point."""
    n = G.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in _generator_tables(G):
        for x in range(n):
            a, b = find(x), find(g[x])
            if a != b:
                parent[max(a, b)] = min(a, b)
    classes: dict[int, set[int]] = {}
    for x in range(n):
        classes.setdefault(find(x), set()).add(x)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def orbit(G: PermGroup, x: int) -> frozenset[int]:
    for o in orbits(G):
        if x in o:
            return o
    raise ValueError(f"point {x} out of range")


def is_transitive(G: PermGroup) -> bool:
    return G.degree <= 1 or len(orbits(G)) == 1


def is_k_transitive(G: PermGroup, k: int) -> bool:
    """Transitivity on ordered k-tuples of distinct points."""
    n = G.degree
    if not 1 <= k <= n:
        raise ValueError(f"k must be in 1..{n}")
    need = factorial(n) // factorial(n - k)
    gens = _generator_tables(G)
    start = tuple(range(k))
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for g in gens:
            u = tuple(g[x] for x in t)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return len(seen) == need


def _block_partition(n: int, gens: Sequence[Sequence[int]], seed: Iterable[int]) -> list[int]:
    """Finest G-invariant partition with all seed points in one class (union-find)."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    pending = []
    seed = list(seed)
    for y in seed[1:]:
        a, b = find(seed[0]), find(y)
        if a != b:
            parent[b] = a
            pending.append((seed[0], y))
    while pending:
        x, y = pending.pop()
        for g in gens:
            a, b = find(g[x]), find(g[y])
            if a != b:
                parent[b] = a
                pending.append((g[x], g[y]))
    return [find(x) for x in range(n)]


def minimal_block_containing(G: PermGroup, seed: Iterable[int]) -> frozenset[int]:
    """Smallest block of the transitive group G containing all seed points."""
    seed = list(seed)
    if len(seed) < 1:
        raise ValueError("empty seed")
    if not is_transitive(G):
        raise IntransitiveGroupError("minimal blocks are only computed for transitive groups")
    labels = _block_partition(G.degree, _generator_tables(G), seed)
    r = labels[seed[0]]
    return frozenset(x for x in range(G.degree) if labels[x] == r)


def block_system_containing(G: PermGroup, seed: Iterable[int]) -> list[frozenset[int]]:
    if not is_transitive(G):
        raise IntransitiveGroupError("block systems are only computed for transitive groups")
    labels = _block_partition(G.degree, _generator_tables(G), seed)
    classes: dict[int, set[int]] = {}
    for x, r in enumerate(labels):
        classes.setdefault(r, set()).add(x)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def is_primitive(G: PermGroup) -> bool:
    """Transitive and without non-trivial blocks.  Intransitive groups give False."""
    if not is_transitive(G):
        return False
    return all(len(minimal_block_containing(G, (0, x))) == G.degree for x in range(1, G.degree))


def block_systems(G: PermGroup) -> list[list[frozenset[int]]]:
    """All non-trivial block systems of a transitive group."""
    n = G.degree
    if not is_transitive(G):
        raise IntransitiveGroupError("block systems are only computed for transitive groups")
    # every block through 0 is generated by its points: close the minimal
    # blocks {0, x} under joins
    found: set[frozenset[int]] = set()
    frontier = [minimal_block_containing(G, (0, x)) for x in range(1, n)]
    while frontier:
        b = frontier.pop()
        if b in found:
            continue
        found.add(b)
        for c in list(found):
            j = minimal_block_containing(G, b | c)
            if j not in found:
                frontier.append(j)
    systems = []
    for b in sorted(found, key=lambda s: (len(s), sorted(s))):
        if 1 < len(b) < n:
            systems.append(block_system_containing(G, b))
    return systems


def nontrivial_blocks(G: PermGroup) -> list[frozenset[int]]:
    """Every block B with 1 < |B| < n, ordered by size then contents."""
    out = {b for system in block_systems(G) for b in system}
    return sorted(out, key=lambda s: (len(s), sorted(s)))


def is_block(G: PermGroup, B: Iterable[int]) -> bool:
    """Direct check: every image of B under G equals B or misses it."""
    B = frozenset(B)
    for g in G.keys:
        img = frozenset(g[x] for x in B)
        if img != B and img & B:
            return False
    return True


def setwise_stabilizer(G: PermGroup, S: Iterable[int]) -> PermGroup:
    S = frozenset(S)
    keys = [k for k in G.keys if all(k[x] in S for x in S)]
    return PermGroup.from_keys(G.degree, keys, cap=G.cap)


def point_stabilizer(G: PermGroup, x: int) -> PermGroup:
    return setwise_stabilizer(G, (x,))


def _conj_key(codec: Codec, g, h, h_inv):
    # h^-1 g h
    return codec.mul(codec.mul(h_inv, codec.table(g)), codec.table(h))


def normal_closure(G: PermGroup, g: Permutation | Iterable[Permutation]) -> PermGroup:
    """Smallest normal subgroup of G containing g (or all of several elements)."""
    codec = G.codec
    seeds = [g] if isinstance(g, Permutation) else list(g)
    gens = [codec.encode(s.images) for s in seeds]
    N = closure(codec, gens, G.cap, "normal closure")
    G_gens = [codec.encode(x.images) for x in G.generators]
    G_pairs = [(x, codec.inverse(x)) for x in G_gens]
    changed = True
    while changed:
        changed = False
        for n_gen in list(gens):
            for x, x_inv in G_pairs:
                c = _conj_key(codec, n_gen, x, x_inv)
                if c not in N:
                    gens.append(c)
                    N = closure(codec, gens, G.cap, "normal closure")
                    changed = True
    return PermGroup.from_keys(G.degree, N, cap=G.cap)


def conjugacy_classes(G: PermGroup) -> list[frozenset]:
    """Conjugacy classes as key sets, ordered by least key."""
    codec = G.codec
    gens = [codec.encode(x.images) for x in G.generators]
    pairs = [(x, codec.inverse(x)) for x in gens]
    remaining = set(G.keys)
    classes = []
    for k in sorted(G.keys):
        if k not in remaining:
            continue
        cls = {k}
        queue = [k]
        while queue:
            a = queue.pop()
            for x, x_inv in pairs:
                c = _conj_key(codec, a, x, x_inv)
                if c not in cls:
                    cls.add(c)
                    queue.append(c)
        remaining -= cls
        classes.append(frozenset(cls))
    return classes


def is_normal_subgroup(H: PermGroup, G: PermGroup) -> bool:
    if not H.is_subgroup_of(G):
        return False
    codec = G.codec
    for x in G.generators:
        xk = codec.encode(x.images)
        x_inv = codec.inverse(xk)
        for h in H.generators:
            if _conj_key(codec, codec.encode(h.images), xk, x_inv) not in H.keys:
                return False
    return True


def _class_normal_closures(G: PermGroup) -> list[PermGroup]:
    ident = G.codec.identity()
    out = []
    for cls in conjugacy_classes(G):
        rep = min(cls)
        if rep == ident:
            continue
        out.append(normal_closure(G, Permutation._trusted(tuple(rep))))
    return out


def is_simple(G: PermGroup) -> bool:
    if G.order() < 2:
        return False
    return all(N.order() == G.order() for N in _class_normal_closures(G))


def minimal_normal_subgroups(G: PermGroup) -> list[PermGroup]:
    """Inclusion-minimal non-trivial normal subgroups.

    Each lies inside the normal closure of any of its non-identity elements,
    so the minimal members among those closures are exactly the answer.
    """
    distinct: dict[frozenset, PermGroup] = {}
    for N in _class_normal_closures(G):
        distinct.setdefault(N.keys, N)
    cands = sorted(distinct.values(), key=lambda N: (N.order(), sorted(N.keys)))
    return [N for N in cands if not any(M.keys < N.keys for M in cands)]


def socle(G: PermGroup) -> PermGroup:
    mins = minimal_normal_subgroups(G)
    if not mins:
        return PermGroup.trivial(G.degree)
    gens = [g for N in mins for g in N.generators]
    return PermGroup(gens, G.degree, cap=G.cap).enumerate()


def is_abelian(G: PermGroup) -> bool:
    gens = G.generators
    return all(a * b == b * a for a, b in combinations(gens, 2))


def classify_sym_or_alt(G: PermGroup) -> str | None:
    """'symmetric', 'alternating', or None.

    Order n! means the full symmetric group.  Order n!/2 with only even
    generators means the alternating group, since it is the unique subgroup
    of index 2 in S_n.
    """
    n = G.degree
    order = G.order()
    if order == factorial(n):
        return "symmetric"
    if n >= 2 and 2 * order == factorial(n) and all(g.is_even() for g in G.generators):
        return "alternating"
    return None


def is_identity_group(G: PermGroup) -> bool:
    return G.is_trivial()


def trivial_key(degree: int):
    return Codec(degree).identity()


def as_permutation(key) -> Permutation:
    return Permutation._trusted(tuple(key))


__all__ = [
    "DEFAULT_ELEMENT_CAP", "CapExceededError", "IntransitiveGroupError", "PermGroup",
    "enumerate_group", "orbits", "orbit", "is_transitive", "is_k_transitive",
    "minimal_block_containing", "block_system_containing", "block_systems",
    "nontrivial_blocks", "is_block", "is_primitive", "setwise_stabilizer",
    "point_stabilizer", "normal_closure", "conjugacy_classes", "is_normal_subgroup",
    "is_simple", "minimal_normal_subgroups", "socle", "is_abelian",
    "classify_sym_or_alt", "identity",
]
