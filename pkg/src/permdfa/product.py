"""Direct products of DFAs and their transition groups.

The product group of two permutation DFAs is kept as a set of pairs (w, w'),
encoded as one key of length m + n (left images, then right images shifted
by m).  Row and column filters read the two halves directly.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator

from .automata import Dfa, is_accessible, reachable_states, require_permutation_dfa
from .groups import (
    DEFAULT_ELEMENT_CAP, Codec, PermGroup, closure, is_primitive, is_transitive,
    minimal_normal_subgroups,
)
from .perm import Permutation, Transformation


class AlphabetMismatchError(ValueError):
    pass


class InternalConsistencyError(AssertionError):
    """Two routes that must agree by theory disagreed: an implementation fault."""


class SimilarPairError(ValueError):
    pass


@dataclass(frozen=True)
class ProductDfa:
    left: Dfa
    right: Dfa

    def __post_init__(self):
        if self.left.alphabet != self.right.alphabet:
            raise AlphabetMismatchError(
                f"alphabets differ: {self.left.alphabet} vs {self.right.alphabet}")

    @property
    def shape(self) -> tuple[int, int]:
        return self.left.state_count, self.right.state_count

    def index(self, q: int, q2: int) -> int:
        return q * self.right.state_count + q2

    def pair(self, i: int) -> tuple[int, int]:
        return divmod(i, self.right.state_count)

    @cached_property
    def dfa(self) -> Dfa:
        """Packed DFA on m*n states with no final states."""
        m, n = self.shape
        delta = {}
        for a in self.left.alphabet:
            t, u = self.left.delta[a].images, self.right.delta[a].images
            delta[a] = Transformation(t[q] * n + u[r] for q in range(m) for r in range(n))
        return Dfa(m * n, self.left.alphabet, delta, self.index(self.left.initial, self.right.initial))

    def with_finals(self, X: Iterable[int]) -> Dfa:
        return self.dfa.with_finals(X)

    def rectangle(self, S: Iterable[int], S2: Iterable[int]) -> frozenset[int]:
        return frozenset(self.index(q, r) for q in S for r in S2)


def direct_product(A: Dfa, A2: Dfa) -> ProductDfa:
    return ProductDfa(A, A2)


class ProductGroup:
    """Subgroup of G x G' generated by the letter pairs (a, a')."""

    def __init__(self, A: Dfa, A2: Dfa, cap: int = DEFAULT_ELEMENT_CAP):
        if A.alphabet != A2.alphabet:
            raise AlphabetMismatchError(f"alphabets differ: {A.alphabet} vs {A2.alphabet}")
        require_permutation_dfa(A)
        require_permutation_dfa(A2)
        self.degree_left = m = A.state_count
        self.degree_right = n = A2.state_count
        self.cap = cap
        self.codec = Codec(m + n)
        self.generator_pairs = tuple(
            (A.delta[a].as_permutation(), A2.delta[a].as_permutation()) for a in A.alphabet)
        self._gen_keys = [self._encode(g, h) for g, h in self.generator_pairs]
        self.keys = closure(self.codec, self._gen_keys, cap, "product group")
        shift = [0] * (m + n)
        for i in range(n):
            shift[m + i] = i
        self._unshift = bytes(shift) + bytes(256 - m - n) if self.codec.compact else tuple(shift)

    def _encode(self, g: Permutation, h: Permutation):
        m = self.degree_left
        return self.codec.encode(list(g.images) + [v + m for v in h.images])

    def _left(self, key):
        return key[:self.degree_left]

    def _right(self, key):
        part = key[self.degree_left:]
        if self.codec.compact:
            return part.translate(self._unshift)
        return tuple(self._unshift[v] for v in part)

    def order(self) -> int:
        return len(self.keys)

    def pairs(self) -> Iterator[tuple[Permutation, Permutation]]:
        for k in sorted(self.keys):
            yield Permutation._trusted(tuple(self._left(k))), Permutation._trusted(tuple(self._right(k)))

    def __contains__(self, pair: tuple[Permutation, Permutation]) -> bool:
        return self._encode(*pair) in self.keys

    def proj_left(self) -> PermGroup:
        return PermGroup.from_keys(self.degree_left, {self._left(k) for k in self.keys}, cap=self.cap)

    def proj_right(self) -> PermGroup:
        return PermGroup.from_keys(self.degree_right, {self._right(k) for k in self.keys}, cap=self.cap)

    def _right_images_where(self, pred) -> PermGroup:
        return PermGroup.from_keys(
            self.degree_right, {self._right(k) for k in self.keys if pred(self._left(k))}, cap=self.cap)

    def _left_images_where(self, pred) -> PermGroup:
        return PermGroup.from_keys(
            self.degree_left, {self._left(k) for k in self.keys if pred(self._right(k))}, cap=self.cap)

    def full_row_stabilizer(self) -> PermGroup:
        """R pi': right parts of the elements with trivial left part."""
        ident = Codec(self.degree_left).identity()
        return self._right_images_where(lambda w: w == ident)

    def full_column_stabilizer(self) -> PermGroup:
        """C pi: left parts of the elements with trivial right part."""
        ident = Codec(self.degree_right).identity()
        return self._left_images_where(lambda w: w == ident)

    def row_stabilizer(self, rows: Iterable[int]) -> PermGroup:
        """pi'-image of the setwise stabilizer of the given rows."""
        rows = frozenset(rows)
        if not rows:
            raise ValueError("rows must be non-empty")
        return self._right_images_where(lambda w: all(w[q] in rows for q in rows))

    def column_stabilizer(self, cols: Iterable[int]) -> PermGroup:
        cols = frozenset(cols)
        if not cols:
            raise ValueError("columns must be non-empty")
        return self._left_images_where(lambda w: all(w[q] in cols for q in cols))

    def all_row_stabilizers(self, pairs: bool = False) -> dict[frozenset[int], PermGroup]:
        """R_q pi' for every row q (and R_{p,q} pi' for p != q if ``pairs``), in one pass."""
        return self._all_stabilizers(self.degree_left, self._left, self._right, self.degree_right, pairs)

    def all_column_stabilizers(self, pairs: bool = False) -> dict[frozenset[int], PermGroup]:
        return self._all_stabilizers(self.degree_right, self._right, self._left, self.degree_left, pairs)

    def _all_stabilizers(self, n_filter, filt, proj, n_out, pairs):
        subsets = [(p,) for p in range(n_filter)]
        if pairs:
            subsets += [(p, q) for p in range(n_filter) for q in range(p + 1, n_filter)]
        found: dict[tuple, set] = {s: set() for s in subsets}
        for k in self.keys:
            w = filt(k)
            img = None
            for s in subsets:
                if len(s) == 1:
                    ok = w[s[0]] == s[0]
                else:
                    p, q = s
                    ok = (w[p] == p and w[q] == q) or (w[p] == q and w[q] == p)
                if ok:
                    if img is None:
                        img = proj(k)
                    found[s].add(img)
        return {frozenset(s): PermGroup.from_keys(n_out, v, cap=self.cap) for s, v in found.items()}

    def orbits_on_pairs(self) -> list[frozenset[tuple[int, int]]]:
        """Orbits of the paired action on Q x Q', from the generators."""
        m, n = self.degree_left, self.degree_right
        seen: set = set()
        out = []
        for start in ((q, r) for q in range(m) for r in range(n)):
            if start in seen:
                continue
            orb = {start}
            queue = deque([start])
            while queue:
                q, r = queue.popleft()
                for g, h in self.generator_pairs:
                    nxt = (g.images[q], h.images[r])
                    if nxt not in orb:
                        orb.add(nxt)
                        queue.append(nxt)
            seen |= orb
            out.append(frozenset(orb))
        return out

    def is_transitive(self) -> bool:
        return len(self.orbits_on_pairs()) == 1


def product_group(A: Dfa, A2: Dfa, cap: int = DEFAULT_ELEMENT_CAP) -> ProductGroup:
    return ProductGroup(A, A2, cap)


def proj_left(Gx: ProductGroup) -> PermGroup:
    return Gx.proj_left()


def proj_right(Gx: ProductGroup) -> PermGroup:
    return Gx.proj_right()


def full_row_stabilizer(Gx: ProductGroup) -> PermGroup:
    return Gx.full_row_stabilizer()


def full_column_stabilizer(Gx: ProductGroup) -> PermGroup:
    return Gx.full_column_stabilizer()


def row_stabilizer(Gx: ProductGroup, rows: Iterable[int]) -> PermGroup:
    return Gx.row_stabilizer(rows)


def column_stabilizer(Gx: ProductGroup, cols: Iterable[int]) -> PermGroup:
    return Gx.column_stabilizer(cols)


class Similarity(str, Enum):
    SIMILAR = "similar"
    DISSIMILAR = "dissimilar"
    STRONGLY_DISSIMILAR = "strongly_dissimilar"


def similarity_class(A: Dfa, A2: Dfa, cap: int = DEFAULT_ELEMENT_CAP,
                     Gx: ProductGroup | None = None) -> Similarity:
    """pi is injective iff R pi' is trivial, pi' is injective iff C pi is trivial."""
    Gx = Gx or product_group(A, A2, cap)
    left_inj = Gx.full_row_stabilizer().is_trivial()
    right_inj = Gx.full_column_stabilizer().is_trivial()
    if left_inj and right_inj:
        return Similarity.SIMILAR
    if not left_inj and not right_inj:
        return Similarity.STRONGLY_DISSIMILAR
    return Similarity.DISSIMILAR


@dataclass(frozen=True)
class AccessibilityReport:
    accessible: bool
    product_bfs: bool
    all_stabilizers_transitive: bool
    some_stabilizer_transitive: bool
    product_group_transitive: bool

    def conditions(self) -> dict[str, bool]:
        return {
            "product_bfs": self.product_bfs,
            "all_stabilizers_transitive": self.all_stabilizers_transitive,
            "some_stabilizer_transitive": self.some_stabilizer_transitive,
            "product_group_transitive": self.product_group_transitive,
        }


def accessibility_report(A: Dfa, A2: Dfa, cap: int = DEFAULT_ELEMENT_CAP,
                         Gx: ProductGroup | None = None) -> AccessibilityReport:
    """Evaluate four equivalent accessibility conditions independently.

    Raises InternalConsistencyError if they disagree.
    """
    Gx = Gx or product_group(A, A2, cap)
    bfs = is_accessible(direct_product(A, A2).dfa)

    G, G2 = Gx.proj_left(), Gx.proj_right()
    g_tr, g2_tr = is_transitive(G), is_transitive(G2)
    rows = Gx.all_row_stabilizers()
    cols = Gx.all_column_stabilizers()
    rows_tr = [is_transitive(H) for H in rows.values()]
    cols_tr = [is_transitive(H) for H in cols.values()]
    cond2 = g_tr and g2_tr and all(rows_tr) and all(cols_tr)
    cond3 = (g_tr and any(rows_tr)) or (g2_tr and any(cols_tr))
    cond4 = Gx.is_transitive()

    values = (bfs, cond2, cond3, cond4)
    if len(set(values)) != 1:
        raise InternalConsistencyError(f"accessibility conditions disagree: {values}")
    return AccessibilityReport(bfs, *values)


def check_prop_graph(A: Dfa, A2: Dfa) -> bool:
    """Accessible left DFA and a fully reachable row, or the column analogue."""
    P = direct_product(A, A2)
    m, n = P.shape
    reach = reachable_states(P.dfa)
    full_row = any(all(P.index(q, r) in reach for r in range(n)) for q in range(m))
    full_col = any(all(P.index(q, r) in reach for q in range(m)) for r in range(n))
    return (is_accessible(A) and full_row) or (is_accessible(A2) and full_col)


def all_nontrivial_normal_subgroups_have(G: PermGroup, prop) -> bool:
    """Whether every non-trivial normal subgroup satisfies ``prop``.

    Only the minimal normal subgroups are tested: every non-trivial normal
    subgroup contains a minimal one, and transitivity and primitivity pass
    from a subgroup to any group containing it.
    """
    return all(prop(N) for N in minimal_normal_subgroups(G))


class Verdict(str, Enum):
    UBM_GUARANTEED = "ubm_guaranteed"
    ACCESSIBLE_GUARANTEED = "accessible_guaranteed"
    NO_GUARANTEE = "no_guarantee"


@dataclass(frozen=True)
class DissimilarVerdict:
    verdict: Verdict
    reason: str


def theorem_dissimilar_verdict(A: Dfa, A2: Dfa, cap: int = DEFAULT_ELEMENT_CAP,
                               Gx: ProductGroup | None = None) -> DissimilarVerdict:
    """Guarantee accessibility or uniform boolean minimality for a dissimilar pair.

    The normal-subgroup hypothesis is only tested on a side whose kernel image
    is non-trivial: C pi != 1 for G, R pi' != 1 for G'.  Those kernel images
    are non-trivial normal subgroups of G and G', which is what makes the
    hypothesis bite.  A side with trivial kernel image gives nothing.
    """
    require_permutation_dfa(A)
    require_permutation_dfa(A2)
    m, n = A.state_count, A2.state_count
    if m < 3 or n < 3:
        raise ValueError("both DFAs need at least three states")
    Gx = Gx or product_group(A, A2, cap)
    C = Gx.full_column_stabilizer()
    R = Gx.full_row_stabilizer()
    if C.is_trivial() and R.is_trivial():
        raise SimilarPairError("the pair is similar; the dissimilarity criterion does not apply")
    G, G2 = Gx.proj_left(), Gx.proj_right()
    sides = []
    if not C.is_trivial():
        sides.append(("left", G))
    if not R.is_trivial():
        sides.append(("right", G2))

    if is_primitive(G) and is_primitive(G2):
        for name, H in sides:
            if all_nontrivial_normal_subgroups_have(H, is_primitive):
                return DissimilarVerdict(
                    Verdict.UBM_GUARANTEED,
                    f"both groups primitive; every non-trivial normal subgroup of the {name} group is primitive")
    if is_transitive(G) and is_transitive(G2):
        for name, H in sides:
            if all_nontrivial_normal_subgroups_have(H, is_transitive):
                return DissimilarVerdict(
                    Verdict.ACCESSIBLE_GUARANTEED,
                    f"both groups transitive; every non-trivial normal subgroup of the {name} group is transitive")
    return DissimilarVerdict(Verdict.NO_GUARANTEE, "no side with a non-trivial kernel image meets the normal-subgroup hypothesis")


COROLLARY_LABELS = ("transitive_simple", "primitive", "primitive_simple", "sym_or_alt_not4",
                    "two_transitive_nonaffine")


def corollary_dissimilar_case(G: PermGroup) -> set[str]:
    """Group-level properties that make the normal-subgroup hypothesis hold.

    ``transitive_simple`` and ``primitive`` give accessibility of a dissimilar
    product; the other three give uniform boolean minimality.
    """
    from .groups import classify_sym_or_alt, is_abelian, is_k_transitive, is_simple, socle

    labels = set()
    trans = is_transitive(G)
    prim = is_primitive(G)
    simple = is_simple(G)
    if trans and simple:
        labels.add("transitive_simple")
    if prim:
        labels.add("primitive")
    if prim and simple:
        labels.add("primitive_simple")
    if G.degree != 4 and G.degree >= 3 and classify_sym_or_alt(G) is not None:
        labels.add("sym_or_alt_not4")
    if G.degree >= 2 and is_k_transitive(G, 2) and not is_abelian(socle(G)):
        labels.add("two_transitive_nonaffine")
    return labels
