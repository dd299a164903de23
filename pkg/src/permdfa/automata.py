"""Deterministic finite automata, minimality and uniform minimality."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

from .groups import DEFAULT_ELEMENT_CAP, PermGroup, block_systems, is_primitive, is_transitive
from .perm import Permutation, Transformation

UM_SUBSET_LIMIT = 20


class SizeLimitError(RuntimeError):
    """Raised when a brute-force sweep would exceed its size limit."""


class NotAPermutationDfaError(ValueError):
    pass


@dataclass(frozen=True)
class Dfa:
    """A complete DFA on states 0..n-1 with letters named by strings."""

    state_count: int
    alphabet: tuple[str, ...]
    delta: Mapping[str, Transformation]
    initial: int
    finals: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        alphabet = tuple(self.alphabet)
        if len(set(alphabet)) != len(alphabet):
            raise ValueError("repeated letter in alphabet")
        if set(self.delta) != set(alphabet):
            raise ValueError("delta must define exactly the alphabet letters")
        delta = {}
        for a in alphabet:
            t = self.delta[a]
            if not isinstance(t, Transformation):
                t = Transformation(t)
            if t.degree != self.state_count:
                raise ValueError(f"letter {a!r} acts on {t.degree} states, expected {self.state_count}")
            delta[a] = t
        if not 0 <= self.initial < self.state_count:
            raise ValueError("initial state out of range")
        finals = frozenset(self.finals)
        if any(not 0 <= q < self.state_count for q in finals):
            raise ValueError("final state out of range")
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "delta", MappingProxyType(delta))
        object.__setattr__(self, "finals", finals)

    @classmethod
    def from_cycles(cls, degree: int, letters: Mapping[str, str], initial: int = 0,
                    finals: Iterable[int] = ()) -> "Dfa":
        """Build a permutation DFA from 1-based cycle strings (0-based initial/finals)."""
        from .perm import parse_cycles
        return cls(degree, tuple(letters), {a: parse_cycles(c, degree) for a, c in letters.items()},
                   initial, frozenset(finals))

    def __hash__(self):
        return hash((self.state_count, self.alphabet, tuple(self.delta[a] for a in self.alphabet),
                     self.initial, self.finals))

    def __eq__(self, other):
        return (isinstance(other, Dfa) and self.state_count == other.state_count
                and self.alphabet == other.alphabet and self.initial == other.initial
                and self.finals == other.finals
                and all(self.delta[a] == other.delta[a] for a in self.alphabet))

    @property
    def transitions(self) -> list[Transformation]:
        return [self.delta[a] for a in self.alphabet]

    def step(self, q: int, word: Iterable[str]) -> int:
        for a in word:
            q = self.delta[a](q)
        return q

    def accepts(self, word: Iterable[str]) -> bool:
        return self.step(self.initial, word) in self.finals

    def with_finals(self, finals: Iterable[int]) -> "Dfa":
        return Dfa(self.state_count, self.alphabet, dict(self.delta), self.initial, frozenset(finals))

    def complement(self) -> "Dfa":
        return self.with_finals(set(range(self.state_count)) - self.finals)


def reachable_states(d: Dfa) -> frozenset[int]:
    seen = {d.initial}
    queue = deque([d.initial])
    tables = [t.images for t in d.transitions]
    while queue:
        q = queue.popleft()
        for t in tables:
            r = t[q]
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return frozenset(seen)


def is_accessible(d: Dfa) -> bool:
    return len(reachable_states(d)) == d.state_count


def is_strongly_connected(d: Dfa) -> bool:
    tables = [t.images for t in d.transitions]
    n = d.state_count
    fwd = [set() for _ in range(n)]
    back = [set() for _ in range(n)]
    for t in tables:
        for q in range(n):
            fwd[q].add(t[q])
            back[t[q]].add(q)

    def covers(adj):
        seen = {0}
        stack = [0]
        while stack:
            q = stack.pop()
            for r in adj[q]:
                if r not in seen:
                    seen.add(r)
                    stack.append(r)
        return len(seen) == n

    return n == 0 or (covers(fwd) and covers(back))


def is_permutation_dfa(d: Dfa) -> bool:
    return all(t.is_permutation() for t in d.transitions)


def require_permutation_dfa(d: Dfa) -> None:
    if not is_permutation_dfa(d):
        raise NotAPermutationDfaError("every letter must act as a permutation")


def transition_group(d: Dfa, cap: int = DEFAULT_ELEMENT_CAP) -> PermGroup:
    require_permutation_dfa(d)
    return PermGroup([t.as_permutation() for t in d.transitions], d.state_count, cap=cap)


@dataclass(frozen=True)
class StatePartition:
    """Partition of the states; ``class_of[q]`` is a class index in first-seen order."""

    state_count: int
    class_of: tuple[int, ...]

    def classes(self) -> list[frozenset[int]]:
        out: dict[int, set[int]] = {}
        for q, c in enumerate(self.class_of):
            out.setdefault(c, set()).add(q)
        return [frozenset(out[c]) for c in sorted(out)]

    def class_count(self) -> int:
        return len(set(self.class_of))

    def is_discrete(self) -> bool:
        return self.class_count() == self.state_count

    def same_class(self, p: int, q: int) -> bool:
        return self.class_of[p] == self.class_of[q]


def _normalise(labels: Sequence) -> tuple[int, ...]:
    ids: dict = {}
    return tuple(ids.setdefault(x, len(ids)) for x in labels)


def indistinguishability_partition(d: Dfa, X: Iterable[int] | None = None) -> StatePartition:
    """Moore refinement of {X, complement of X} (X defaults to the final states)."""
    X = d.finals if X is None else frozenset(X)
    tables = [t.images for t in d.transitions]
    labels = _normalise([q in X for q in range(d.state_count)])
    count = len(set(labels))
    while True:
        sig = [(labels[q],) + tuple(labels[t[q]] for t in tables) for q in range(d.state_count)]
        new = _normalise(sig)
        new_count = len(set(new))
        if new_count == count:
            return StatePartition(d.state_count, new)
        labels, count = new, new_count


def is_minimal(d: Dfa) -> bool:
    return is_accessible(d) and indistinguishability_partition(d).is_discrete()


def state_complexity(d: Dfa) -> int:
    """Number of states of the minimal DFA for the language of d."""
    part = indistinguishability_partition(d)
    return len({part.class_of[q] for q in reachable_states(d)})


def cognate(d: Dfa, S: Iterable[int]) -> Dfa:
    S = frozenset(S)
    if any(not 0 <= q < d.state_count for q in S):
        raise ValueError("final set out of range")
    return d.with_finals(S)


def nontrivial_subsets_gray(n: int) -> Iterator[int]:
    """Bitmasks of all proper non-empty subsets of n points in Gray-code order."""
    for i in range(1, 1 << n):
        m = i ^ (i >> 1)
        if m != (1 << n) - 1:
            yield m


def mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i for i in range(mask.bit_length()) if mask >> i & 1)


def _rank_rows(keys: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    order = np.argsort(keys, axis=1, kind="stable")
    sk = np.take_along_axis(keys, order, axis=1)
    step = np.zeros(sk.shape, dtype=np.int64)
    step[:, 1:] = sk[:, 1:] != sk[:, :-1]
    ranks = np.cumsum(step, axis=1)
    out = np.empty_like(ranks)
    np.put_along_axis(out, order, ranks, axis=1)
    return out, ranks[:, -1] + 1


def batch_class_counts(tables: np.ndarray, finals: np.ndarray) -> np.ndarray:
    """Number of indistinguishability classes for many final-state sets at once.

    ``tables`` has shape (letters, N) and ``finals`` boolean shape (B, N).
    Row b of the result is the class count of the DFA with final set finals[b],
    counted over all N states.
    """
    finals = np.asarray(finals, dtype=bool)
    B, N = finals.shape
    labels = finals.astype(np.int64)
    counts = labels.max(axis=1) - labels.min(axis=1) + 1
    result = counts.copy()
    active = np.arange(B)
    while active.size:
        keys = labels
        for t in tables:
            keys, _ = _rank_rows(keys * N + labels[:, t])
        new_labels, new_counts = _rank_rows(keys)
        changed = new_counts != counts
        result[active] = new_counts
        keep = changed & (new_counts < N)
        active = active[keep]
        labels = new_labels[keep]
        counts = new_counts[keep]
    return result


def batch_minimal(d: Dfa, finals: np.ndarray) -> np.ndarray:
    """Vectorised minimality test of the cognates of d with the given final sets."""
    finals = np.asarray(finals, dtype=bool)
    if not is_accessible(d):
        return np.zeros(finals.shape[0], dtype=bool)
    tables = np.array([t.images for t in d.transitions], dtype=np.int64).reshape(-1, d.state_count)
    return batch_class_counts(tables, finals) == d.state_count


def masks_to_array(masks: Sequence[int], n: int) -> np.ndarray:
    m = np.asarray(masks, dtype=np.int64)[:, None]
    return (m >> np.arange(n, dtype=np.int64)) & 1 == 1


def is_uniformly_minimal_bruteforce(d: Dfa, limit: int = UM_SUBSET_LIMIT, chunk: int = 1 << 14) -> bool:
    """Check every cognate with a non-trivial final set (2^n - 2 of them)."""
    n = d.state_count
    if n > limit:
        raise SizeLimitError(f"{n} states exceeds the brute-force limit of {limit}")
    if not is_accessible(d):
        return False
    if n == 1:
        return True
    masks = list(nontrivial_subsets_gray(n))
    for i in range(0, len(masks), chunk):
        if not batch_minimal(d, masks_to_array(masks[i:i + chunk], n)).all():
            return False
    return True


def uniform_minimality_counterexample(d: Dfa, limit: int = UM_SUBSET_LIMIT) -> frozenset[int] | None:
    """A non-trivial final set whose cognate is not minimal, if any (first in Gray order)."""
    n = d.state_count
    if n > limit:
        raise SizeLimitError(f"{n} states exceeds the brute-force limit of {limit}")
    masks = list(nontrivial_subsets_gray(n))
    if not masks:
        return None
    ok = batch_minimal(d, masks_to_array(masks, n))
    bad = np.flatnonzero(~ok)
    return mask_to_set(masks[bad[0]]) if bad.size else None


def is_uniformly_minimal_via_primitivity(d: Dfa, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    """For permutation DFAs: uniformly minimal iff accessible with a primitive group."""
    require_permutation_dfa(d)
    if not is_accessible(d):
        return False
    return is_primitive(transition_group(d, cap))


def minimality_via_saturation(d: Dfa, cap: int = DEFAULT_ELEMENT_CAP) -> bool:
    """For accessible permutation DFAs: minimal iff no non-trivial block system
    of the transition group has the final set as a union of blocks."""
    require_permutation_dfa(d)
    if not is_accessible(d):
        raise ValueError("saturation criterion needs an accessible DFA")
    n = d.state_count
    F = d.finals
    if not F or len(F) == n:
        return n == 1
    G = transition_group(d, cap)
    if not is_transitive(G):
        raise ValueError("accessible permutation DFA with intransitive group")
    for system in block_systems(G):
        if all(b <= F or not (b & F) for b in system):
            return False
    return True
