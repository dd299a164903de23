"""Named DFA families."""

from __future__ import annotations

from .automata import Dfa
from .gf2k import Gf2kField, affine_permutation, translation_block
from .groups import PermGroup, classify_sym_or_alt
from .perm import Permutation, cycle, identity


def _check(n: int, low: int, what: str):
    if n < low:
        raise ValueError(f"{what} must be at least {low}, got {n}")


def cyclic_dfa(n: int, finals=(0,)) -> Dfa:
    _check(n, 2, "n")
    return Dfa(n, ("a",), {"a": cycle(range(n), n)}, 0, frozenset(finals))


def symmetric_dfa(n: int, finals=(0,)) -> Dfa:
    _check(n, 2, "n")
    return Dfa(n, ("a", "b"), {"a": cycle([0, 1], n), "b": cycle(range(n), n)}, 0, frozenset(finals))


def alternating_dfa(n: int, finals=(0,)) -> Dfa:
    """(1,2,3) with (1,...,n) for odd n, or with (2,...,n) for even n."""
    _check(n, 3, "n")
    long = cycle(range(n), n) if n % 2 else cycle(range(1, n), n)
    d = Dfa(n, ("a", "b"), {"a": cycle([0, 1, 2], n), "b": long}, 0, frozenset(finals))
    G = PermGroup([d.delta["a"], d.delta["b"]], n)
    if classify_sym_or_alt(G) != "alternating":
        raise AssertionError(f"generators do not give the alternating group of degree {n}")
    return d


def maslov_pair(m: int, n: int) -> tuple[Dfa, Dfa]:
    """Left counts 1s mod m (final m-1), right counts 0s mod n (final n-1)."""
    _check(m, 1, "m")
    _check(n, 1, "n")
    left = Dfa(m, ("0", "1"), {"0": identity(m), "1": cycle(range(m), m)}, 0, frozenset({m - 1}))
    right = Dfa(n, ("0", "1"), {"0": cycle(range(n), n), "1": identity(n)}, 0, frozenset({n - 1}))
    return left, right


def yzs_pair(m: int, n: int) -> tuple[Dfa, Dfa]:
    """Left counts a mod m, right counts b mod n; initial and final state 0."""
    _check(m, 1, "m")
    _check(n, 1, "n")
    left = Dfa(m, ("a", "b"), {"a": cycle(range(m), m), "b": identity(m)}, 0, frozenset({0}))
    right = Dfa(n, ("a", "b"), {"a": identity(n), "b": cycle(range(n), n)}, 0, frozenset({0}))
    return left, right


def affine_pair_non_ubm(field: Gf2kField) -> tuple[Dfa, Dfa]:
    """a = t_{g,0}, b = t_{1,1}, c = t_{1,0} on the left; b and c swap roles on the right."""
    g = field.generator
    a = affine_permutation(field, g, 0)
    t11 = affine_permutation(field, 1, 1)
    t10 = affine_permutation(field, 1, 0)
    B = translation_block(field)
    n = field.size
    left = Dfa(n, ("a", "b", "c"), {"a": a, "b": t11, "c": t10}, 0, B)
    right = Dfa(n, ("a", "b", "c"), {"a": a, "b": t10, "c": t11}, 0, B)
    return left, right


def affine_pair_ubm(field: Gf2kField) -> tuple[Dfa, Dfa]:
    """a = t_{g,0}, b = t_{1,1} on the left; a' = t_{g,0}^-1, b' = t_{1,1} on the right."""
    g = field.generator
    a = affine_permutation(field, g, 0)
    t11 = affine_permutation(field, 1, 1)
    B = translation_block(field)
    n = field.size
    left = Dfa(n, ("a", "b"), {"a": a, "b": t11}, 0, B)
    right = Dfa(n, ("a", "b"), {"a": a.inverse(), "b": t11}, 0, B)
    return left, right
