"""Seeded random permutations and permutation DFAs for property sweeps."""

from __future__ import annotations

import random

from .automata import Dfa, is_accessible
from .perm import Permutation

LETTERS = "abcdefgh"


def random_permutation(rng: random.Random, n: int) -> Permutation:
    images = list(range(n))
    rng.shuffle(images)
    return Permutation(images)


def random_permutation_dfa(rng: random.Random, n: int, letters: int, final_count: int | None = None) -> Dfa:
    alphabet = tuple(LETTERS[:letters])
    delta = {a: random_permutation(rng, n) for a in alphabet}
    if final_count is None:
        final_count = rng.randint(0, n)
    finals = frozenset(rng.sample(range(n), final_count))
    return Dfa(n, alphabet, delta, rng.randrange(n), finals)


def random_accessible_dfa(rng: random.Random, n: int, letters: int, final_count: int | None = None) -> Dfa:
    while True:
        d = random_permutation_dfa(rng, n, letters, final_count)
        if is_accessible(d):
            return d


def random_pair(rng: random.Random, degrees: tuple[int, int], max_letters: int = 3,
                accessible: bool = False, final_count: int | None = None) -> tuple[Dfa, Dfa]:
    letters = rng.randint(1, max_letters)
    make = random_accessible_dfa if accessible else random_permutation_dfa
    return (make(rng, rng.randint(*degrees), letters, final_count),
            make(rng, rng.randint(*degrees), letters, final_count))
