"""
Blocks, primitivity and uniform minimality
==========================================

A permutation DFA is uniformly minimal when every non-trivial choice of final
states gives a minimal DFA. For accessible permutation DFAs this happens
exactly when the transition group is primitive. Here we check that on two
small groups, once by brute force and once through the group.
"""

from permdfa import automata, groups
from permdfa.automata import Dfa
from permdfa.perm import parse_cycles

# %%
# The cyclic group of degree 6 has non-trivial blocks, so it is imprimitive.

C6 = groups.PermGroup([parse_cycles("(1,2,3,4,5,6)", 6)], 6)
for b in groups.nontrivial_blocks(C6):
    print(sorted(x + 1 for x in b))
print("primitive:", groups.is_primitive(C6))

# %%
# A final set that is a union of blocks is invisible to the automaton, so the
# DFA built on it cannot be minimal.

cyc = Dfa.from_cycles(6, {"a": "(1,2,3,4,5,6)"}, initial=0, finals={0, 2, 4})
part = automata.indistinguishability_partition(cyc)
print("classes:", [sorted(x + 1 for x in c) for c in part.classes()])
print("minimal:", automata.is_minimal(cyc))
print("saturation criterion:", automata.minimality_via_saturation(cyc))

# %%
# The alternating group A4 is primitive. Every one of the 14 non-trivial
# cognates of its DFA is minimal, and the group-theoretic test agrees.

alt = Dfa.from_cycles(4, {"a": "(2,3,4)", "b": "(1,2)(3,4)"}, initial=0, finals={2, 3})
G = automata.transition_group(alt)
print("order:", G.order(), "type:", groups.classify_sym_or_alt(G))
print("brute force:", automata.is_uniformly_minimal_bruteforce(alt))
print("via primitivity:", automata.is_uniformly_minimal_via_primitivity(alt))

# %%
# Normal structure of A4: the Klein four-group is its only minimal normal
# subgroup, which makes it the socle.

V = groups.normal_closure(G, parse_cycles("(1,2)(3,4)", 4))
print("normal closure of (1,2)(3,4):", V.order())
print("socle order:", groups.socle(G).order(), "simple:", groups.is_simple(G))
