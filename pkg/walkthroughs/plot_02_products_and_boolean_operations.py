"""
Direct products and boolean operations
======================================

Running two DFAs side by side gives a product DFA, and each binary boolean
operation on the two languages becomes a choice of final states in the product.
This walkthrough looks at a pair where one operation collapses states, at the
classic witness pairs, and at the product transition group.
"""

from permdfa import automata, boolean, families, product
from permdfa.automata import Dfa

# %%
# Two 2-state DFAs whose symmetric difference needs only two states.

A = Dfa.from_cycles(2, {"a": "(1,2)", "b": "(1,2)", "c": "()"}, 0, {0})
A2 = Dfa.from_cycles(2, {"a": "(1,2)", "b": "()", "c": "(1,2)"}, 0, {0})
for name, sc in boolean.boolean_complexities(A, A2).items():
    print(f"{name:>24}: {sc}")

# %%
# Maslov's pair reaches m*n for all ten proper operations.

L, R = families.maslov_pair(3, 4)
print(set(boolean.boolean_complexities(L, R).values()))

# %%
# The product group is generated by the letter pairs. Its kernels decide
# whether the two DFAs are similar.

Gx = product.product_group(L, R)
print("product group order:", Gx.order())
print("similarity:", product.similarity_class(L, R, Gx=Gx).value)
report = product.accessibility_report(L, R, Gx=Gx)
print(report.conditions())

# %%
# For a 2-state by 3-state pair every cognate pair has maximal boolean
# complexity. The stabilizer condition on the 3-state side certifies it.

U = Dfa.from_cycles(2, {"a": "(1,2)", "b": "()"}, 0, {0})
U2 = Dfa.from_cycles(3, {"a": "(1,2)", "b": "(1,2,3)"}, 0, {0})
print("uniformly boolean minimal:", boolean.is_uniformly_boolean_minimal(U, U2))
print("stabilizer condition:", boolean.lemma_boolprim_conditions(U, U2).value)
