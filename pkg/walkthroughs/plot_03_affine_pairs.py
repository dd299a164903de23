"""
Affine groups over GF(8)
========================

The affine maps x -> a*x + b over GF(2^k) form a 2-transitive group whose
socle is abelian. Two DFAs built from it look excellent one stabilizer at a
time, yet their product still has a non-minimal cognate pair.
"""

from permdfa import automata, boolean, families, gf2k, groups, product

F = gf2k.Gf2kField(3)
x = F.x
print("x^4 =", F.format(F.pow(x, 4)), "  x^7 =", F.format(F.pow(x, 7)))

# %%
# The two generating maps, printed with 1-based states.

print("t(x,0) =", gf2k.affine_permutation(F, x, 0))
print("t(1,1) =", gf2k.affine_permutation(F, 1, 1))
AGL = gf2k.agl_group(F)
print("|AGL(1,8)| =", AGL.order(), "  2-transitive:", groups.is_k_transitive(AGL, 2))
print("socle abelian:", groups.is_abelian(groups.socle(AGL)))

# %%
# Every single row and column stabilizer is the whole affine group.

A, A2 = families.affine_pair_non_ubm(F)
Gx = product.product_group(A, A2)
print("product order:", Gx.order())
print("rectangle check:", boolean.prop_ns_check(A, A2, Gx=Gx))

# %%
# The full sweep still finds a bad cognate pair.

S, S2, form = boolean.ubm_counterexample(A, A2)
print("counterexample:", sorted(S), sorted(S2), form.value)
B = gf2k.translation_block(F)
notB = set(range(8)) - B
P = product.direct_product(A, A2)
d = P.with_finals(P.rectangle(B, B) | P.rectangle(notB, notB))
print("(0,0) ~ (1,1):", automata.indistinguishability_partition(d).same_class(P.index(0, 0), P.index(1, 1)))
