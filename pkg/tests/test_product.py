import pytest
from hypothesis import given, settings, strategies as st

from permdfa import automata, boolean, families, gf2k, groups, product, suite
from permdfa.automata import Dfa
from permdfa.perm import Permutation, parse_cycles
from permdfa.product import (
    AlphabetMismatchError, ProductGroup, Similarity, SimilarPairError, Verdict, accessibility_report,
    check_prop_graph, corollary_dissimilar_case, direct_product, similarity_class,
    theorem_dissimilar_verdict,
)
from oracles import naive_closure, word_reachable


@st.composite
def perm_pairs(draw, max_degree=5, max_letters=3):
    m = draw(st.integers(1, max_degree))
    n = draw(st.integers(1, max_degree))
    letters = "abc"[:draw(st.integers(1, max_letters))]
    A = Dfa(m, tuple(letters), {a: Permutation(draw(st.permutations(range(m)))) for a in letters}, 0,
            draw(st.frozensets(st.integers(0, m - 1))))
    A2 = Dfa(n, tuple(letters), {a: Permutation(draw(st.permutations(range(n)))) for a in letters}, 0,
             draw(st.frozensets(st.integers(0, n - 1))))
    return A, A2


def naive_pairs(A, A2):
    m = A.state_count
    gens = [tuple(A.delta[a].images) + tuple(v + m for v in A2.delta[a].images) for a in A.alphabet]
    return {(g[:m], tuple(v - m for v in g[m:])) for g in naive_closure(gens, m + A2.state_count)}


def left_right(Gx):
    return {(tuple(g.images), tuple(h.images)) for g, h in Gx.pairs()}


def test_direct_product_indexing():
    A, A2 = suite.ubm_pair()
    P = direct_product(A, A2)
    assert P.shape == (2, 3)
    assert P.dfa.state_count == 6
    for i in range(6):
        assert P.index(*P.pair(i)) == i
    assert P.rectangle({0}, {1, 2}) == {P.index(0, 1), P.index(0, 2)}
    q = P.dfa.step(P.index(0, 0), "ab")
    assert P.pair(q) == (A.step(0, "ab"), A2.step(0, "ab"))


def test_one_state_right_factor_copies_left():
    A = families.cyclic_dfa(4)
    one = Dfa(1, ("a",), {"a": Permutation([0])}, 0, {0})
    P = direct_product(A, one)
    assert [P.dfa.delta["a"](i) for i in range(4)] == list(A.delta["a"].images)
    Gx = ProductGroup(A, one)
    assert Gx.full_row_stabilizer().is_trivial()
    assert Gx.proj_right().is_trivial()


def test_alphabet_mismatch():
    with pytest.raises(AlphabetMismatchError):
        ProductGroup(families.cyclic_dfa(3), families.symmetric_dfa(3))


def test_affine_pair_order_and_column_kernel():
    F = gf2k.Gf2kField(3)
    A, A2 = families.affine_pair_non_ubm(F)
    Gx = ProductGroup(A, A2)
    assert Gx.order() == 448
    assert gf2k.affine_permutation(F, 1, 1) in Gx.full_column_stabilizer()
    agl = gf2k.agl_group(F)
    assert Gx.row_stabilizer({0}) == agl and Gx.column_stabilizer({0}) == agl


def test_affine_pair_double_stabilizers_are_translations():
    F = gf2k.Gf2kField(3)
    A, A2 = families.affine_pair_ubm(F)
    Gx = ProductGroup(A, A2)
    T = gf2k.translation_subgroup(F)
    assert Gx.row_stabilizer({0, 1}) == T
    assert not groups.is_primitive(T)


def test_identical_dfas_give_diagonal():
    A = suite.s5_dfa()
    Gx = ProductGroup(A, A)
    assert Gx.order() == 120
    assert all(g == h for g, h in Gx.pairs())
    assert Gx.proj_left() == Gx.proj_right()
    assert similarity_class(A, A) is Similarity.SIMILAR


def test_ubm_pair_projection_orders():
    A, A2 = suite.ubm_pair()
    Gx = ProductGroup(A, A2)
    assert (Gx.proj_left().order(), Gx.proj_right().order()) == (2, 6)


def test_similarity_examples():
    A = Dfa.from_cycles(2, {"a": "(1,2)", "b": "()"})
    A2 = Dfa.from_cycles(2, {"a": "()", "b": "(1,2)"})
    assert similarity_class(A, A2) is Similarity.STRONGLY_DISSIMILAR
    K1 = Dfa.from_cycles(2, {"a": "(1,2)", "b": "(1,2)"})
    K2 = Dfa.from_cycles(4, {"a": "(1,2)(3,4)", "b": "(1,3)(2,4)"})
    assert ProductGroup(K1, K2).order() == 4
    assert similarity_class(K1, K2) is Similarity.DISSIMILAR
    assert similarity_class(suite.s5_dfa(), suite.degree10_dfa(swap=True)) is not Similarity.SIMILAR
    assert similarity_class(suite.s5_dfa(), suite.degree10_dfa()) is Similarity.SIMILAR


def test_accessibility_examples():
    M, M2 = families.maslov_pair(3, 3)
    r = accessibility_report(M, M2)
    assert r.accessible and all(r.conditions().values())
    assert check_prop_graph(M, M2)
    r = accessibility_report(suite.s5_dfa(), suite.degree10_dfa())
    assert not r.accessible and not any(r.conditions().values())
    assert not check_prop_graph(suite.s5_dfa(), suite.degree10_dfa())
    gap = suite.degree6_dfa("(1,2,3,5,4,6)")
    assert accessibility_report(suite.s5_dfa(), gap).accessible
    one = Dfa(1, ("a", "b"), {"a": Permutation([0]), "b": Permutation([0])}, 0)
    assert check_prop_graph(families.symmetric_dfa(4), one)


def test_verdict_examples():
    F = gf2k.Gf2kField(3)
    A, A2 = families.affine_pair_non_ubm(F)
    v = theorem_dissimilar_verdict(A, A2)
    assert v.verdict is not Verdict.UBM_GUARANTEED
    assert not boolean.is_uniformly_boolean_minimal(A, A2)
    with pytest.raises(SimilarPairError):
        theorem_dissimilar_verdict(suite.s5_dfa(), suite.s5_dfa())
    with pytest.raises(ValueError):
        theorem_dissimilar_verdict(*suite.ubm_pair())


def test_kernel_image_needed_for_guarantee():
    # C7 is simple and primitive, but its kernel image is trivial; AGL(1,8)
    # has a non-trivial one whose normal subgroups are only transitive
    F = gf2k.Gf2kField(3)
    A = Dfa.from_cycles(7, {"a": "(1,2,3,4,5,6,7)", "b": "()"}, 0, {0})
    A2 = Dfa(8, ("a", "b"), {"a": gf2k.affine_permutation(F, F.x, 0), "b": gf2k.affine_permutation(F, 1, 1)},
             0, {0})
    Gx = ProductGroup(A, A2)
    assert Gx.full_row_stabilizer().order() == 8 and Gx.full_column_stabilizer().is_trivial()
    assert theorem_dissimilar_verdict(A, A2).verdict is Verdict.ACCESSIBLE_GUARANTEED
    assert accessibility_report(A, A2).accessible
    cex = boolean.ubm_counterexample(A, A2)
    assert cex is not None


def test_corollary_labels():
    A5 = groups.PermGroup([parse_cycles("(1,2,3)", 5), parse_cycles("(1,2,3,4,5)", 5)], 5)
    assert corollary_dissimilar_case(A5) == set(product.COROLLARY_LABELS)
    assert corollary_dissimilar_case(gf2k.agl_group(gf2k.Gf2kField(3))) == {"primitive"}
    assert corollary_dissimilar_case(groups.PermGroup([parse_cycles("(1,2,3,4,5,6)", 6)], 6)) == set()


@settings(max_examples=80, deadline=None)
@given(perm_pairs())
def test_product_group_matches_naive_closure(pair):
    A, A2 = pair
    Gx = ProductGroup(A, A2)
    assert left_right(Gx) == naive_pairs(A, A2)
    assert Gx.proj_left() == automata.transition_group(A)
    assert Gx.proj_right() == automata.transition_group(A2)
    inv = {(g.inverse(), h.inverse()) for g, h in Gx.pairs()}
    assert all(p in Gx for p in inv)


@settings(max_examples=80, deadline=None)
@given(perm_pairs())
def test_packed_product_acts_like_pairs(pair):
    A, A2 = pair
    P = direct_product(A, A2)
    Gx = ProductGroup(A, A2)
    packed = groups.PermGroup([P.dfa.delta[a].as_permutation() for a in A.alphabet], P.dfa.state_count)
    assert packed.order() == Gx.order()
    if P.dfa.state_count <= 9:
        assert automata.reachable_states(P.dfa) == word_reachable(P.dfa)


@settings(max_examples=100, deadline=None)
@given(perm_pairs(max_degree=6))
def test_accessibility_conditions_agree(pair):
    A, A2 = pair
    r = accessibility_report(A, A2)
    assert len(set(r.conditions().values())) == 1
    assert check_prop_graph(A, A2) == r.accessible


@settings(max_examples=60, deadline=None)
@given(perm_pairs())
def test_kernel_images_are_normal(pair):
    A, A2 = pair
    Gx = ProductGroup(A, A2)
    R, C = Gx.full_row_stabilizer(), Gx.full_column_stabilizer()
    assert groups.is_normal_subgroup(R, Gx.proj_right())
    assert groups.is_normal_subgroup(C, Gx.proj_left())
    rows = Gx.all_row_stabilizers(pairs=True)
    for S, H in rows.items():
        assert R.is_subgroup_of(H)
        assert H == Gx.row_stabilizer(S)
    for S, H in Gx.all_column_stabilizers(pairs=True).items():
        assert C.is_subgroup_of(H)
        assert H == Gx.column_stabilizer(S)
    assert Gx.row_stabilizer(range(A.state_count)) == Gx.proj_right()
