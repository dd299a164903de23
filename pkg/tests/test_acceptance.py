"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line (REPORT for criterion 14, which asserts
nothing); the lines are repeated in a summary section at the end of the run.
"""

import random

from sympy.combinatorics import PermutationGroup as SymGroup

from permdfa import automata, boolean, families, gf2k, groups, product, randomgen, suite
from permdfa.perm import parse_cycles
from oracles import sym_group


def G(degree, *cycles):
    return groups.PermGroup([parse_cycles(c, degree) for c in cycles], degree)


def one_based(sets):
    return {frozenset(x + 1 for x in s) for s in sets}


def test_criterion_1_cyclic_six_blocks(criterion):
    H = G(6, "(1,2,3,4,5,6)")
    blocks = one_based(groups.nontrivial_blocks(H))
    want = {frozenset(s) for s in ({1, 3, 5}, {2, 4, 6}, {1, 4}, {2, 5}, {3, 6})}
    big = [b for b in blocks if len(b) >= 4]
    ok = groups.is_transitive(H) and not groups.is_primitive(H) and blocks == want and not big
    criterion(1, ok, f"{len(blocks)} non-trivial blocks, sizes {sorted({len(b) for b in blocks})}")
    assert ok


def test_criterion_2_prime_degree_primitive(criterion):
    rng = random.Random(2)
    transitive = bad = oracle_bad = 0
    for _ in range(50):
        p = rng.choice((2, 3, 5, 7))
        gens = [randomgen.random_permutation(rng, p) for _ in range(rng.randint(1, 3))]
        H = groups.PermGroup(gens, p)
        if groups.is_transitive(H):
            transitive += 1
            bad += not groups.is_primitive(H)
            oracle_bad += not sym_group(gens, p).is_primitive()
    ok = groups.is_primitive(G(5, "(1,2,3,4,5)")) and bad == 0 and oracle_bad == 0
    criterion(2, ok, f"{transitive} of 50 random groups transitive, {bad} imprimitive")
    assert ok


def test_criterion_3_alternating_dfa_uniformly_minimal(criterion):
    d = suite.altdfa()
    cognates = sum(1 for _ in automata.nontrivial_subsets_gray(d.state_count))
    bf = automata.is_uniformly_minimal_bruteforce(d)
    via = automata.is_uniformly_minimal_via_primitivity(d)
    ok = automata.is_strongly_connected(d) and cognates == 14 and bf and via
    criterion(3, ok, f"brute force {bf} over {cognates} cognates, primitivity route {via}")
    assert ok


def test_criterion_4_cyclic_dfa_not_minimal(criterion):
    d = suite.cycdfa()
    part = automata.indistinguishability_partition(d)
    shared = part.same_class(0, 2) and part.same_class(0, 4)
    ok = not automata.is_minimal(d) and shared
    criterion(4, ok, f"classes {sorted(sorted(c) for c in one_based(part.classes()))}")
    assert ok


def test_criterion_5_two_by_two_pair(criterion):
    A, A2 = suite.symdiff2_pair()
    maximal = boolean.has_maximal_boolean_complexity(A, A2)
    P = product.direct_product(A, A2)
    d = boolean.apply_boolean_op(A, A2, boolean.SYMMETRIC_DIFFERENCE)
    same = automata.indistinguishability_partition(d).same_class(P.index(0, 1), P.index(1, 0))
    sc = automata.state_complexity(d)
    ok = not maximal and same and sc < 4
    criterion(5, ok, f"maximal {maximal}, (1,2)~(2,1) {same}, xor state complexity {sc}")
    assert ok


def test_criterion_6_two_by_three_pair(criterion):
    A, A2 = suite.ubm_pair()
    Gx = product.product_group(A, A2)
    right_is_s3 = groups.classify_sym_or_alt(Gx.proj_right()) == "symmetric" and A2.state_count == 3
    sim = product.similarity_class(A, A2, Gx=Gx)
    bf = boolean.is_uniformly_boolean_minimal(A, A2)
    try:
        verdict = product.theorem_dissimilar_verdict(A, A2, Gx=Gx).verdict
        guaranteed = verdict is product.Verdict.UBM_GUARANTEED
        thm = verdict.value
    except ValueError as e:
        guaranteed, thm = False, f"refused ({e})"
    ok = bf and guaranteed
    criterion(6, ok, f"brute-force UBM {bf}; right group S3 {right_is_s3}, {sim.value}; "
                     f"dissimilarity guarantee {thm}")
    assert ok


def test_criterion_7_witness_pairs(criterion):
    bad = []
    count = 0
    for m in range(3, 6):
        for n in range(3, 6):
            for name, make in (("maslov", families.maslov_pair), ("yzs", families.yzs_pair)):
                A, A2 = make(m, n)
                for op in boolean.all_proper_boolean_functions():
                    sc = automata.state_complexity(boolean.apply_boolean_op(A, A2, op))
                    count += 1
                    if sc != m * n:
                        bad.append(f"{name}({m},{n}) {op}={sc}")
    ok = not bad and count == 180
    criterion(7, ok, f"{count} complexities checked, {len(bad)} below m*n")
    assert ok


def test_criterion_8_one_final_state_pairs(criterion):
    rng = random.Random(8)
    disagree = accessible = 0
    for _ in range(200):
        A, A2 = randomgen.random_pair(rng, (3, 6), accessible=True, final_count=1)
        assert automata.is_minimal(A) and automata.is_minimal(A2)
        acc = product.accessibility_report(A, A2).accessible
        maximal = boolean.has_maximal_boolean_complexity(A, A2)
        accessible += acc
        disagree += acc != maximal
    ok = disagree == 0
    criterion(8, ok, f"200 pairs, {accessible} with accessible product, {disagree} disagreements")
    assert ok


def test_criterion_9_accessibility_conditions(criterion):
    rng = random.Random(9)
    disagree = accessible = 0
    for _ in range(200):
        A, A2 = randomgen.random_pair(rng, (1, 6))
        try:
            r = product.accessibility_report(A, A2)
        except product.InternalConsistencyError:
            disagree += 1
            continue
        accessible += r.accessible
        disagree += product.check_prop_graph(A, A2) != r.accessible
    ok = disagree == 0
    criterion(9, ok, f"200 pairs, {accessible} accessible, {disagree} disagreements")
    assert ok


def test_criterion_10_affine_k3_indistinguishable(criterion):
    F = gf2k.Gf2kField(3)
    A, A2 = families.affine_pair_non_ubm(F)
    B = gf2k.translation_block(F)
    notB = frozenset(range(8)) - B
    P = product.direct_product(A, A2)
    d = P.with_finals(P.rectangle(B, B) | P.rectangle(notB, notB))
    same = automata.indistinguishability_partition(d).same_class(P.index(0, 0), P.index(1, 1))
    order = gf2k.agl_group(F).order()
    x7 = F.pow(F.x, 7)
    ok = B == {0, 1, F.x, F.x ^ 1} and not automata.is_minimal(d) and same and order == 56 and x7 == 1
    criterion(10, ok, f"(0,0)~(1,1) {same}, |AGL(1,8)| = {order}, x^7 = {x7}")
    assert ok


def test_criterion_11_affine_single_stabilizers(criterion):
    F = gf2k.Gf2kField(3)
    A, A2 = families.affine_pair_non_ubm(F)
    Gx = product.product_group(A, A2)
    agl = gf2k.agl_group(F)
    stabs = [Gx.row_stabilizer({q}) for q in range(8)] + [Gx.column_stabilizer({q}) for q in range(8)]
    all_agl = all(H == agl and H.order() == 56 and groups.is_primitive(H) for H in stabs)
    prim = boolean.single_stabilizers_primitive(A, A2, Gx=Gx)
    ubm = boolean.is_uniformly_boolean_minimal(A, A2)
    ok = all_agl and prim and not ubm
    criterion(11, ok, f"16 stabilizers equal AGL(1,8) {all_agl}; single-stabilizer condition {prim}; UBM {ubm}")
    assert ok


def test_criterion_12_affine_two_letter_pair(criterion):
    F = gf2k.Gf2kField(3)
    A, A2 = families.affine_pair_ubm(F)
    Gx = product.product_group(A, A2)
    T = gf2k.translation_subgroup(F)
    R01, C01 = Gx.row_stabilizer({0, 1}), Gx.column_stabilizer({0, 1})
    stab_ok = (R01 == T and C01 == T and T.order() == 8
               and not groups.is_primitive(R01) and not groups.is_primitive(C01))
    lemma = boolean.lemma_boolprim_conditions(A, A2, Gx=Gx)
    ubm = boolean.is_uniformly_boolean_minimal(A, A2)
    ok = ubm and stab_ok and lemma is boolean.BoolPrimVerdict.NEITHER
    criterion(12, ok, f"brute-force UBM {ubm} (254^2 pairs x 5 forms); pair stabilizers are the "
                      f"translations {stab_ok}; pair-stabilizer condition {lemma.value}")
    assert ok


def test_criterion_13_s5_degree_ten(criterion):
    A = suite.s5_dfa()
    Gx = product.product_group(A, suite.degree10_dfa())
    sim = product.similarity_class(A, suite.degree10_dfa(), Gx=Gx)
    intransitive = not Gx.is_transitive()
    B = suite.degree10_dfa(swap=True)
    Gy = product.product_group(A, B)
    sim2 = product.similarity_class(A, B, Gx=Gy)
    labels = product.corollary_dissimilar_case(Gy.proj_left())
    verdict = product.theorem_dissimilar_verdict(A, B, Gx=Gy).verdict
    ubm = boolean.is_uniformly_boolean_minimal(A, B)
    ok = (sim is product.Similarity.SIMILAR and intransitive and sim2 is not product.Similarity.SIMILAR
          and "sym_or_alt_not4" in labels and verdict is product.Verdict.UBM_GUARANTEED and ubm)
    criterion(13, ok, f"{sim.value}, product intransitive {intransitive}; swapped: {sim2.value}, "
                      f"guarantee {verdict.value}, brute-force UBM at 5x10 {ubm}")
    assert ok


def test_criterion_14_s5_in_s6_variants(criterion):
    A = suite.s5_dfa()
    parts = []
    for b in ("(1,2,3,4,5,6)", "(1,2,3,5,4,6)"):
        A2 = suite.degree6_dfa(b)
        Gx = product.product_group(A, A2)
        P = product.direct_product(A, A2)
        transitive = Gx.is_transitive()
        nonmin = not automata.is_minimal(P.with_finals(P.rectangle({0}, {0, 2, 4})))
        parts.append(f"b'={b}: |G'|={Gx.proj_right().order()}, "
                     f"{product.similarity_class(A, A2, Gx=Gx).value}, transitive {transitive}, "
                     f"{{1}}x{{1,3,5}} non-minimal {nonmin}, reproduces both {transitive and nonmin}")
    criterion(14, None, "; ".join(parts))


def test_criterion_15_compatible_forms(criterion):
    tables = boolean.all_boolean_functions()
    proper = [f for f in tables if f.is_proper()]
    rng = random.Random(15)
    failures = 0
    for _ in range(100):
        m, n = rng.randint(2, 6), rng.randint(2, 6)
        F = frozenset(rng.sample(range(m), rng.randint(1, m - 1)))
        F2 = frozenset(rng.sample(range(n), rng.randint(1, n - 1)))
        for op in proper:
            X = boolean.compatible_set(op, F, F2, m, n)
            hits = [f for f in boolean.ALL_FORMS if boolean.form_set(f, F, F2, m, n) == X]
            failures += len(hits) != 1
    ok = len(set(tables)) == 16 and len(proper) == 10 and failures == 0
    criterion(15, ok, f"{len(set(tables))} tables, {len(proper)} proper, {failures} classification failures")
    assert ok


def test_criterion_16_rectangles_and_pair_condition(criterion):
    rng = random.Random(16)
    mismatch = unsound = positives = 0
    for _ in range(100):
        A, A2 = randomgen.random_pair(rng, (2, 5))
        Gx = product.product_group(A, A2)
        r = boolean.prop_ns_check(A, A2, Gx=Gx, strict=False)
        mismatch += not r.consistent
        if boolean.lemma_boolprim_conditions(A, A2, Gx=Gx) is not boolean.BoolPrimVerdict.NEITHER:
            positives += 1
            unsound += not boolean.is_uniformly_boolean_minimal(A, A2)
    ok = mismatch == 0 and unsound == 0
    criterion(16, ok, f"100 pairs: {mismatch} rectangle mismatches, {positives} pair-condition positives, "
                      f"{unsound} of them not UBM")
    assert ok
