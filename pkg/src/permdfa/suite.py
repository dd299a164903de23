"""Reproduction suite for the worked examples and property sweeps.

Each check returns ``(verdict, detail)`` where verdict is True (pass), False
(fail) or None (reported only, nothing asserted).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

from . import automata, boolean, families, gf2k, groups, product, randomgen
from .automata import Dfa
from .perm import parse_cycles


@dataclass(frozen=True)
class Check:
    id: str
    claim: str
    run: Callable[[], tuple[bool | None, str]]


@dataclass(frozen=True)
class Outcome:
    id: str
    claim: str
    verdict: bool | None
    detail: str
    seconds: float

    @property
    def label(self) -> str:
        return {True: "PASS", False: "FAIL", None: "REPORT"}[self.verdict]


def _g(degree: int, *cycles: str) -> groups.PermGroup:
    return groups.PermGroup([parse_cycles(c, degree) for c in cycles], degree)


def _blocks1(blocks) -> set[frozenset[int]]:
    return {frozenset(x + 1 for x in b) for b in blocks}


def altdfa() -> Dfa:
    return Dfa.from_cycles(4, {"a": "(2,3,4)", "b": "(1,2)(3,4)"}, 0, {2, 3})


def cycdfa() -> Dfa:
    return Dfa.from_cycles(6, {"a": "(1,2,3,4,5,6)"}, 0, {0, 2, 4})


def symdiff2_pair() -> tuple[Dfa, Dfa]:
    A = Dfa.from_cycles(2, {"a": "(1,2)", "b": "(1,2)", "c": "()"}, 0, {0})
    A2 = Dfa.from_cycles(2, {"a": "(1,2)", "b": "()", "c": "(1,2)"}, 0, {0})
    return A, A2


def ubm_pair() -> tuple[Dfa, Dfa]:
    A = Dfa.from_cycles(2, {"a": "(1,2)", "b": "()"}, 0, {0})
    A2 = Dfa.from_cycles(3, {"a": "(1,2)", "b": "(1,2,3)"}, 0, {0})
    return A, A2


def s5_dfa() -> Dfa:
    return Dfa.from_cycles(5, {"a": "(3,4)", "b": "(1,2,3)(4,5)"}, 0, {0})


def degree10_dfa(swap: bool = False) -> Dfa:
    a, b = "(1,2)(6,8)(7,9)", "(2,6,4,5,3,7)(8,10,9)"
    if swap:
        a, b = b, a
    return Dfa.from_cycles(10, {"a": a, "b": b}, 0, {0})


def degree6_dfa(b: str) -> Dfa:
    return Dfa.from_cycles(6, {"a": "(1,2)(3,4)(5,6)", "b": b}, 0, {0})


def check_cyc_comp():
    G = _g(6, "(1,2,3,4,5,6)")
    found = _blocks1(groups.nontrivial_blocks(G))
    want = {frozenset(s) for s in ({1, 3, 5}, {2, 4, 6}, {1, 4}, {2, 5}, {3, 6})}
    ok = groups.is_transitive(G) and not groups.is_primitive(G) and found == want
    sizes = sorted({len(b) for b in found})
    return ok, f"block sizes {sizes}, {len(found)} blocks"


def check_cyc_prime(seed: int = 2):
    ok = groups.is_primitive(_g(5, "(1,2,3,4,5)"))
    rng = random.Random(seed)
    transitive = bad = 0
    for _ in range(50):
        p = rng.choice((2, 3, 5, 7))
        G = groups.PermGroup([randomgen.random_permutation(rng, p) for _ in range(rng.randint(1, 3))], p)
        if groups.is_transitive(G):
            transitive += 1
            bad += not groups.is_primitive(G)
    return ok and bad == 0, f"{transitive} of 50 random groups transitive, {bad} imprimitive"


def check_altdfa():
    d = altdfa()
    sc = automata.is_strongly_connected(d)
    bf = automata.is_uniformly_minimal_bruteforce(d)
    via = automata.is_uniformly_minimal_via_primitivity(d)
    cognates = sum(1 for _ in automata.nontrivial_subsets_gray(d.state_count))
    return sc and bf and via and cognates == 14, f"brute force {bf} over {cognates} cognates, primitivity {via}"


def check_cycdfa():
    d = cycdfa()
    part = automata.indistinguishability_partition(d)
    same = part.same_class(0, 2) and part.same_class(0, 4)
    return (not automata.is_minimal(d)) and same, f"classes {[sorted(x + 1 for x in c) for c in part.classes()]}"


def check_symdiff2():
    A, A2 = symdiff2_pair()
    maximal = boolean.has_maximal_boolean_complexity(A, A2)
    P = product.direct_product(A, A2)
    d = boolean.apply_boolean_op(A, A2, boolean.SYMMETRIC_DIFFERENCE)
    part = automata.indistinguishability_partition(d)
    same = part.same_class(P.index(0, 1), P.index(1, 0))
    sc = automata.state_complexity(d)
    return (not maximal) and same and sc < 4, f"maximal {maximal}, (1,2)~(2,1) {same}, xor complexity {sc}"


def check_ubm():
    A, A2 = ubm_pair()
    bf = boolean.is_uniformly_boolean_minimal(A, A2)
    try:
        v = product.theorem_dissimilar_verdict(A, A2)
        thm = v.verdict.value
    except ValueError as e:
        thm = f"not applicable: {e}"
    lemma = boolean.lemma_boolprim_conditions(A, A2).value
    ok = bf and thm == product.Verdict.UBM_GUARANTEED.value
    return ok, f"brute force {bf}; dissimilarity verdict {thm}; pair-stabilizer condition {lemma}"


def check_wit():
    bad = []
    for m in range(3, 6):
        for n in range(3, 6):
            for name, make in (("maslov", families.maslov_pair), ("yzs", families.yzs_pair)):
                A, A2 = make(m, n)
                for op, sc in boolean.boolean_complexities(A, A2).items():
                    if sc != m * n:
                        bad.append(f"{name}({m},{n}) {op}={sc}")
    return not bad, "all 180 complexities equal m*n" if not bad else "; ".join(bad[:5])


def check_one_final(seed: int = 8, count: int = 200):
    rng = random.Random(seed)
    disagree = acc = 0
    for _ in range(count):
        A, A2 = randomgen.random_pair(rng, (3, 6), accessible=True, final_count=1)
        r = boolean.theorem_1fstate_check(A, A2, strict=False)
        acc += r.accessible
        disagree += not r.consistent
    return disagree == 0, f"{count} pairs, {acc} accessible, {disagree} disagreements"


def check_accessibility(seed: int = 9, count: int = 200):
    rng = random.Random(seed)
    disagree = acc = 0
    for _ in range(count):
        A, A2 = randomgen.random_pair(rng, (1, 6))
        try:
            r = product.accessibility_report(A, A2)
        except product.InternalConsistencyError:
            disagree += 1
            continue
        acc += r.accessible
        disagree += product.check_prop_graph(A, A2) != r.accessible
    return disagree == 0, f"{count} pairs, {acc} accessible, {disagree} disagreements"


def check_affine8():
    F = gf2k.Gf2kField(3)
    A, A2 = families.affine_pair_non_ubm(F)
    P = product.direct_product(A, A2)
    B = gf2k.translation_block(F)
    notB = frozenset(range(F.size)) - B
    X = P.rectangle(B, B) | P.rectangle(notB, notB)
    d = P.with_finals(X)
    part = automata.indistinguishability_partition(d)
    same = part.same_class(P.index(0, 0), P.index(1, 1))
    order = gf2k.agl_group(F).order()
    x7 = F.pow(F.x, 7)
    ok = (not automata.is_minimal(d)) and same and order == 56 and x7 == 1 and B == frozenset({0, 1, 2, 3})
    return ok, f"(0,0)~(1,1) {same}, |AGL(1,8)| = {order}, x^7 = {x7}"


def check_affine_ns():
    F = gf2k.Gf2kField(3)
    A, A2 = families.affine_pair_non_ubm(F)
    Gx = product.product_group(A, A2)
    agl = gf2k.agl_group(F)
    stabs = list(Gx.all_row_stabilizers().values()) + list(Gx.all_column_stabilizers().values())
    all_agl = all(H == agl and groups.is_primitive(H) for H in stabs)
    ns = boolean.prop_ns_check(A, A2, Gx=Gx, strict=False)
    ubm = boolean.is_uniformly_boolean_minimal(A, A2)
    ok = all_agl and ns.condition_prim and ns.condition_min and not ubm
    return ok, f"16 stabilizers equal AGL(1,8): {all_agl}; rectangles minimal {ns.condition_min}; UBM {ubm}"


def check_affine_bp():
    F = gf2k.Gf2kField(3)
    A, A2 = families.affine_pair_ubm(F)
    Gx = product.product_group(A, A2)
    T = gf2k.translation_subgroup(F)
    R01 = Gx.row_stabilizer({0, 1})
    C01 = Gx.column_stabilizer({0, 1})
    stab_ok = R01 == T and C01 == T and not groups.is_primitive(R01) and not groups.is_primitive(C01)
    lemma = boolean.lemma_boolprim_conditions(A, A2, Gx=Gx)
    ubm = boolean.is_uniformly_boolean_minimal(A, A2)
    ok = ubm and stab_ok and lemma is boolean.BoolPrimVerdict.NEITHER
    return ok, f"UBM {ubm}; R_(0,1), C_(0,1) = translations {stab_ok}; pair-stabilizer condition {lemma.value}"


def check_similar_it():
    A, A2 = s5_dfa(), degree10_dfa()
    Gx = product.product_group(A, A2)
    sim = product.similarity_class(A, A2, Gx=Gx)
    intrans = not Gx.is_transitive()
    B = degree10_dfa(swap=True)
    Gy = product.product_group(A, B)
    sim2 = product.similarity_class(A, B, Gx=Gy)
    labels = product.corollary_dissimilar_case(Gy.proj_left())
    v = product.theorem_dissimilar_verdict(A, B, Gx=Gy)
    ubm = boolean.is_uniformly_boolean_minimal(A, B)
    ok = (sim is product.Similarity.SIMILAR and intrans and sim2 is not product.Similarity.SIMILAR
          and "sym_or_alt_not4" in labels and v.verdict is product.Verdict.UBM_GUARANTEED and ubm)
    return ok, (f"{sim.value}, product intransitive {intrans}; swapped: {sim2.value}, "
                f"verdict {v.verdict.value}, brute-force UBM {ubm}")


def check_similar():
    A = s5_dfa()
    parts = []
    for b in ("(1,2,3,4,5,6)", "(1,2,3,5,4,6)"):
        A2 = degree6_dfa(b)
        Gx = product.product_group(A, A2)
        P = product.direct_product(A, A2)
        trans = Gx.is_transitive()
        nonmin = not automata.is_minimal(P.with_finals(P.rectangle({0}, {0, 2, 4})))
        sim = product.similarity_class(A, A2, Gx=Gx).value
        both = trans and nonmin
        parts.append(f"b'={b}: |G'|={Gx.proj_right().order()}, {sim}, transitive {trans}, "
                     f"{{1}}x{{1,3,5}} non-minimal {nonmin}, reproduces both {both}")
    return None, "; ".join(parts)


def check_compatible(seed: int = 15, trials: int = 100):
    tables = boolean.all_boolean_functions()
    proper = [f for f in tables if f.is_proper()]
    rng = random.Random(seed)
    failures = 0
    for _ in range(trials):
        m, n = rng.randint(2, 6), rng.randint(2, 6)
        F = frozenset(rng.sample(range(m), rng.randint(1, m - 1)))
        F2 = frozenset(rng.sample(range(n), rng.randint(1, n - 1)))
        for op in proper:
            X = boolean.compatible_set(op, F, F2, m, n)
            hits = [f for f in boolean.ALL_FORMS if boolean.form_set(f, F, F2, m, n) == X]
            failures += len(hits) != 1
    ok = len(set(tables)) == 16 and len(proper) == 10 and failures == 0
    return ok, f"{len(set(tables))} tables, {len(proper)} proper, {failures} classification failures"


def check_rectangles(seed: int = 16, count: int = 100):
    rng = random.Random(seed)
    mismatch = unsound = positives = 0
    for _ in range(count):
        A, A2 = randomgen.random_pair(rng, (2, 5))
        Gx = product.product_group(A, A2)
        r = boolean.prop_ns_check(A, A2, Gx=Gx, strict=False)
        mismatch += not r.consistent
        if boolean.lemma_boolprim_conditions(A, A2, Gx=Gx) is not boolean.BoolPrimVerdict.NEITHER:
            positives += 1
            unsound += not boolean.is_uniformly_boolean_minimal(A, A2)
    return mismatch == 0 and unsound == 0, (
        f"{count} pairs: {mismatch} rectangle mismatches, {positives} pair-stabilizer positives, "
        f"{unsound} of them not UBM")


CHECKS = [
    Check("cyc-comp", "cyclic group of degree 6: exactly five non-trivial blocks", check_cyc_comp),
    Check("cyc-prime", "transitive groups of prime degree are primitive", check_cyc_prime),
    Check("altdfa", "A4 DFA uniformly minimal by both routes", check_altdfa),
    Check("cycdfa", "6-cycle DFA with finals {1,3,5} is not minimal", check_cycdfa),
    Check("symdiff2", "2x2 pair fails maximal boolean complexity", check_symdiff2),
    Check("ubm", "2x3 pair UBM by brute force and by the dissimilarity guarantee", check_ubm),
    Check("wit", "Maslov and YZS pairs reach m*n for all proper operations", check_wit),
    Check("one-final", "one final state: accessibility iff maximal complexity (200 pairs)", check_one_final),
    Check("accessibility", "four accessibility conditions and graph condition agree (200 pairs)",
          check_accessibility),
    Check("affine8", "k=3 affine pair: (0,0)~(1,1), |AGL(1,8)|=56, x^7=1", check_affine8),
    Check("affine-ns", "k=3 affine pair: all single stabilizers AGL(1,8), not UBM", check_affine_ns),
    Check("affine-bp", "k=3 two-letter affine pair UBM, pair stabilizers imprimitive", check_affine_bp),
    Check("similar-it", "S5 with degree-10 image: similar; swapped letters certified UBM", check_similar_it),
    Check("similar", "S5 in S6: which right generator reproduces the stated facts", check_similar),
    Check("compatible", "16 tables, 10 proper, each compatible set has one form", check_compatible),
    Check("rectangles", "stabilizer primitivity iff rectangles minimal; pair condition sound (100 pairs)",
          check_rectangles),
]


def run_suite(only: set[str] | None = None) -> list[Outcome]:
    out = []
    for c in CHECKS:
        if only and c.id not in only:
            continue
        t = time.perf_counter()
        try:
            verdict, detail = c.run()
        except Exception as e:  # a crash is a failed row, not a crashed suite
            verdict, detail = False, f"error: {type(e).__name__}: {e}"
        out.append(Outcome(c.id, c.claim, verdict, detail, time.perf_counter() - t))
    return out


def render_table(outcomes: list[Outcome], timings: bool = False) -> str:
    lines = []
    for o in outcomes:
        row = f"{o.label:<6} {o.id:<14} {o.claim}"
        if timings:
            row += f"  [{o.seconds:.2f}s]"
        lines.append(row)
        lines.append(f"       {'':<14} {o.detail}")
    failed = sum(o.verdict is False for o in outcomes)
    lines.append(f"{len(outcomes)} checks, {failed} failed")
    return "\n".join(lines) + "\n"
