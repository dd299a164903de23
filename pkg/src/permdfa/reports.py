"""Plain-text and JSON reports for single DFAs and DFA pairs."""

from __future__ import annotations

import json
from typing import Any

from . import automata, groups
from .automata import Dfa
from .boolean import (
    UBM_SUBSET_LIMIT, boolean_complexities, lemma_boolprim_conditions, single_stabilizers_primitive,
    ubm_counterexample,
)
from .groups import DEFAULT_ELEMENT_CAP
from .product import (
    SimilarPairError, accessibility_report, check_prop_graph, corollary_dissimilar_case,
    direct_product, product_group, similarity_class, theorem_dissimilar_verdict,
)

Report = dict[str, Any]


def _set1(s) -> str:
    return "{" + ",".join(str(x + 1) for x in sorted(s)) + "}"


def _yes(b: bool) -> str:
    return "yes" if b else "no"


def analyze_dfa(d: Dfa, cap: int = DEFAULT_ELEMENT_CAP, limit: int = automata.UM_SUBSET_LIMIT) -> Report:
    r: Report = {
        "states": d.state_count,
        "alphabet": " ".join(d.alphabet),
        "initial": d.initial + 1,
        "final": _set1(d.finals),
        "accessible": _yes(automata.is_accessible(d)),
        "strongly connected": _yes(automata.is_strongly_connected(d)),
        "minimal": _yes(automata.is_minimal(d)),
        "state complexity": automata.state_complexity(d),
        "indistinguishability classes": " ".join(
            _set1(c) for c in automata.indistinguishability_partition(d).classes()),
        "permutation dfa": _yes(automata.is_permutation_dfa(d)),
    }
    prim = None
    if automata.is_permutation_dfa(d):
        G = automata.transition_group(d, cap)
        r["transition group order"] = G.order()
        trans = groups.is_transitive(G)
        r["transitive"] = _yes(trans)
        if not trans:
            r["orbits"] = " ".join(_set1(o) for o in groups.orbits(G))
        prim = groups.is_primitive(G)
        r["primitive"] = _yes(prim)
        if trans:
            systems = groups.block_systems(G)
            r["block systems"] = " | ".join(" ".join(_set1(b) for b in s) for s in systems) or "none"
            r["non-trivial blocks"] = " ".join(_set1(b) for b in groups.nontrivial_blocks(G)) or "none"
        kind = groups.classify_sym_or_alt(G)
        if kind:
            r["group type"] = kind
        if not automata.is_accessible(d):
            r["uniformly minimal"] = "no (not accessible)"
        elif prim:
            r["uniformly minimal"] = f"yes (primitive, order {G.order()})"
        else:
            r["uniformly minimal"] = f"no (imprimitive, order {G.order()})"
    if d.state_count <= limit:
        bf = automata.is_uniformly_minimal_bruteforce(d, limit)
        r["uniformly minimal (brute force)"] = f"{_yes(bf)} ({2 ** d.state_count - 2} cognates)"
        if prim is not None:
            via = prim and automata.is_accessible(d)
            r["methods agree"] = _yes(via == bf)
    else:
        r["uniformly minimal (brute force)"] = f"skipped ({d.state_count} states > limit {limit})"
    return r


def analyze_pair(A: Dfa, A2: Dfa, *, ubm: bool = False, boolean: bool = False,
                 cap: int = DEFAULT_ELEMENT_CAP, limit: int = UBM_SUBSET_LIMIT) -> Report:
    P = direct_product(A, A2)
    m, n = P.shape
    r: Report = {
        "left states": m,
        "right states": n,
        "alphabet": " ".join(A.alphabet),
        "product states": m * n,
        "product accessible": _yes(automata.is_accessible(P.dfa)),
    }
    if automata.is_permutation_dfa(A) and automata.is_permutation_dfa(A2):
        Gx = product_group(A, A2, cap)
        G, G2 = Gx.proj_left(), Gx.proj_right()
        r["left group order"] = G.order()
        r["right group order"] = G2.order()
        r["product group order"] = Gx.order()
        sim = similarity_class(A, A2, Gx=Gx)
        r["similarity"] = sim.value
        r["full row stabilizer order"] = Gx.full_row_stabilizer().order()
        r["full column stabilizer order"] = Gx.full_column_stabilizer().order()
        acc = accessibility_report(A, A2, Gx=Gx)
        for k, v in acc.conditions().items():
            r[f"accessibility: {k.replace('_', ' ')}"] = _yes(v)
        r["graph condition"] = _yes(check_prop_graph(A, A2))
        r["summary"] = f"{sim.value}; product {'accessible' if acc.accessible else 'inaccessible'}"
        rows = Gx.all_row_stabilizers()
        cols = Gx.all_column_stabilizers()
        r["row stabilizer orders"] = " ".join(str(rows[frozenset({q})].order()) for q in range(m))
        r["column stabilizer orders"] = " ".join(str(cols[frozenset({q})].order()) for q in range(n))
        r["single stabilizers primitive"] = _yes(single_stabilizers_primitive(A, A2, Gx=Gx))
        r["pair stabilizer condition"] = lemma_boolprim_conditions(A, A2, Gx=Gx).value
        try:
            v = theorem_dissimilar_verdict(A, A2, Gx=Gx)
            r["dissimilarity verdict"] = f"{v.verdict.value} ({v.reason})"
        except SimilarPairError:
            r["dissimilarity verdict"] = "not applicable (similar pair)"
        except ValueError as e:
            r["dissimilarity verdict"] = f"not applicable ({e})"
        r["left group classes"] = " ".join(sorted(corollary_dissimilar_case(G))) or "none"
        r["right group classes"] = " ".join(sorted(corollary_dissimilar_case(G2))) or "none"
    if boolean:
        for name, sc in boolean_complexities(A, A2).items():
            r[f"complexity {name}"] = sc
    if ubm:
        cex = ubm_counterexample(A, A2, limit)
        if cex is None:
            r["uniformly boolean minimal"] = "yes"
        else:
            S, S2, form = cex
            r["uniformly boolean minimal"] = f"no (S={_set1(S)}, S'={_set1(S2)}, form {form.value})"
    return r


def render_text(r: Report) -> str:
    return "".join(f"{k}: {v}\n" for k, v in r.items())


def render_json(r: Report) -> str:
    return json.dumps(r, indent=2) + "\n"
