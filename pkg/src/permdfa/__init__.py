"""Permutation DFAs, their transition groups, direct products and boolean minimality."""

from .automata import (
    Dfa, SizeLimitError, StatePartition, cognate, indistinguishability_partition, is_accessible,
    is_minimal, is_permutation_dfa, is_strongly_connected, is_uniformly_minimal_bruteforce,
    is_uniformly_minimal_via_primitivity, minimality_via_saturation, reachable_states,
    state_complexity, transition_group,
)
from .boolean import (
    BooleanFunction, CompatibleForm, FormTag, all_boolean_functions, all_proper_boolean_functions,
    apply_boolean_op, classify_compatible, compatible_set, has_maximal_boolean_complexity,
    is_uniformly_boolean_minimal, lemma_boolprim_conditions, prop_ns_check, theorem_1fstate_check,
)
from .dfafile import format_dfa_file, parse_dfa_file
from .gf2k import AffineMap, Gf2kField, affine_permutation, agl_group, translation_block
from .groups import (
    CapExceededError, PermGroup, block_systems, classify_sym_or_alt, enumerate_group, is_abelian,
    is_k_transitive, is_primitive, is_simple, is_transitive, minimal_block_containing,
    minimal_normal_subgroups, normal_closure, nontrivial_blocks, orbits, setwise_stabilizer, socle,
)
from .perm import Permutation, Transformation, format_cycles, parse_cycles
from .product import (
    ProductDfa, ProductGroup, Similarity, Verdict, accessibility_report, check_prop_graph,
    corollary_dissimilar_case, direct_product, product_group, similarity_class,
    theorem_dissimilar_verdict,
)

__version__ = "0.1.0"
