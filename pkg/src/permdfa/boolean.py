"""Binary boolean operations on DFA languages through product final sets."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

from .automata import (
    Dfa, SizeLimitError, batch_minimal, is_minimal, mask_to_set, masks_to_array, nontrivial_subsets_gray,
    require_permutation_dfa, state_complexity,
)
from .groups import DEFAULT_ELEMENT_CAP, is_primitive
from .product import (
    InternalConsistencyError, ProductGroup, accessibility_report, direct_product, product_group,
)

UBM_SUBSET_LIMIT = 10


class ImproperOperationError(ValueError):
    pass


class NonMinimalInputError(ValueError):
    pass


@dataclass(frozen=True)
class BooleanFunction:
    """A map {0,1}^2 -> {0,1}; ``table[2*u + v]`` is the value at (u, v)."""

    table: tuple[int, int, int, int]
    name: str = ""

    def __post_init__(self):
        t = tuple(int(b) for b in self.table)
        if len(t) != 4 or any(b not in (0, 1) for b in t):
            raise ValueError("a boolean function needs four 0/1 table entries")
        object.__setattr__(self, "table", t)

    def __call__(self, u: int, v: int) -> int:
        return self.table[2 * int(u) + int(v)]

    def __eq__(self, other):
        return isinstance(other, BooleanFunction) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    @classmethod
    def from_index(cls, i: int) -> "BooleanFunction":
        t = tuple((i >> (3 - j)) & 1 for j in range(4))
        return cls(t, NAMES.get(t, ""))

    def is_proper(self) -> bool:
        depends_on_v = any(self(u, 0) != self(u, 1) for u in (0, 1))
        depends_on_u = any(self(0, v) != self(1, v) for v in (0, 1))
        return depends_on_u and depends_on_v

    def negate(self) -> "BooleanFunction":
        t = tuple(1 - b for b in self.table)
        return BooleanFunction(t, NAMES.get(t, ""))

    def __str__(self):
        return self.name or "".join(map(str, self.table))


NAMES = {
    (0, 0, 0, 1): "intersection",
    (0, 1, 1, 1): "union",
    (0, 0, 1, 0): "difference",
    (0, 1, 0, 0): "reverse_difference",
    (0, 1, 1, 0): "symmetric_difference",
    (1, 1, 1, 0): "not_intersection",
    (1, 0, 0, 0): "not_union",
    (1, 1, 0, 1): "not_difference",
    (1, 0, 1, 1): "not_reverse_difference",
    (1, 0, 0, 1): "not_symmetric_difference",
}

INTERSECTION = BooleanFunction((0, 0, 0, 1), "intersection")
UNION = BooleanFunction((0, 1, 1, 1), "union")
DIFFERENCE = BooleanFunction((0, 0, 1, 0), "difference")
REVERSE_DIFFERENCE = BooleanFunction((0, 1, 0, 0), "reverse_difference")
SYMMETRIC_DIFFERENCE = BooleanFunction((0, 1, 1, 0), "symmetric_difference")


def all_boolean_functions() -> list[BooleanFunction]:
    return [BooleanFunction.from_index(i) for i in range(16)]


def all_proper_boolean_functions() -> list[BooleanFunction]:
    return [f for f in all_boolean_functions() if f.is_proper()]


class FormTag(str, Enum):
    F_F = "FxF"
    F_NOTF = "FxNotF"
    NOTF_F = "NotFxF"
    NOTF_NOTF = "NotFxNotF"
    SYMDIFF = "SymDiff"


@dataclass(frozen=True)
class CompatibleForm:
    tag: FormTag
    complemented: bool = False

    def __str__(self):
        return f"ComplementOf({self.tag.value})" if self.complemented else self.tag.value


def _check_nontrivial(F, size, side):
    if not F or len(F) >= size or any(not 0 <= q < size for q in F):
        raise ValueError(f"{side} final set must be a non-trivial subset of 0..{size - 1}")


def _combine(op: BooleanFunction, F, F2, m: int, n: int) -> frozenset[int]:
    return frozenset(q * n + r for q in range(m) for r in range(n) if op(q in F, r in F2))


def compatible_set(op: BooleanFunction, F: Iterable[int], F2: Iterable[int], m: int, n: int) -> frozenset[int]:
    """Packed product states (q, q') with op(q in F, q' in F') = 1."""
    if not op.is_proper():
        raise ImproperOperationError(f"{op} does not depend on both arguments")
    F, F2 = frozenset(F), frozenset(F2)
    _check_nontrivial(F, m, "left")
    _check_nontrivial(F2, n, "right")
    return _combine(op, F, F2, m, n)


def form_set(form: CompatibleForm, F: Iterable[int], F2: Iterable[int], m: int, n: int) -> frozenset[int]:
    F, F2 = frozenset(F), frozenset(F2)
    rows = {
        FormTag.F_F: (F, F2),
        FormTag.F_NOTF: (F, frozenset(range(n)) - F2),
        FormTag.NOTF_F: (frozenset(range(m)) - F, F2),
        FormTag.NOTF_NOTF: (frozenset(range(m)) - F, frozenset(range(n)) - F2),
    }
    if form.tag is FormTag.SYMDIFF:
        X = frozenset(q * n + r for q in range(m) for r in range(n) if (q in F) != (r in F2))
    else:
        S, S2 = rows[form.tag]
        X = frozenset(q * n + r for q in S for r in S2)
    return frozenset(range(m * n)) - X if form.complemented else X


ALL_FORMS = tuple(CompatibleForm(t, c) for c in (False, True) for t in FormTag)


def classify_compatible(X: Iterable[int], F: Iterable[int], F2: Iterable[int], m: int, n: int) -> CompatibleForm:
    X = frozenset(X)
    F, F2 = frozenset(F), frozenset(F2)
    _check_nontrivial(F, m, "left")
    _check_nontrivial(F2, n, "right")
    hits = [f for f in ALL_FORMS if form_set(f, F, F2, m, n) == X]
    if len(hits) != 1:
        raise ValueError(f"set matches {len(hits)} compatible forms, expected exactly one")
    return hits[0]


def apply_boolean_op(A: Dfa, A2: Dfa, op: BooleanFunction) -> Dfa:
    """Packed product DFA recognising op applied to the two languages."""
    P = direct_product(A, A2)
    m, n = P.shape
    return P.with_finals(_combine(op, A.finals, A2.finals, m, n))


def boolean_complexities(A: Dfa, A2: Dfa) -> dict[str, int]:
    """State complexity of the result for each of the 10 proper operations."""
    return {str(op): state_complexity(apply_boolean_op(A, A2, op)) for op in all_proper_boolean_functions()}


def has_maximal_boolean_complexity(A: Dfa, A2: Dfa) -> bool:
    if not is_minimal(A) or not is_minimal(A2):
        raise NonMinimalInputError("both DFAs must be minimal")
    target = A.state_count * A2.state_count
    return all(v == target for v in boolean_complexities(A, A2).values())




def _check_limit(A: Dfa, A2: Dfa, limit: int):
    if A.state_count > limit or A2.state_count > limit:
        raise SizeLimitError(
            f"{A.state_count}x{A2.state_count} product exceeds the brute-force limit of {limit} per side")


def _pair_blocks(n_left: int, n_right: int, per_batch: int):
    """Split the (left, right) index grid into row-major blocks of bounded size."""
    if n_right >= per_batch:
        for i in range(n_left):
            for j in range(0, n_right, per_batch):
                yield i, i + 1, j, min(j + per_batch, n_right)
    else:
        rows = per_batch // n_right
        for i in range(0, n_left, rows):
            yield i, min(i + rows, n_left), 0, n_right


_FORMS = (
    (FormTag.F_F, lambda a, b: a & b),
    (FormTag.F_NOTF, lambda a, b: a & ~b),
    (FormTag.NOTF_F, lambda a, b: ~a & b),
    (FormTag.NOTF_NOTF, lambda a, b: ~a & ~b),
    (FormTag.SYMDIFF, lambda a, b: a ^ b),
)


def ubm_counterexample(A: Dfa, A2: Dfa, limit: int = UBM_SUBSET_LIMIT,
                       chunk: int = 1 << 13) -> tuple[frozenset[int], frozenset[int], FormTag] | None:
    """First (S, S', form) whose product cognate is not minimal, or None.

    Only the five uncomplemented forms are swept; a DFA is minimal with final
    set X exactly when it is minimal with the complement of X.  At most
    ``chunk`` cognates are refined at once.
    """
    _check_limit(A, A2, limit)
    P = direct_product(A, A2).dfa
    m, n = A.state_count, A2.state_count
    Ms = list(nontrivial_subsets_gray(m))
    Ns = list(nontrivial_subsets_gray(n))
    if not Ms or not Ns:
        return None
    left = masks_to_array(Ms, m)
    right = masks_to_array(Ns, n)
    k = len(_FORMS)
    for i0, i1, j0, j1 in _pair_blocks(len(Ms), len(Ns), max(1, chunk // k)):
        L = left[i0:i1][:, None, :, None]
        R = right[j0:j1][None, :, None, :]
        batch = np.stack([f(L, R) for _, f in _FORMS], axis=2)  # (ms, ns, forms, m, n)
        ok = batch_minimal(P, batch.reshape(-1, m * n))
        if not ok.all():
            a, rest = divmod(int(np.flatnonzero(~ok)[0]), (j1 - j0) * k)
            b, f = divmod(rest, k)
            return mask_to_set(Ms[i0 + a]), mask_to_set(Ns[j0 + b]), _FORMS[f][0]
    return None


def is_uniformly_boolean_minimal(A: Dfa, A2: Dfa, limit: int = UBM_SUBSET_LIMIT) -> bool:
    return ubm_counterexample(A, A2, limit) is None


def rectangles_all_minimal(A: Dfa, A2: Dfa, limit: int = UBM_SUBSET_LIMIT, chunk: int = 1 << 14) -> bool:
    """Brute force: the product is minimal for every rectangle S x S'."""
    _check_limit(A, A2, limit)
    P = direct_product(A, A2).dfa
    m, n = A.state_count, A2.state_count
    Ms = list(nontrivial_subsets_gray(m))
    Ns = list(nontrivial_subsets_gray(n))
    if not Ms or not Ns:
        return True
    left = masks_to_array(Ms, m)
    right = masks_to_array(Ns, n)
    for i0, i1, j0, j1 in _pair_blocks(len(Ms), len(Ns), chunk):
        flat = (left[i0:i1][:, None, :, None] & right[j0:j1][None, :, None, :]).reshape(-1, m * n)
        if not batch_minimal(P, flat).all():
            return False
    return True


def _one_final_normal_form(A: Dfa) -> Dfa:
    n = A.state_count
    if len(A.finals) == 1:
        return A
    if len(A.finals) == n - 1:
        return A.complement()
    raise ValueError("expected exactly one final state or exactly one non-final state")


@dataclass(frozen=True)
class OneFinalCheck:
    accessible: bool
    maximal: bool
    consistent: bool


def theorem_1fstate_check(A: Dfa, A2: Dfa, strict: bool = True) -> OneFinalCheck:
    """Accessibility of the product versus maximal boolean complexity.

    For permutation DFAs with one final state (or one non-final state), at
    least one of them with three or more states, the two agree.
    """
    require_permutation_dfa(A)
    require_permutation_dfa(A2)
    if max(A.state_count, A2.state_count) < 3:
        raise ValueError("at least one DFA needs three or more states")
    B, B2 = _one_final_normal_form(A), _one_final_normal_form(A2)
    if not is_minimal(B) or not is_minimal(B2):
        raise NonMinimalInputError("both DFAs must be minimal")
    accessible = accessibility_report(B, B2).accessible
    maximal = has_maximal_boolean_complexity(B, B2)
    if strict and accessible != maximal:
        raise InternalConsistencyError(f"accessible={accessible} but maximal={maximal}")
    return OneFinalCheck(accessible, maximal, accessible == maximal)


class BoolPrimVerdict(str, Enum):
    ROWWISE = "holds_rowwise"
    COLWISE = "holds_colwise"
    NEITHER = "neither"


def lemma_boolprim_conditions(A: Dfa, A2: Dfa, cap: int = DEFAULT_ELEMENT_CAP,
                              Gx: ProductGroup | None = None) -> BoolPrimVerdict:
    """Sufficient condition for uniform boolean minimality.

    Rowwise: |Q| >= 3, G primitive and every R_{p,q} pi' primitive (p = q
    allowed).  Colwise is the mirror image.
    """
    Gx = Gx or product_group(A, A2, cap)
    if A.state_count >= 3 and is_primitive(Gx.proj_left()):
        if all(is_primitive(H) for H in Gx.all_row_stabilizers(pairs=True).values()):
            return BoolPrimVerdict.ROWWISE
    if A2.state_count >= 3 and is_primitive(Gx.proj_right()):
        if all(is_primitive(H) for H in Gx.all_column_stabilizers(pairs=True).values()):
            return BoolPrimVerdict.COLWISE
    return BoolPrimVerdict.NEITHER


@dataclass(frozen=True)
class RectangleCheck:
    condition_prim: bool
    condition_min: bool
    consistent: bool


def single_stabilizers_primitive(A: Dfa, A2: Dfa, cap: int = DEFAULT_ELEMENT_CAP,
                                 Gx: ProductGroup | None = None) -> bool:
    Gx = Gx or product_group(A, A2, cap)
    return (all(is_primitive(H) for H in Gx.all_row_stabilizers().values())
            and all(is_primitive(H) for H in Gx.all_column_stabilizers().values()))


def prop_ns_check(A: Dfa, A2: Dfa, cap: int = DEFAULT_ELEMENT_CAP, limit: int = UBM_SUBSET_LIMIT,
                  strict: bool = True, Gx: ProductGroup | None = None) -> RectangleCheck:
    """All single stabilizers primitive versus every rectangle cognate minimal."""
    require_permutation_dfa(A)
    require_permutation_dfa(A2)
    if A.state_count < 2 or A2.state_count < 2:
        raise ValueError("both DFAs need at least two states")
    prim = single_stabilizers_primitive(A, A2, cap, Gx)
    mins = rectangles_all_minimal(A, A2, limit)
    if strict and prim != mins:
        raise InternalConsistencyError(f"stabilizer condition {prim} but rectangle sweep {mins}")
    return RectangleCheck(prim, mins, prim == mins)
