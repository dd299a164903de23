import pytest
from hypothesis import given, strategies as st

from permdfa.perm import (
    CycleSyntaxError, NotAPermutationError, Permutation, PointOutOfRangeError, RepeatedPointError,
    Transformation, format_cycles, parse_cycles,
)
from oracles import sym_group

from sympy.combinatorics import Permutation as SymPerm


@st.composite
def perms(draw, max_degree=9):
    n = draw(st.integers(1, max_degree))
    return Permutation(draw(st.permutations(range(n))))


def test_parse_examples():
    assert parse_cycles("(1,2)(3,4)", 4).images == (1, 0, 3, 2)
    assert parse_cycles("(2,3,4)", 4).images == (0, 2, 3, 1)
    assert parse_cycles("()", 3).is_identity()
    assert parse_cycles("(1)", 2).is_identity()


def test_parse_errors_are_distinct():
    with pytest.raises(CycleSyntaxError):
        parse_cycles("(1,2", 3)
    with pytest.raises(CycleSyntaxError):
        parse_cycles("1,2)", 3)
    with pytest.raises(CycleSyntaxError):
        parse_cycles("(1,,2)", 3)
    with pytest.raises(CycleSyntaxError):
        parse_cycles("", 3)
    with pytest.raises(PointOutOfRangeError):
        parse_cycles("(1,4)", 3)
    with pytest.raises(PointOutOfRangeError):
        parse_cycles("(0,1)", 3)
    with pytest.raises(RepeatedPointError):
        parse_cycles("(1,2)(2,3)", 3)
    with pytest.raises(RepeatedPointError):
        parse_cycles("(1,2,1)", 3)


def test_canonical_printing():
    p = parse_cycles("(4,3)(2,6,5)", 6)
    assert str(p) == "(2,6,5)(3,4)"
    assert str(parse_cycles("()", 4)) == "()"
    assert str(parse_cycles("(3,1,2)", 3)) == "(1,2,3)"


def test_composition_is_left_to_right():
    p = parse_cycles("(1,2)", 3)
    q = parse_cycles("(2,3)", 3)
    # 1 -> 2 under p, then 2 -> 3 under q
    assert (p * q)(0) == 2
    assert str(p * q) == "(1,3,2)"
    assert str(q * p) == "(1,2,3)"


def test_transformation_refinement():
    t = Transformation([0, 0, 1])
    assert not t.is_permutation()
    with pytest.raises(NotAPermutationError):
        Permutation([0, 0, 1])
    assert isinstance(t * Transformation.identity(3), Transformation)
    p = parse_cycles("(1,2,3)", 3)
    assert isinstance(p * p, Permutation)
    assert (t * p).images == (1, 1, 2)
    with pytest.raises(ValueError):
        Transformation([0, 3])


@given(perms())
def test_round_trip(p):
    assert parse_cycles(format_cycles(p), p.degree) == p


@given(perms())
def test_inverse_and_order(p):
    assert (p * p.inverse()).is_identity()
    assert (p ** p.order()).is_identity()
    assert all(not (p ** k).is_identity() for k in range(1, p.order()))
    assert p ** -1 == p.inverse()


@given(perms(), st.data())
def test_composition_matches_sympy(p, data):
    q = Permutation(data.draw(st.permutations(range(p.degree))))
    # sympy also composes left to right: (p*q)(i) = q(p(i))
    assert list((p * q).images) == (SymPerm(list(p.images)) * SymPerm(list(q.images))).array_form


@given(perms())
def test_parity_matches_sympy(p):
    assert p.parity() == SymPerm(list(p.images)).parity()
    assert sym_group([p], p.degree).order() == p.order()
