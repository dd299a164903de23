import random

import pytest

from permdfa import randomgen
from permdfa.dfafile import DfaFileError, format_dfa_file, parse_dfa_file, read_dfa, write_dfa
from permdfa.perm import parse_cycles

ALTDFA = """\
# A4 acting on four states
states: 4
alphabet: a b
initial: 1
final: 3 4
trans a: 1 3 4 2
trans b: 2 1 4 3
"""


def test_altdfa_file():
    d = parse_dfa_file(ALTDFA)
    assert d.state_count == 4
    assert d.finals == {2, 3}
    assert d.delta["a"] == parse_cycles("(2,3,4)", 4)
    assert d.delta["b"] == parse_cycles("(1,2)(3,4)", 4)


def test_cycle_notation_rows():
    text = ALTDFA.replace("trans a: 1 3 4 2", "trans a: (2,3,4)").replace("trans b: 2 1 4 3", "trans b: ()")
    d = parse_dfa_file(text)
    assert d.delta["a"] == parse_cycles("(2,3,4)", 4)
    assert d.delta["b"].is_identity()


def test_canonical_round_trip():
    d = parse_dfa_file(ALTDFA.replace("final: 3 4", "final: 4 3"))
    text = format_dfa_file(d)
    assert "final: 3 4" in text
    assert parse_dfa_file(text) == d
    assert format_dfa_file(parse_dfa_file(text)) == text


def test_random_round_trips(tmp_path):
    rng = random.Random(5)
    for i in range(30):
        d = randomgen.random_permutation_dfa(rng, rng.randint(1, 8), rng.randint(1, 3))
        p = tmp_path / f"d{i}.dfa"
        write_dfa(p, d, "random")
        assert read_dfa(p) == d


def test_empty_final_line():
    d = parse_dfa_file(ALTDFA.replace("final: 3 4", "final:"))
    assert d.finals == frozenset()
    assert "final:\n" in format_dfa_file(d)


@pytest.mark.parametrize("text, line, fragment", [
    (ALTDFA.replace("trans b: 2 1 4 3\n", ""), None, "no 'trans' row"),
    (ALTDFA.replace("final: 3 4", "final: 3 5"), 5, "out of range"),
    (ALTDFA.replace("initial: 1", "initial: 0"), 4, "out of range"),
    (ALTDFA.replace("trans a: 1 3 4 2", "trans a: 1 3 4"), 6, "needs 4 images"),
    (ALTDFA.replace("trans a: 1 3 4 2", "trans c: 1 3 4 2"), 6, "not in alphabet"),
    (ALTDFA.replace("trans a: 1 3 4 2", "trans a: (2,3"), 6, "expected"),
    (ALTDFA.replace("trans a: 1 3 4 2", "trans a: (2,5)"), 6, "not in 1..4"),
    (ALTDFA.replace("states: 4", "states: four"), 2, "integers"),
    (ALTDFA.replace("alphabet: a b", "alphabet: a a"), 3, "repeated"),
    (ALTDFA.replace("trans b: 2 1 4 3", "trans a: 2 1 4 3"), 7, "second row"),
    ("states: 2\n", None, "missing"),
])
def test_errors(text, line, fragment):
    with pytest.raises(DfaFileError) as e:
        parse_dfa_file(text)
    assert e.value.line == line
    assert fragment in str(e.value)


def test_transformation_rows_allowed():
    d = parse_dfa_file(ALTDFA.replace("trans b: 2 1 4 3", "trans b: 1 1 1 1"))
    assert not d.delta["b"].is_permutation()
