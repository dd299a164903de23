"""Line-oriented text format for DFAs.

    # comment
    states: 4
    alphabet: a b
    initial: 1
    final: 3 4
    trans a: 1 3 4 2
    trans b: 2 1 4 3

All state numbers are 1-based.  A ``trans`` row may also be written in cycle
notation, e.g. ``trans a: (2,3,4)``.
"""

from __future__ import annotations

import re

from .automata import Dfa
from .perm import CycleParseError, Transformation, parse_cycles


class DfaFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


_HEADERS = ("states", "alphabet", "initial", "final")
_TRANS = re.compile(r"trans\s+(\S+)\s*:(.*)$")
_LETTER = re.compile(r"[^\s:#]+")


def _ints(text: str, lineno: int) -> list[int]:
    try:
        return [int(t) for t in text.split()]
    except ValueError:
        raise DfaFileError(f"expected integers, got {text.strip()!r}", lineno) from None


def parse_dfa_file(text: str) -> Dfa:
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))

    values = {}
    for key, (lineno, body) in zip(_HEADERS, lines):
        head, sep, rest = body.partition(":")
        if not sep or head.strip() != key:
            raise DfaFileError(f"expected '{key}: ...'", lineno)
        values[key] = (lineno, rest.strip())
    for key in _HEADERS:
        if key not in values:
            raise DfaFileError(f"missing '{key}:' line")

    lineno, rest = values["states"]
    n = _ints(rest, lineno)
    if len(n) != 1 or n[0] < 1:
        raise DfaFileError("states must be a single positive integer", lineno)
    n = n[0]

    lineno, rest = values["alphabet"]
    alphabet = tuple(rest.split())
    if not alphabet:
        raise DfaFileError("empty alphabet", lineno)
    for a in alphabet:
        if not _LETTER.fullmatch(a):
            raise DfaFileError(f"bad letter {a!r}", lineno)
    if len(set(alphabet)) != len(alphabet):
        raise DfaFileError("repeated letter in alphabet", lineno)

    lineno, rest = values["initial"]
    init = _ints(rest, lineno)
    if len(init) != 1:
        raise DfaFileError("initial must be a single state", lineno)
    if not 1 <= init[0] <= n:
        raise DfaFileError(f"initial state {init[0]} out of range 1..{n}", lineno)

    lineno, rest = values["final"]
    finals = _ints(rest, lineno)
    for q in finals:
        if not 1 <= q <= n:
            raise DfaFileError(f"final state {q} out of range 1..{n}", lineno)

    delta = {}
    for lineno, body in lines[len(_HEADERS):]:
        m = _TRANS.match(body)
        if not m:
            raise DfaFileError(f"expected 'trans <letter>: ...', got {body!r}", lineno)
        letter, rest = m.group(1), m.group(2).strip()
        if letter not in alphabet:
            raise DfaFileError(f"letter {letter!r} not in alphabet", lineno)
        if letter in delta:
            raise DfaFileError(f"second row for letter {letter!r}", lineno)
        if rest.startswith("("):
            try:
                delta[letter] = parse_cycles(rest, n)
            except CycleParseError as e:
                raise DfaFileError(str(e), lineno) from None
            continue
        images = _ints(rest, lineno)
        if len(images) != n:
            raise DfaFileError(f"letter {letter!r} needs {n} images, got {len(images)}", lineno)
        for v in images:
            if not 1 <= v <= n:
                raise DfaFileError(f"image {v} out of range 1..{n}", lineno)
        delta[letter] = Transformation(v - 1 for v in images)
    missing = [a for a in alphabet if a not in delta]
    if missing:
        raise DfaFileError(f"no 'trans' row for letter(s) {' '.join(missing)}")
    return Dfa(n, alphabet, delta, init[0] - 1, frozenset(q - 1 for q in finals))


def format_dfa_file(d: Dfa, comment: str | None = None) -> str:
    """Canonical text: sorted finals, alphabet in declaration order, image lists."""
    out = []
    if comment:
        out += [f"# {line}" for line in comment.splitlines()]
    out.append(f"states: {d.state_count}")
    out.append("alphabet: " + " ".join(d.alphabet))
    out.append(f"initial: {d.initial + 1}")
    out.append(("final: " + " ".join(str(q + 1) for q in sorted(d.finals))).rstrip())
    for a in d.alphabet:
        out.append(f"trans {a}: " + " ".join(str(v) for v in d.delta[a].one_based()))
    return "\n".join(out) + "\n"


def read_dfa(path) -> Dfa:
    with open(path, encoding="utf-8") as f:
        return parse_dfa_file(f.read())


def write_dfa(path, d: Dfa, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(format_dfa_file(d, comment))
