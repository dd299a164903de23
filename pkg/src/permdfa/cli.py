"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 usage or input error,
3 refused because of the element cap or a brute-force size limit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import automata, boolean, families, gf2k, suite
from .automata import SizeLimitError
from .dfafile import DfaFileError, format_dfa_file, read_dfa
from .groups import DEFAULT_ELEMENT_CAP, CapExceededError
from .product import AlphabetMismatchError
from .reports import analyze_dfa, analyze_pair, render_json, render_text

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_REFUSED = 0, 1, 2, 3

FAMILIES = ("cyclic", "symmetric", "alternating", "maslov", "yzs", "affine-non-ubm", "affine-ubm")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permdfa", description="Permutation DFAs, products and boolean minimality.")
    p.add_argument("--element-cap", type=_positive, default=DEFAULT_ELEMENT_CAP,
                   help="maximum group size to enumerate (default %(default)s)")
    p.add_argument("--subset-limit", type=_positive, default=None,
                   help="maximum states per side for brute-force sweeps "
                        f"(default {automata.UM_SUBSET_LIMIT} for one DFA, {boolean.UBM_SUBSET_LIMIT} per side for pairs)")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report on one DFA")
    a.add_argument("path")
    a.add_argument("--json", action="store_true")

    pr = sub.add_parser("product", help="report on the direct product of two DFAs")
    pr.add_argument("left")
    pr.add_argument("right")
    pr.add_argument("--ubm", action="store_true", help="add the brute-force uniform boolean minimality verdict")
    pr.add_argument("--boolean", action="store_true", help="add state complexities for the 10 proper operations")
    pr.add_argument("--json", action="store_true")

    g = sub.add_parser("gen", help="write a DFA (or a pair) from a named family")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--k", type=int)
    g.add_argument("--out", default=".", help="output directory, or '-' for stdout (default: current directory)")

    s = sub.add_parser("paper-suite", help="run the example reproduction suite")
    s.add_argument("--only", help="comma-separated check ids")
    s.add_argument("--timings", action="store_true", help="append runtimes (output then varies between runs)")
    s.add_argument("--json", action="store_true")

    c = sub.add_parser("conjecture-affine-ubm", help="brute-force the two-letter affine pair for one k")
    c.add_argument("--k", type=int, required=True)
    return p


def _require(args, name: str, low: int) -> int:
    v = getattr(args, name)
    if v is None:
        raise UsageError(f"--{name} is required for family {args.family}")
    if v < low:
        raise UsageError(f"--{name} must be at least {low} for family {args.family}")
    return v


def _generate(args) -> list[tuple[str, automata.Dfa, str]]:
    fam = args.family
    if fam in ("cyclic", "symmetric", "alternating"):
        n = _require(args, "n", 3 if fam == "alternating" else 2)
        make = {"cyclic": families.cyclic_dfa, "symmetric": families.symmetric_dfa,
                "alternating": families.alternating_dfa}[fam]
        return [(f"{fam}-{n}.dfa", make(n), f"{fam} group DFA, {n} states")]
    if fam in ("maslov", "yzs"):
        m, n = _require(args, "m", 1), _require(args, "n", 1)
        left, right = (families.maslov_pair if fam == "maslov" else families.yzs_pair)(m, n)
        stem = f"{fam}-{m}-{n}"
    else:
        k = _require(args, "k", 1)
        if k > 16:
            raise UsageError("--k must be at most 16")
        F = gf2k.Gf2kField(k)
        left, right = (families.affine_pair_non_ubm if fam == "affine-non-ubm" else families.affine_pair_ubm)(F)
        stem = f"{fam}-{k}"
    return [(f"{stem}-left.dfa", left, f"{stem} left DFA"), (f"{stem}-right.dfa", right, f"{stem} right DFA")]


def cmd_gen(args, out) -> int:
    files = _generate(args)
    if args.out == "-":
        for name, d, comment in files:
            out.write(format_dfa_file(d, f"{name}: {comment}"))
        return EXIT_OK
    if not os.path.isdir(args.out):
        raise UsageError(f"output directory {args.out!r} does not exist")
    for name, d, comment in files:
        path = os.path.join(args.out, name)
        with open(path, "w", encoding="utf-8") as f:
            f.write(format_dfa_file(d, comment))
        out.write(f"wrote {path}\n")
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    d = read_dfa(args.path)
    limit = args.subset_limit or automata.UM_SUBSET_LIMIT
    r = analyze_dfa(d, cap=args.element_cap, limit=limit)
    out.write(render_json(r) if args.json else render_text(r))
    return EXIT_OK


def cmd_product(args, out) -> int:
    A, A2 = read_dfa(args.left), read_dfa(args.right)
    limit = args.subset_limit or boolean.UBM_SUBSET_LIMIT
    r = analyze_pair(A, A2, ubm=args.ubm, boolean=args.boolean, cap=args.element_cap, limit=limit)
    out.write(render_json(r) if args.json else render_text(r))
    return EXIT_OK


def cmd_paper_suite(args, out) -> int:
    only = None
    if args.only:
        only = {s.strip() for s in args.only.split(",") if s.strip()}
        unknown = only - {c.id for c in suite.CHECKS}
        if unknown:
            raise UsageError(f"unknown check id(s): {', '.join(sorted(unknown))}")
    outcomes = suite.run_suite(only)
    if args.json:
        rows = [{"id": o.id, "claim": o.claim, "verdict": o.label, "detail": o.detail}
                | ({"seconds": round(o.seconds, 3)} if args.timings else {}) for o in outcomes]
        out.write(json.dumps(rows, indent=2) + "\n")
    else:
        out.write(suite.render_table(outcomes, args.timings))
    return EXIT_FAILED if any(o.verdict is False for o in outcomes) else EXIT_OK


def cmd_conjecture(args, out) -> int:
    if not 1 <= args.k <= 16:
        raise UsageError("--k must be between 1 and 16")
    F = gf2k.Gf2kField(args.k)
    A, A2 = families.affine_pair_ubm(F)
    limit = args.subset_limit or boolean.UBM_SUBSET_LIMIT
    cex = boolean.ubm_counterexample(A, A2, limit)
    out.write(f"k: {args.k}\nstates per side: {F.size}\n")
    if cex is None:
        out.write("uniformly boolean minimal: yes\n")
    else:
        S, S2, form = cex
        fmt = lambda s: "{" + ",".join(F.format(x) for x in sorted(s)) + "}"
        out.write(f"uniformly boolean minimal: no (S={fmt(S)}, S'={fmt(S2)}, form {form.value})\n")
    return EXIT_OK


COMMANDS = {
    "analyze": cmd_analyze,
    "product": cmd_product,
    "gen": cmd_gen,
    "paper-suite": cmd_paper_suite,
    "conjecture-affine-ubm": cmd_conjecture,
}


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (CapExceededError, SizeLimitError) as e:
        print(f"refused: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except (UsageError, DfaFileError, AlphabetMismatchError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
