"""``posetshell`` command line: enumerate, draw and verify rook posets.

Exit codes: 0 when every check passes, 1 when a check finds a violation,
2 on usage errors (including size caps hit without ``--allow-large``).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Any, Callable

from . import covers as cv
from .embeddings import (
    eulerian_counterexample, phi, psi, transport_labeling, verify_isomorphism,
)
from .families import (
    involution_poset, partial_involution_poset, partial_involution_union_poset,
    permutation_poset, rook_poset, rook_union_poset,
)
from .labeling import decreasing_chain_mobius, label, verify_el
from .poset import FinitePoset, _fmt, is_eulerian, mobius, order_complex_facets, verify_shelling
from .rooks import (
    enumerate_all_partial_involutions, enumerate_all_rooks, enumerate_involutions,
    enumerate_partial_involutions, enumerate_permutations, enumerate_rooks,
    involution_count, rook_count_formula,
)

SCHEMA = "poset-shell/1"
POSETS = ("rooks", "partial-involutions", "involutions", "permutations")
CHECKS = ("el", "eulerian", "covers", "iso", "shelling", "mobius-cross")

ENUMERATE_CAP = 6
HASSE_CAP = {"rooks": 4, "partial-involutions": 5, "involutions": 6, "permutations": 5}
CHECK_CAP = {"el": 4, "shelling": 3, "mobius-cross": 4, "eulerian": 5, "covers": 5, "iso": 5}


class UsageError(Exception):
    pass


def _cap(args, limit: int, what: str) -> None:
    if args.n > limit and not args.allow_large:
        raise UsageError(f"{what} with n={args.n} exceeds the cap {limit}; pass --allow-large")


def _elements(poset: str, n: int, k: int | None) -> list:
    if poset == "rooks":
        return enumerate_all_rooks(n) if k is None else enumerate_rooks(n, k)
    if poset == "partial-involutions":
        return enumerate_all_partial_involutions(n) if k is None else enumerate_partial_involutions(n, k)
    if k is not None:
        raise UsageError(f"--k does not apply to {poset}")
    return enumerate_involutions(n) if poset == "involutions" else enumerate_permutations(n)


def _expected_count(poset: str, n: int, k: int | None) -> int:
    if poset == "rooks":
        ks = range(n + 1) if k is None else [k]
        return sum(rook_count_formula(n, j) for j in ks)
    if poset == "permutations":
        return math.factorial(n)
    if poset == "involutions":
        return involution_count(n)
    # partial involutions of rank k: choose the support, then an involution on it
    ks = range(n + 1) if k is None else [k]
    return sum(math.comb(n, j) * involution_count(j) for j in ks)


def _poset(poset: str, n: int, k: int | None) -> FinitePoset:
    if poset == "rooks":
        return rook_poset(n, k)
    if poset == "partial-involutions":
        return partial_involution_poset(n, k)
    if k is not None:
        raise UsageError(f"--k does not apply to {poset}")
    return involution_poset(n) if poset == "involutions" else permutation_poset(n)


def _labeling(poset: str, n: int) -> Callable[[Any, Any], Any] | None:
    if poset == "partial-involutions":
        return label
    if poset == "involutions" and n >= 2:
        return transport_labeling(n - 1)
    return None


# ---------------------------------------------------------------- commands

def cmd_enumerate(args) -> tuple[dict, int]:
    _cap(args, ENUMERATE_CAP, "enumerate")
    elems = _elements(args.poset, args.n, args.k)
    expected = _expected_count(args.poset, args.n, args.k)
    doc = {"command": "enumerate", "poset": args.poset, "n": args.n, "k": args.k,
           "count": len(elems), "expected_count": expected,
           "elements": [_fmt(x) for x in elems]}
    return doc, 0 if len(elems) == expected else 1


def cmd_hasse(args) -> tuple[dict, int]:
    _cap(args, HASSE_CAP[args.poset], f"hasse for {args.poset}")
    p = _poset(args.poset, args.n, args.k)
    labels = _labeling(args.poset, args.n) if args.k is None else (
        label if args.poset == "partial-involutions" else None)
    highlight = None
    if args.highlight_embedding:
        if args.poset == "rooks" and args.k is None and args.n >= 1:
            highlight = rook_union_poset(args.n).elements
        elif args.poset == "partial-involutions" and args.k is None and args.n >= 1:
            highlight = partial_involution_union_poset(args.n).elements
        else:
            raise UsageError("--highlight-embedding needs --poset rooks or partial-involutions without --k")
    doc = p.to_json(labels, schema=False)
    doc = {"command": "hasse", "poset": args.poset, "n": args.n, "k": args.k, **doc}
    if highlight is not None:
        doc["highlight"] = [_fmt(x) for x in highlight]
    doc["_dot"] = p.to_dot(labels, highlight)
    return doc, 0


def _check_el(args) -> tuple[dict, bool]:
    if args.poset not in ("partial-involutions", "involutions"):
        raise UsageError("check el runs on partial-involutions or involutions")
    p = _poset(args.poset, args.n, None)
    labeling = _labeling(args.poset, args.n)
    if labeling is None:
        raise UsageError("no labeling available for this poset")
    report = verify_el(p, labeling, jobs=args.jobs)
    doc = {"poset": p.name, "intervals": report.intervals,
           "violations": [r.to_json() for r in report.violations]}
    if args.full:
        doc["records"] = [r.to_json() for r in report.records]
    return doc, report.ok


def _check_eulerian(args) -> tuple[dict, bool]:
    n = args.n
    posets = ["rooks", "partial-involutions"] if args.poset is None else [args.poset]
    if any(p not in ("rooks", "partial-involutions") for p in posets):
        raise UsageError("check eulerian runs on rooks or partial-involutions")
    if args.k == 0:
        raise UsageError("layers are indexed by k = 1..n")
    ks = [args.k] if args.k is not None and not args.all_k else list(range(1, n + 1))
    rows, ok = [], True
    for poset in posets:
        for k in ks:
            rep = is_eulerian(_poset(poset, n, k))
            predicted = k in (n - 1, n)
            row = {"poset": poset, "k": k, "eulerian": rep.eulerian, "predicted": predicted,
                   "parity_test": rep.parity_test, "mobius_test": rep.mobius_test}
            if rep.witness is not None:
                row["witness"] = [_fmt(w) for w in rep.witness]
            if 1 <= k <= n - 2:
                side = "rooks" if poset == "rooks" else "involutions"
                ce = eulerian_counterexample(n, k, side)
                row["counterexample"] = ce.to_json()
                ok &= ce.ok
            ok &= rep.eulerian == predicted
            rows.append(row)
    return {"n": n, "layers": rows}, ok


def _check_covers(args) -> tuple[dict, bool]:
    p = partial_involution_poset(args.n)
    hasse = {(p.elements[i], p.elements[j]) for i, j in p.hasse_edges}
    moves = {(x, y) for x in p.elements for y in cv.covers_of(x)}
    oracle = {(x, y) for x in p.elements for y in p.elements if cv.is_cover_oracle(x, y)}
    classify_errors = []
    kinds = {"c": 0, "d": 0, "r": 0}
    for x, y in sorted(hasse):
        try:
            kinds[cv.classify_cover(x, y).kind] += 1
        except (ValueError, cv.AmbiguousCoverError) as exc:
            classify_errors.append(str(exc))

    def diff(a, b):
        return [[_fmt(x), _fmt(y)] for x, y in sorted(a - b)]

    doc = {"poset": p.name, "hasse_edges": len(hasse), "move_covers": len(moves),
           "oracle_covers": len(oracle), "kinds": kinds,
           "moves_not_hasse": diff(moves, hasse), "hasse_not_moves": diff(hasse, moves),
           "oracle_not_hasse": diff(oracle, hasse), "hasse_not_oracle": diff(hasse, oracle),
           "classify_errors": classify_errors}
    return doc, moves == hasse == oracle and not classify_errors


def _check_iso(args) -> tuple[dict, bool]:
    sides = ["rooks", "involutions"] if args.side is None else [args.side]
    n, out, ok = args.n, [], True
    for side in sides:
        if side == "rooks":
            rep = verify_isomorphism(psi, rook_union_poset(n), permutation_poset(n + 1))
            expected = math.factorial(n + 1)
            size = len(rook_union_poset(n))
        else:
            rep = verify_isomorphism(phi, partial_involution_union_poset(n), involution_poset(n + 1))
            expected = involution_count(n + 1)
            size = len(partial_involution_union_poset(n))
        out.append({"side": side, "domain_size": size, "expected_size": expected, **rep.to_json()})
        ok &= rep.isomorphism and size == expected
    return {"n": n, "maps": out}, ok


def _check_shelling(args) -> tuple[dict, bool]:
    p = partial_involution_poset(args.n)
    if len(p) < 3:
        raise UsageError("proper part is empty for n < 2")
    facets = order_complex_facets(p, p.bottom(), p.top(), label)
    ok, bad = verify_shelling(facets)
    return {"poset": p.name, "facets": len(facets), "dimension": len(facets[0]) - 1,
            "first_failure": bad}, ok


def _check_mobius_cross(args) -> tuple[dict, bool]:
    p = partial_involution_poset(args.n)
    mismatches = []
    pairs = 0
    for i, j in p.comparable_pairs(strict=False):
        x, y = p.elements[i], p.elements[j]
        pairs += 1
        a, b = mobius(p, x, y), decreasing_chain_mobius(p, label, x, y)
        if a != b:
            mismatches.append({"bottom": _fmt(x), "top": _fmt(y), "mobius": a, "decreasing": b})
    agree = []
    for k in range(1, args.n + 1):
        for q in (rook_poset(args.n, k), partial_involution_poset(args.n, k)):
            rep = is_eulerian(q)
            agree.append({"poset": q.name, "parity_test": rep.parity_test, "mobius_test": rep.mobius_test})
    tests_agree = all(r["parity_test"] == r["mobius_test"] for r in agree)
    return {"poset": p.name, "intervals": pairs, "mismatches": mismatches,
            "eulerian_tests": agree}, not mismatches and tests_agree


CHECKERS = {"el": _check_el, "eulerian": _check_eulerian, "covers": _check_covers,
            "iso": _check_iso, "shelling": _check_shelling, "mobius-cross": _check_mobius_cross}


def cmd_check(args) -> tuple[dict, int]:
    _cap(args, CHECK_CAP[args.check], f"check {args.check}")
    if args.check == "el" and args.poset is None:
        args.poset = "partial-involutions"
    body, ok = CHECKERS[args.check](args)
    return {"command": "check", "check": args.check, "pass": ok, **body}, 0 if ok else 1


# ---------------------------------------------------------------- rendering

def _render_text(doc: dict) -> str:
    lines = []
    cmd = doc["command"]
    if cmd == "enumerate":
        k = "" if doc["k"] is None else f" k={doc['k']}"
        lines.append(f"{doc['poset']} n={doc['n']}{k}: {doc['count']} elements "
                     f"(expected {doc['expected_count']})")
        lines.extend(doc["elements"])
    elif cmd == "hasse":
        lines.append(f"{doc['name']}: {len(doc['elements'])} elements, {len(doc['edges'])} edges")
        els = doc["elements"]
        for e, (i, j) in enumerate(doc["edges"]):
            lab = f"  {_fmt(tuple(doc['labels'][e]))}" if "labels" in doc else ""
            lines.append(f"{els[i]} -> {els[j]}{lab}")
    else:
        lines.append(f"check {doc['check']}: {'PASS' if doc['pass'] else 'FAIL'}")
        for key, val in doc.items():
            if key in ("command", "check", "pass"):
                continue
            if isinstance(val, list):
                lines.append(f"{key}: {len(val)}")
                for item in val:
                    lines.append(f"  {json.dumps(item, sort_keys=True)}")
            else:
                lines.append(f"{key}: {json.dumps(val, sort_keys=True)}")
    return "\n".join(lines) + "\n"


def render(doc: dict, fmt: str) -> str:
    dot = doc.pop("_dot", None)
    if fmt == "dot":
        if dot is None:
            raise UsageError("--format dot is only available for hasse")
        return dot
    if fmt == "json":
        return json.dumps({"schema": SCHEMA, **doc}, indent=2) + "\n"
    return _render_text(doc)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True)
    common.add_argument("--k", type=int)
    common.add_argument("--format", choices=("text", "json", "dot"), default="text")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--allow-large", action="store_true")

    parser = argparse.ArgumentParser(prog="posetshell", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list the elements of a poset")
    p.add_argument("--poset", choices=POSETS, default="partial-involutions")

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram as text, JSON or DOT")
    p.add_argument("--poset", choices=POSETS, default="partial-involutions")
    p.add_argument("--highlight-embedding", action="store_true")

    p = sub.add_parser("check", parents=[common], help="run a verifier")
    p.add_argument("check", choices=CHECKS)
    p.add_argument("--poset", choices=POSETS)
    p.add_argument("--side", choices=("rooks", "involutions"))
    p.add_argument("--all-k", action="store_true")
    p.add_argument("--full", action="store_true", help="include every interval record")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.n < 0 or args.jobs < 1:
            raise UsageError("--n must be >= 0 and --jobs >= 1")
        if args.k is not None and not 0 <= args.k <= args.n:
            raise UsageError("--k must satisfy 0 <= k <= n")
        handler = {"enumerate": cmd_enumerate, "hasse": cmd_hasse, "check": cmd_check}[args.command]
        doc, code = handler(args)
        text = render(doc, args.format)
    except UsageError as exc:
        parser.error(str(exc))  # exits with status 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
