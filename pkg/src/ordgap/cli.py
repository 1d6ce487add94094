"""Command-line surface.

Decision commands print ``true``/``false`` (or LT/EQ/GT for ``ord cmp``)
and use the exit status as the verdict: 0 for success or a true answer,
1 for false or suite failures, 2 for parse and validation errors.  When
the operands of a pair-deciding command are omitted, pairs are read from
stdin, one per line, tab-separated.  ``--json`` switches every command
to one machine-readable record per line; ``--dot`` renders tree output
as DOT.  All randomized suites take ``--seed`` and are bit-reproducible.
"""

from __future__ import annotations

import argparse
import json
import sys

from .collapse import CollapseError, ord_to_tree
from .dot import labeled_tree_dot, tree_term_dot
from .gaptrees import brute_gap_leq, from_gap, gap_leq, in_t2bar, to_gap
from .ordinals import (
    SystemId,
    coefficient_set,
    compare,
    enumerate_terms,
    max_coefficient,
    natural_product,
    natural_sum,
    validate,
)
from .parsing import (
    ParseError,
    format_labeled_tree,
    format_term,
    format_tree_term,
    parse_labeled_tree,
    parse_term,
    parse_tree_term,
    parse_wexpr,
)
from .suites import SUITES
from .treeterms import enumerate_terms as enumerate_tree_terms
from .treeterms import left_set_bounded, t_leq
from .wexpr import ShapeError, higman_leq


SUITE_DEFAULTS = {
    "order-axioms": {"g": 3},
    "theta-criterion": {"g": 3},
    "coeff-lemmas": {"seed": 0, "samples": 10000, "g": 5},
    "g-monotone": {"g": 4},
    "encode-monotone": {"g": 4},
    "higman-oracle": {"size": 5},
    "tleq-fixpoint": {"size": 5},
    "gap-oracle": {"size": 7},
    "iso": {"size": 8},
    "quasi-embedding": {"seed": 0, "samples": 10000, "g": 3, "g_random": 6},
    "xstarstar-cases": {"size": 6},
}


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="ordgap")
    top.add_argument("--json", action="store_true", help="machine-readable output")
    top.add_argument("--dot", action="store_true", help="DOT for tree output")
    top.add_argument("--seed", type=int, default=0, help="seed for randomized suites")
    top.add_argument("--size", type=int, default=None, help="size or rank bound")
    top.add_argument("--samples", type=int, default=None, help="random sample count")
    top.add_argument(
        "--system",
        choices=["full", "restricted"],
        default="full",
        help="ordinal term system",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p_ord = sub.add_parser("ord", help="ordinal term operations")
    p_ord.add_argument(
        "op", choices=["cmp", "k", "kset", "sum", "prod", "g", "validate", "enum"]
    )
    p_ord.add_argument("terms", nargs="*")
    p_ord.add_argument("--countable", action="store_true", help="enum: countable only")

    p_tree = sub.add_parser("tree", help="tree term operations")
    p_tree.add_argument("op", choices=["leq", "enum", "leftset"])
    p_tree.add_argument("terms", nargs="*")
    p_tree.add_argument("--w", default="B(_)", help="constructor expression")

    p_gap = sub.add_parser("gap", help="labeled tree operations")
    p_gap.add_argument("op", choices=["leq", "iso-to", "iso-from", "check-t2bar"])
    p_gap.add_argument("terms", nargs="*")
    p_gap.add_argument(
        "--unstructured", action="store_true", help="drop the children-order condition"
    )
    p_gap.add_argument("--brute", action="store_true", help="use the brute-force oracle")

    p_hig = sub.add_parser("higman", help="sequence embedding over a poset")
    p_hig.add_argument("seqs", nargs="*")
    p_hig.add_argument("--poset", default="P{2;0<1}", help="poset literal")

    p_ver = sub.add_parser("verify", help="run a verification suite")
    p_ver.add_argument("suite", choices=sorted(SUITES))

    return top


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (ParseError, ShapeError, CollapseError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


def _emit(args, record: dict, text: str):
    if args.json:
        print(json.dumps(record))
    else:
        print(text)


def _batch_pairs(args, terms, want: int):
    """Explicit operands, or tab-separated pairs from stdin."""
    if terms:
        if len(terms) != want:
            raise ValueError(f"expected {want} operands, got {len(terms)}")
        yield terms
        return
    for line in sys.stdin:
        line = line.rstrip("\n")
        if not line.strip():
            continue
        fields = line.split("\t")
        if len(fields) != want:
            raise ValueError(f"expected {want} tab-separated fields: {line!r}")
        yield fields


def _dispatch(args) -> int:
    if args.command == "ord":
        return _cmd_ord(args)
    if args.command == "tree":
        return _cmd_tree(args)
    if args.command == "gap":
        return _cmd_gap(args)
    if args.command == "higman":
        return _cmd_higman(args)
    if args.command == "verify":
        return _cmd_verify(args)
    raise AssertionError(args.command)


def _cmd_ord(args) -> int:
    sysid = SystemId(args.system)
    op = args.op
    if op == "enum":
        g = args.size if args.size is not None else 2
        for t in enumerate_terms(sysid, g, countable_only=args.countable, max_size=16):
            _emit(args, {"command": "ord enum", "term": format_term(t)}, format_term(t))
        return 0
    if op == "cmp":
        all_ok = True
        for a_text, b_text in _batch_pairs(args, args.terms, 2):
            a, b = parse_term(a_text, sysid), parse_term(b_text, sysid)
            c = compare(a, b)
            _emit(
                args,
                {"command": "ord cmp", "inputs": [a_text, b_text], "result": c.name},
                c.name,
            )
        return 0 if all_ok else 1
    if op in ("k", "kset", "g", "validate"):
        (text,) = args.terms or (sys.stdin.readline().rstrip("\n"),)
        t = parse_term(text, sysid)
        if op == "k":
            out = format_term(max_coefficient(t))
            _emit(args, {"command": "ord k", "result": out}, out)
            return 0
        if op == "kset":
            from .ordinals import encode

            items = sorted(coefficient_set(t), key=encode)
            texts = [format_term(x) for x in items]
            _emit(
                args,
                {"command": "ord kset", "result": texts},
                "{" + ", ".join(texts) + "}",
            )
            return 0
        if op == "g":
            tree = ord_to_tree(t)
            out = tree_term_dot(tree) if args.dot else format_tree_term(tree)
            _emit(
                args,
                {"command": "ord g", "result": format_tree_term(tree)},
                out,
            )
            return 0
        report = validate(t, sysid)
        if report.valid:
            _emit(args, {"command": "ord validate", "valid": True}, "valid")
            return 0
        detail = f"invalid: {report.clause} at {report.path} ({report.detail})"
        _emit(
            args,
            {
                "command": "ord validate",
                "valid": False,
                "clause": report.clause,
                "path": report.path,
            },
            detail,
        )
        return 1
    if op in ("sum", "prod"):
        a_text, b_text = args.terms
        a, b = parse_term(a_text, sysid), parse_term(b_text, sysid)
        out = natural_sum(a, b, sysid) if op == "sum" else natural_product(a, b, sysid)
        _emit(args, {"command": f"ord {op}", "result": format_term(out)}, format_term(out))
        return 0
    raise AssertionError(op)


def _cmd_tree(args) -> int:
    w = parse_wexpr(args.w)
    if args.op == "enum":
        bound = args.size if args.size is not None else 5
        for t in enumerate_tree_terms(w, bound):
            out = tree_term_dot(t) if args.dot else format_tree_term(t)
            _emit(args, {"command": "tree enum", "term": format_tree_term(t)}, out)
        return 0
    if args.op == "leftset":
        (text,) = args.terms
        t = parse_tree_term(text, w)
        bound = args.size if args.size is not None else 5
        for s in left_set_bounded(t, w, bound):
            _emit(args, {"command": "tree leftset", "term": format_tree_term(s)}, format_tree_term(s))
        return 0
    ok_all = True
    for s_text, t_text in _batch_pairs(args, args.terms, 2):
        s, t = parse_tree_term(s_text, w), parse_tree_term(t_text, w)
        res = t_leq(s, t, w)
        ok_all &= res
        _emit(
            args,
            {"command": "tree leq", "inputs": [s_text, t_text], "result": res},
            "true" if res else "false",
        )
    return 0 if ok_all else 1


def _cmd_gap(args) -> int:
    from .wexpr import BTree, Hole

    b = BTree(Hole())
    if args.op == "iso-to":
        (text,) = args.terms
        t = parse_tree_term(text, b)
        tree = to_gap(t)
        out = labeled_tree_dot(tree) if args.dot else format_labeled_tree(tree)
        _emit(args, {"command": "gap iso-to", "result": format_labeled_tree(tree)}, out)
        return 0
    if args.op == "iso-from":
        (text,) = args.terms
        t = from_gap(parse_labeled_tree(text))
        out = tree_term_dot(t) if args.dot else format_tree_term(t)
        _emit(args, {"command": "gap iso-from", "result": format_tree_term(t)}, out)
        return 0
    if args.op == "check-t2bar":
        (text,) = args.terms
        res = in_t2bar(parse_labeled_tree(text))
        _emit(
            args,
            {"command": "gap check-t2bar", "inputs": [text], "result": res},
            "true" if res else "false",
        )
        return 0 if res else 1
    ok_all = True
    leq = brute_gap_leq if args.brute else gap_leq
    for a_text, b_text in _batch_pairs(args, args.terms, 2):
        t1, t2 = parse_labeled_tree(a_text), parse_labeled_tree(b_text)
        res = leq(t1, t2, not args.unstructured)
        ok_all &= res
        _emit(
            args,
            {"command": "gap leq", "inputs": [a_text, b_text], "result": res},
            "true" if res else "false",
        )
    return 0 if ok_all else 1


def _parse_index_seq(text: str, size: int) -> list[int]:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ParseError("expected a sequence like [0,1,2]", 0)
    body = text[1:-1].strip()
    if not body:
        return []
    out = []
    for piece in body.split(","):
        i = int(piece)
        if not 0 <= i < size:
            raise ValueError(f"index {i} out of range for poset of size {size}")
        out.append(i)
    return out


def _cmd_higman(args) -> int:
    from .parsing import parse_wexpr as _pw

    w = _pw(args.poset)
    from .wexpr import Const

    if not isinstance(w, Const):
        raise ValueError("--poset expects a poset literal like P{3;0<1}")
    poset = w.poset
    ok_all = True
    for xs_text, ys_text in _batch_pairs(args, args.seqs, 2):
        xs = _parse_index_seq(xs_text, poset.size)
        ys = _parse_index_seq(ys_text, poset.size)
        res = higman_leq(xs, ys, poset.le)
        ok_all &= res
        _emit(
            args,
            {"command": "higman", "inputs": [xs_text, ys_text], "result": res},
            "true" if res else "false",
        )
    return 0 if ok_all else 1


def _cmd_verify(args) -> int:
    name = args.suite
    kwargs = dict(SUITE_DEFAULTS[name])
    if "system" in _suite_accepts(name):
        kwargs["system"] = SystemId(args.system)
    if args.size is not None:
        if "size" in kwargs:
            kwargs["size"] = args.size
        else:
            kwargs["g"] = args.size
    if args.samples is not None and "samples" in kwargs:
        kwargs["samples"] = args.samples
    if "seed" in kwargs:
        kwargs["seed"] = args.seed
    report = SUITES[name](**kwargs)
    if args.json:
        print(json.dumps(report.to_json_dict()))
    else:
        print(f"suite: {report.suite}")
        print(f"params: {json.dumps(report.params)}")
        print(f"checked: {report.checked}")
        print(f"failures: {len(report.failures)}")
        for f in report.failures:
            print(f"  inputs={f['inputs']} expected={f['expected']} got={f['got']}")
    return 0 if report.ok else 1


def _suite_accepts(name: str) -> set[str]:
    return {
        "order-axioms": {"system"},
        "theta-criterion": {"system"},
        "g-monotone": {"system"},
        "encode-monotone": {"system"},
    }.get(name, set())


if __name__ == "__main__":
    sys.exit(main())
