"""Command-line front end.

    braidalg [--field q|fp:P] [--json] VERB [options]

Verbs: check-yb, canonical, iso, extend, check-auto, decompose, classify,
witness.  Exit status is 0 for a true/successful verdict, 1 for a false or
failed one, and 2 for malformed input.  With ``--json`` exactly one JSON
document is written to standard output, errors included.
"""

from __future__ import annotations

import argparse
import json
import sys

from .autos import Endomorphism, tame_decompose
from .braided_autos import classification_record, is_braided_automorphism, witness_suite
from .braiding import (
    DiagonalBraiding,
    MatrixBraiding,
    TensorElement,
    braided_isomorphic,
    canonical_form,
    dual_braiding,
    extend_braiding_poly,
    is_involutive,
    yang_baxter_check,
)
from .errors import AlgebraError, ParseError
from .scalars import Field
from .textio import format_word, parse_braiding_matrix, parse_matrix, parse_poly

SCHEMA = 1


class InputError(Exception):
    pass


def parse_field(text: str) -> Field:
    if text == "q":
        return Field()
    if text.startswith("fp:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise ParseError("field prime must be an integer", text, 3) from None
        return Field(p)
    raise ParseError("field must be 'q' or 'fp:P'", text, 0)


def _braiding(args) -> DiagonalBraiding:
    if args.tau is None:
        raise InputError("--tau is required")
    return DiagonalBraiding(tuple(tuple(r) for r in parse_braiding_matrix(args.tau, args.field)), args.field)


def _vec(q: DiagonalBraiding) -> list:
    return [str(c) for row in q.q for c in row]


def _cmd_check_yb(args):
    if args.matrix is not None:
        b = MatrixBraiding(parse_matrix(args.matrix, args.field), args.field)
        subject = {"matrix": args.matrix}
    else:
        b = _braiding(args)
        subject = {"tau": _vec(b)}
    ok = yang_baxter_check(b)
    return ok, {**subject, "yang_baxter": ok}, f"Yang-Baxter: {str(ok).lower()}"


def _cmd_canonical(args):
    q = _braiding(args)
    if q.n != 2:
        raise InputError("canonical form needs two generators")
    inv = is_involutive(q)
    doc = {"tau": _vec(q), "involutive": inv, "canonical": None, "dual": _vec(dual_braiding(q))}
    if not inv:
        return False, doc, f"{q} is not involutive"
    c = canonical_form(q)
    doc["canonical"] = _vec(c)
    return True, doc, f"canonical: {c}\ndual: {dual_braiding(q)}"


def _cmd_iso(args):
    t = _braiding(args)
    if args.sigma is None:
        raise InputError("--sigma is required")
    s = DiagonalBraiding(tuple(tuple(r) for r in parse_braiding_matrix(args.sigma, args.field)), args.field)
    ok = braided_isomorphic(t, s)
    return ok, {"tau": _vec(t), "sigma": _vec(s), "isomorphic": ok}, f"isomorphic: {str(ok).lower()}"


def _cmd_extend(args):
    q = _braiding(args)
    if args.left is None or args.right is None:
        raise InputError("--left and --right are required")
    f = parse_poly(args.left, args.field, q.n)
    g = parse_poly(args.right, args.field, q.n)
    result = extend_braiding_poly(TensorElement.tensor(f, g), q, args.method)
    terms = sorted(result.terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0]))
    doc = {
        "tau": _vec(q),
        "left": str(f),
        "right": str(g),
        "method": args.method,
        "result": [{"coeff": str(c), "left": format_word(u), "right": format_word(v)} for (u, v), c in terms],
    }
    text = f"({f}) (x)' ({g}) -> {result}"
    return True, doc, text


def _endomorphism(args) -> Endomorphism:
    if args.phi is None:
        raise InputError("--phi is required")
    return Endomorphism.parse(args.phi, args.field)


def _cmd_check_auto(args):
    q = _braiding(args)
    phi = _endomorphism(args)
    ok = is_braided_automorphism(phi, q, args.method, args.depth)
    doc = {"tau": _vec(q), "phi": str(phi), "method": args.method, "braided_automorphism": ok}
    return ok, doc, f"braided automorphism: {str(ok).lower()}"


def _cmd_decompose(args):
    phi = _endomorphism(args)
    dec = tame_decompose(phi)
    if dec is None:
        return False, {"phi": str(phi), "automorphism": False, "decomposition": None}, f"{phi} is not an automorphism"
    doc = {"phi": str(phi), "automorphism": True, "decomposition": dec.to_record()}
    lines = [f"{phi} = product of {len(dec.factors)} elementary automorphisms (applied left to right):"]
    for e in dec.factors:
        lines.append(f"  {e.as_endomorphism()}")
    return True, doc, "\n".join(lines)


def _cmd_classify(args):
    q = _braiding(args)
    rec = classification_record(q)
    rec.pop("schema")
    lines = [
        f"tau: {q}",
        f"canonical: ({','.join(rec['canonical'])})",
        f"group: {rec['group']}",
        f"isomorphic to: {rec['isomorphic_description']}",
    ]
    if "z2_generator" in rec:
        lines.append(f"Z2 generator: {rec['z2_generator']}")
    return True, rec, "\n".join(lines)


def _cmd_witness(args):
    q = _braiding(args)
    if args.seed is None:
        if args.json:
            raise InputError("--seed is required in JSON mode")
        args.seed = 0
    rep = witness_suite(q, args.seed, count=args.count, depth=args.depth)
    rep.pop("schema")
    rejected = sum(nm["rejected"] for nm in rep["non_members"])
    text = (
        f"group: {rep['group']}\n"
        f"members passed: {rep['members_passed']}/{rep['members']}\n"
        f"non-members rejected: {rejected}/{len(rep['non_members'])}\n"
        f"methods agree: {str(rep['methods_agree']).lower()}\n"
        f"{'PASS' if rep['passed'] else 'FAIL'}"
    )
    return rep["passed"], rep, text


COMMANDS = {
    "check-yb": _cmd_check_yb,
    "canonical": _cmd_canonical,
    "iso": _cmd_iso,
    "extend": _cmd_extend,
    "check-auto": _cmd_check_auto,
    "decompose": _cmd_decompose,
    "classify": _cmd_classify,
    "witness": _cmd_witness,
}


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the verb; SUPPRESS keeps the
    # subparser from overwriting a value given before it
    common = argparse.ArgumentParser(add_help=False, argument_default=argparse.SUPPRESS)
    common.add_argument("--field", help="q (rationals, default) or fp:P for an odd prime P")
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument("--tau", help="braiding: (q11,q12,q21,q22) or [[...],...]")

    parser = argparse.ArgumentParser(prog="braidalg", description=__doc__.splitlines()[0])
    parser.add_argument("--field", default="q")
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--tau")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("check-yb", parents=[common], help="verify the braid relation")
    p.add_argument("--matrix", help="general n^2 x n^2 matrix [[...],...] instead of --tau")
    sub.add_parser("canonical", parents=[common], help="canonical representative of {tau, tau*}")
    p = sub.add_parser("iso", parents=[common], help="are A_tau and A_sigma isomorphic")
    p.add_argument("--sigma")
    p = sub.add_parser("extend", parents=[common], help="extended braiding of left (x)' right")
    p.add_argument("--left")
    p.add_argument("--right")
    p.add_argument("--method", choices=("closed", "operator"), default="closed")
    p = sub.add_parser("check-auto", parents=[common], help="is phi an automorphism of A_tau")
    p.add_argument("--phi")
    p.add_argument("--method", choices=("bicharacter", "oracle"), default="bicharacter")
    p.add_argument("--depth", "--truncation", dest="depth", type=int, help="oracle word-length bound")
    p = sub.add_parser("decompose", parents=[common], help="tame decomposition of phi")
    p.add_argument("--phi")
    sub.add_parser("classify", parents=[common], help="classify Aut A_tau")
    p = sub.add_parser("witness", parents=[common], help="sample and check Aut A_tau")
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--depth", "--truncation", dest="depth", type=int, help="oracle word-length bound")
    return parser


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        args.field = parse_field(args.field)
        ok, doc, text = COMMANDS[args.verb](args)
    except (AlgebraError, InputError, ValueError) as e:
        if args.json:
            out.write(json.dumps({"schema": SCHEMA, "verb": args.verb, "error": str(e)}) + "\n")
        else:
            sys.stderr.write(f"error: {e}\n")
        return 2
    if args.json:
        out.write(json.dumps({"schema": SCHEMA, "verb": args.verb, "field": str(args.field), **doc, "ok": ok}) + "\n")
    else:
        out.write(text + "\n")
    return 0 if ok else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
