"""Command-line surface.

Exit codes: 0 success, 1 usage/parse/elaboration error, 2 rewriting fuel
exhausted, 3 a check suite failed.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys

from .bases import (cmp_t, enumerate_S, enumerate_Shat, enumerate_T,
                    phi_inv_lin, phi_lin, shat_to_t, to_shat)
from .exprs import (ElabError, ParseError, lincomb_json, parse_algebra,
                    parse_tensor, render_lincomb, render_term)
from .normal import (DEFAULT_FUEL, FuelExhausted, enumerate_B,
                     enumerate_B_lat, normalize)
from .orders import cmp_shat
from .osbb import decompose
from .suites import SUITES
from .terms import Alphabet, LinComb
from .yamaguti import ly_triple


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _alphabet(spec):
    if spec is None:
        return None
    try:
        return Alphabet.of_size(int(spec))
    except ValueError:
        names = [n.strip() for n in spec.split(",") if n.strip()]
        if not names:
            raise UsageError("empty --gens")
        return Alphabet(names)


def _infer_alphabet(texts):
    import re
    names = set()
    funcs = {"bk", "tb", "gr", "sg", "s", "w", "tri", "lb"}
    for text in texts:
        for m in re.finditer(r"[A-Za-z_][A-Za-z0-9_]*(\s*\()?", text):
            tok = m.group(0)
            if tok.endswith("("):
                continue
            if tok not in funcs:
                names.add(tok)
    if not names:
        names = {"a"}
    return Alphabet(sorted(names))


def _emit_lincomb(x, use_json, order=None):
    if use_json:
        print(json.dumps(lincomb_json(x, order=order), sort_keys=True))
    else:
        print(render_lincomb(x, order=order))


def _trace_hash(x):
    return hashlib.sha256(render_lincomb(x).encode()).hexdigest()[:16]


def _write_trace(path, trace):
    with open(path, "w") as fh:
        fh.write(json.dumps({"kind": "trace", "steps": len(trace.steps),
                             "input_hash": _trace_hash(trace.input),
                             "output_hash": _trace_hash(trace.output)},
                            sort_keys=True) + "\n")
        for s in trace.steps:
            rec = {"rule": s.rule,
                   "term": render_term(s.term),
                   "path": list(map(str, s.path)),
                   "bindings": {k: (render_term(v) if not isinstance(v, tuple)
                                    else [render_term(u) for u in v])
                                for k, v in s.bindings},
                   "before_hash": _trace_hash(s.before),
                   "after_hash": _trace_hash(s.after)}
            fh.write(json.dumps(rec, sort_keys=True) + "\n")


_BASES = ("S", "Bhat", "Shat", "T", "B", "LAT")


def _enumerate(basis, n, alphabet):
    if basis == "S":
        return enumerate_S(n, alphabet)
    if basis == "Bhat":
        from .bases import enumerate_Bhat
        return enumerate_Bhat(n, alphabet)
    if basis == "Shat":
        return enumerate_Shat(n, alphabet)
    if basis == "T":
        return enumerate_T(n, alphabet)
    if basis == "B":
        return enumerate_B(n, alphabet)
    if basis == "LAT":
        return enumerate_B_lat(n, alphabet)
    raise UsageError("unknown basis %r" % basis)


def build_parser():
    p = _Parser(prog="plyalg", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    np = sub.add_parser("normalize", help="normalize an expression onto the basis")
    np.add_argument("expr")
    np.add_argument("--gens", default=None)
    np.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    np.add_argument("--trace", default=None, metavar="FILE")
    np.add_argument("--json", action="store_true")

    ep = sub.add_parser("enum", help="list basis elements of one grade")
    ep.add_argument("--basis", required=True, choices=_BASES)
    ep.add_argument("--n", type=int, required=True)
    ep.add_argument("--gens", default="1")
    ep.add_argument("--json", action="store_true")

    dp = sub.add_parser("dims", help="graded dimensions up to --max-n")
    dp.add_argument("--basis", required=True, choices=_BASES)
    dp.add_argument("--max-n", type=int, required=True)
    dp.add_argument("--gens", default="1")

    op = sub.add_parser("osbb", help="decompose a tensor word expression")
    op.add_argument("expr")
    op.add_argument("--gens", default=None)
    op.add_argument("--json", action="store_true")

    pp = sub.add_parser("phi", help="apply the basis automorphism")
    pp.add_argument("expr")
    pp.add_argument("--gens", default=None)
    pp.add_argument("--json", action="store_true")

    ip = sub.add_parser("phi-inv", help="apply the inverse automorphism")
    ip.add_argument("expr")
    ip.add_argument("--gens", default=None)
    ip.add_argument("--json", action="store_true")

    lp = sub.add_parser("ly", help="the Lie-Yamaguti ternary operation")
    lp.add_argument("x")
    lp.add_argument("y")
    lp.add_argument("z")
    lp.add_argument("--gens", default=None)
    lp.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    lp.add_argument("--json", action="store_true")

    cp = sub.add_parser("check", help="run a verification suite")
    cp.add_argument("--suite", required=True, choices=sorted(SUITES))
    cp.add_argument("--max-vertices", type=int, default=None)
    cp.add_argument("--samples", type=int, default=None)
    cp.add_argument("--seed", type=int, default=0)
    cp.add_argument("--gens", default=None)
    return p


def run(argv):
    args = build_parser().parse_args(argv)

    if args.cmd == "normalize":
        alphabet = _alphabet(args.gens) or _infer_alphabet([args.expr])
        x = parse_algebra(args.expr, alphabet)
        try:
            nf, trace = normalize(x, fuel=args.fuel)
        except FuelExhausted as e:
            print("fuel exhausted after %d steps" % len(e.trace.steps),
                  file=sys.stderr)
            return 2
        if args.trace:
            _write_trace(args.trace, trace)
        _emit_lincomb(nf, args.json, order=cmp_t)
        return 0

    if args.cmd == "enum":
        alphabet = _alphabet(args.gens)
        elems = _enumerate(args.basis, args.n, alphabet)
        if args.json:
            print(json.dumps({"basis": args.basis, "n": args.n,
                              "count": len(elems),
                              "elements": [render_term(t) for t in elems]},
                             sort_keys=True))
        else:
            for t in elems:
                print(render_term(t))
        return 0

    if args.cmd == "dims":
        alphabet = _alphabet(args.gens)
        dims = [len(_enumerate(args.basis, n, alphabet))
                for n in range(1, args.max_n + 1)]
        print(" ".join(map(str, dims)))
        return 0

    if args.cmd == "osbb":
        alphabet = _alphabet(args.gens) or _infer_alphabet([args.expr])
        d = parse_tensor(args.expr, alphabet)
        shat_words = LinComb()
        for w, c in d.items():
            from .tensor import word_lincomb
            shat_words.add_in(word_lincomb([to_shat(l) for l in w]), c)
        dec = decompose(shat_words, cmp_shat)
        if args.json:
            items = sorted(dec.items(), key=lambda tc: canon_key_word(tc[0]))
            print(json.dumps({"terms": [{"coeff": str(c), "expr": _render_word(w)}
                                        for w, c in items]}, sort_keys=True))
        else:
            items = sorted(dec.items(), key=lambda tc: canon_key_word(tc[0]))
            if not items:
                print("0")
            else:
                print(" + ".join(_render_word(w) if c == 1
                                 else "%s * %s" % (c, _render_word(w))
                                 for w, c in items))
        return 0

    if args.cmd in ("phi", "phi-inv"):
        alphabet = _alphabet(args.gens) or _infer_alphabet([args.expr])
        x = parse_algebra(args.expr, alphabet)
        coords = to_shat(x)
        if args.cmd == "phi":
            out = phi_lin(coords)
            _emit_lincomb(out, args.json, order=cmp_t)
        else:
            out = phi_inv_lin(shat_to_t(coords))
            _emit_lincomb(out, args.json, order=cmp_shat)
        return 0

    if args.cmd == "ly":
        alphabet = _alphabet(args.gens) or _infer_alphabet([args.x, args.y, args.z])
        vx = parse_algebra(args.x, alphabet)
        vy = parse_algebra(args.y, alphabet)
        vz = parse_algebra(args.z, alphabet)
        try:
            out = ly_triple(vx, vy, vz, fuel=args.fuel)
        except FuelExhausted as e:
            print("fuel exhausted after %d steps" % len(e.trace.steps),
                  file=sys.stderr)
            return 2
        _emit_lincomb(out, args.json, order=cmp_t)
        return 0

    if args.cmd == "check":
        fn = SUITES[args.suite]
        kwargs = {"seed": args.seed}
        if args.max_vertices is not None:
            kwargs["max_vertices"] = args.max_vertices
        if args.samples is not None:
            kwargs["samples"] = args.samples
        if args.gens is not None:
            kwargs["gens"] = len(_alphabet(args.gens))
        passed, report = fn(**kwargs)
        print(json.dumps(report, indent=2, sort_keys=True))
        return 0 if passed else 3

    raise UsageError("unknown command")


def canon_key_word(w):
    from .terms import word_key
    return word_key(w)


def _render_word(w):
    from .exprs import render_term
    items = []
    for b in w.blocks:
        if b.sym:
            items.append("s(%s)" % ", ".join(render_term(l) for l in b.sym))
        items.append("lb(%s, %s)" % (render_term(b.y), render_term(b.z)))
    if w.tail:
        items.append("s(%s)" % ", ".join(render_term(l) for l in w.tail))
    if not items:
        return "w()"
    return "w(%s)" % ", ".join(items)


def main(argv=None):
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(argv)
    except UsageError as e:
        print("usage error: %s" % e, file=sys.stderr)
        return 1
    except (ParseError, ElabError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
