"""Command line front end.

Output is JSON (``--format json``, sorted keys) or plain text.  Exit codes:
0 on success, 1 when a verification fails (a JSON report of the failing
cases is printed), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import curves as cv
from . import verify as vf
from .algebra import build_algebra
from .complexes import ProjComplex, minimize, projective, sum_of_projectives
from .extension import extend
from .functors import apply_word, parse_word
from .homology import poincare
from .k0 import check_decat_square, matrix_to_json, rep_matrix

MAX_RANK = 12


class UsageError(Exception):
    pass


# argument helpers ---------------------------------------------------------

def _rank(value):
    try:
        r = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"rank must be an integer, got {value!r}")
    if not 2 <= r <= MAX_RANK:
        raise argparse.ArgumentTypeError(f"rank must lie in 2..{MAX_RANK}")
    return r


def _word(text, m):
    try:
        w = parse_word(text)
    except ValueError:
        raise UsageError(f"malformed word {text!r}; expected signed integers")
    for x in w:
        if x == 0 or abs(x) > m:
            raise UsageError(f"letter {x} out of range 1..{m}")
    return w


def _vertex(j, m, what="vertex"):
    if not 1 <= j <= m:
        raise UsageError(f"{what} {j} out of range 1..{m}")
    return j


def _curve(n, text):
    try:
        return cv.parse_curve(n, text)
    except ValueError as e:
        raise UsageError(str(e))


def _load_complex(path):
    try:
        with open(path) as fh:
            return ProjComplex.from_json(json.load(fh))
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}")
    except (KeyError, ValueError, TypeError) as e:
        raise UsageError(f"malformed complex in {path}: {e}")


def _emit(args, payload, text):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False))
    else:
        print(text)


def _complex_text(C):
    return repr(C)


# subcommands -------------------------------------------------------------

def cmd_dump(args):
    alg = build_algebra(args.type.upper(), args.rank, args.grading)
    basis = [{"index": k, "name": b.name, "source": b.src, "target": b.tgt,
              "degree": b.deg, "z2": b.z2} for k, b in enumerate(alg.basis)]
    table = [{"left": alg.basis[i].name, "right": alg.basis[j].name,
              "product": ("-" if s < 0 else "") + alg.basis[k].name}
             for (i, j), (k, s) in sorted(alg.table.items())]
    payload = {"type": alg.tag.lower(), "rank": alg.rank, "grading": alg.grading,
               "dimension": alg.dim(), "basis": basis, "table": table}
    lines = [f"{alg.tag}{alg.rank} ({alg.grading}), dimension {alg.dim()}"]
    lines += [f"  {b['name']}: {b['source']}->{b['target']} deg {b['degree']} z2 {b['z2']}"
              for b in basis]
    lines += [f"  {t['left']} * {t['right']} = {t['product']}" for t in table]
    _emit(args, payload, "\n".join(lines))


def _start_complex(args, m):
    alg = build_algebra(args.side.upper(), m)
    if getattr(args, "input", None):
        C = _load_complex(args.input)
        if (C.alg.tag, C.alg.rank) != (alg.tag, alg.rank):
            raise UsageError("complex does not live over the requested algebra")
        return C
    if args.source is None:
        return sum_of_projectives(alg)
    return projective(alg, _vertex(args.source, m))


def cmd_act(args):
    m = args.rank
    w = _word(args.word, m)
    C = apply_word(w, _start_complex(args, m))
    _emit(args, C.to_json(), _complex_text(C))


def cmd_minimize(args):
    C = minimize(_load_complex(args.input))
    _emit(args, C.to_json(), _complex_text(C))


def cmd_poincare(args):
    m = args.rank
    alg = build_algebra(args.side.upper(), m)
    C = apply_word(_word(args.source_word, m), projective(alg, _vertex(args.source, m)))
    D = apply_word(_word(args.target_word, m), projective(alg, _vertex(args.target, m)))
    p = poincare(C, D)
    _emit(args, {"poincare": str(p)}, str(p))


def _basic_index(n, text):
    _curve(n, text)
    return int(text.strip().lower()[1:])


def cmd_intersect(args):
    n = args.rank
    j, k = _basic_index(n, args.left), _basic_index(n, args.right)
    w0, w1 = _word(args.left_word, n), _word(args.right_word, n)
    p = cv.intersect(w0, j, w1, k, n)
    payload = {"intersection": str(p)}
    if args.check:
        B = build_algebra("B", n)
        h = poincare(apply_word(w0, projective(B, j)), apply_word(w1, projective(B, k)))
        payload["poincare"] = str(h)
        payload["agree"] = h == p
        if h != p:
            _emit(args, payload, f"{p}\nMISMATCH poincare {h}")
            return 1
    _emit(args, payload, str(p))
    return 0


def cmd_lift(args):
    n = args.rank
    c = cv.act_word(_word(args.word, n), _curve(n, args.base))
    m = cv.lift(c)
    payload = {"curve": c.to_json(), "lift": m.to_json()}
    if args.complex:
        payload["L_A"] = cv.build_LA(m).to_json()
    text = "\n".join(
        f"component {i}: " + " ".join(f"theta{m.crossings[x][0]}{list(m.crossings[x][1])}"
                                       for x in comp)
        for i, comp in enumerate(m.components))
    _emit(args, payload, text)


def cmd_extend(args):
    C = _load_complex(args.input)
    if C.alg.tag != "B" or (args.rank is not None and C.alg.rank != args.rank):
        raise UsageError("extend expects a type B complex of the given rank")
    E = extend(C)
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(E.to_json(), fh, sort_keys=True, indent=2)
            fh.write("\n")
    _emit(args, E.to_json(), _complex_text(E))


def cmd_k0(args):
    if args.k0_command == "matrix":
        m = args.rank
        _word(str(args.gen), m)
        M = rep_matrix(args.side.upper(), m, args.gen)
        rows = matrix_to_json(M)
        _emit(args, {"side": args.side, "rank": m, "gen": args.gen, "matrix": rows},
              "\n".join("  ".join(r) for r in rows))
        return 0
    rep = check_decat_square(args.rank)
    _emit(args, rep, f"decategorified square n={args.rank}: {'ok' if rep['ok'] else 'FAILED'}")
    return 0 if rep["ok"] else 1


def cmd_verify(args):
    try:
        results = vf.run(args.suite, args.rank, args.side, args.seed)
    except KeyError:
        raise UsageError(f"unknown suite {args.suite!r}")
    failed = [r for r in results if not r["ok"]]
    if args.format == "json" or failed:
        report = {"suite": args.suite, "rank": args.rank, "cases": len(results),
                  "failed": len(failed),
                  "results": failed if failed else
                  [{"tag": r["tag"], "case": r["case"], "status": "ok"} for r in results]}
        print(json.dumps(report, sort_keys=True, indent=2, default=str))
    else:
        for r in results:
            print(f"ok    {r['tag']:<28} {r['case']}")
        print(f"{len(results)} cases, 0 failed")
    return 1 if failed else 0


def cmd_curve(args):
    n = args.rank
    if args.curve_command == "act":
        c = cv.act_word(_word(args.word, n), _curve(n, args.base))
        text = (f"endpoints {c.start},{c.end}; crossings "
                + " ".join(f"d{w}{list(mu)}" for w, mu in zip(c.walls, c.mus)))
        _emit(args, c.to_json(), text)
        return 0
    return cmd_intersect(args)


# parser ---------------------------------------------------------------------

def _parser():
    p = argparse.ArgumentParser(prog="zigzag", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dump", parents=[common], help="basis and multiplication table")
    s.add_argument("--type", choices=("a", "b", "A", "B"), required=True)
    s.add_argument("--rank", type=_rank, required=True)
    s.add_argument("--grading", choices=("standard", "pathlength"), default="standard")
    s.set_defaults(func=cmd_dump)

    s = sub.add_parser("act", parents=[common], help="apply a braid word to a complex")
    s.add_argument("--side", choices=("a", "b"), default="b")
    s.add_argument("--rank", type=_rank, required=True)
    s.add_argument("--word", default="")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--source", type=int, help="start from P_j (default: sum of all P_j)")
    g.add_argument("--in", dest="input", help="start from a complex in JSON")
    s.set_defaults(func=cmd_act)

    s = sub.add_parser("minimize", parents=[common], help="Gaussian elimination")
    s.add_argument("--in", dest="input", required=True)
    s.set_defaults(func=cmd_minimize)

    s = sub.add_parser("poincare", parents=[common], help="Poincare polynomial of HOM")
    s.add_argument("--side", choices=("a", "b"), default="b")
    s.add_argument("--rank", type=_rank, required=True)
    s.add_argument("--source-word", default="")
    s.add_argument("--source", type=int, required=True)
    s.add_argument("--target-word", default="")
    s.add_argument("--target", type=int, required=True)
    s.set_defaults(func=cmd_poincare)

    def intersect_args(s):
        s.add_argument("--rank", type=_rank, required=True)
        s.add_argument("--left-word", default="")
        s.add_argument("--left", required=True, help="basic curve, e.g. b1")
        s.add_argument("--right-word", default="")
        s.add_argument("--right", required=True)
        s.add_argument("--check", action="store_true",
                       help="cross-check against the Poincare polynomial")

    s = sub.add_parser("intersect", parents=[common], help="trigraded intersection number")
    intersect_args(s)
    s.set_defaults(func=cmd_intersect)

    s = sub.add_parser("lift", parents=[common], help="lift of w(b_j) to the type A disc")
    s.add_argument("--rank", type=_rank, required=True)
    s.add_argument("--word", default="")
    s.add_argument("--base", required=True)
    s.add_argument("--complex", action="store_true", help="also print L_A of the lift")
    s.set_defaults(func=cmd_lift)

    s = sub.add_parser("extend", parents=[common], help="extension of scalars B -> A")
    s.add_argument("--rank", type=_rank)
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out", dest="output")
    s.set_defaults(func=cmd_extend)

    s = sub.add_parser("k0", help="Grothendieck group matrices")
    ks = s.add_subparsers(dest="k0_command", required=True)
    k = ks.add_parser("matrix", parents=[common])
    k.add_argument("--side", choices=("a", "b"), default="b")
    k.add_argument("--rank", type=_rank, required=True)
    k.add_argument("--gen", type=int, required=True)
    k = ks.add_parser("verify-square", parents=[common])
    k.add_argument("--rank", type=_rank, required=True)
    s.set_defaults(func=cmd_k0)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=sorted(vf.SUITES) + ["all"])
    s.add_argument("--rank", type=_rank, default=2)
    s.add_argument("--side", choices=("a", "b", "both"), default="b")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("curve", help="curve operations")
    cs = s.add_subparsers(dest="curve_command", required=True)
    c = cs.add_parser("act", parents=[common])
    c.add_argument("--rank", type=_rank, default=None)
    c.add_argument("--word", default="")
    c.add_argument("--base", required=True)
    c = cs.add_parser("intersect", parents=[common])
    intersect_args(c)
    s.set_defaults(func=cmd_curve)
    return p


def _default_rank(args):
    """curve act may omit --rank; take the smallest rank that fits."""
    if getattr(args, "command", None) == "curve" and args.rank is None:
        letters = [abs(x) for x in parse_word(args.word)] if args.word.strip() else []
        try:
            j = int(args.base.strip().lower()[1:])
        except ValueError:
            raise UsageError(f"unknown curve {args.base!r}")
        args.rank = max([2, j] + letters)


def main(argv=None):
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        _default_rank(args)
        code = args.func(args)
    except UsageError as e:
        print(f"zigzag: error: {e}", file=sys.stderr)
        return 2
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
