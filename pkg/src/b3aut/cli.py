"""Command-line front end: ``b3aut <command> ARGS [--format text|json]``.

Exit status is 0 on success, 1 on a domain error (for instance a
non-automorphism given to aut-decompose, or a failed verify check) and
2 when the input cannot be parsed.
"""
import argparse
import json
import math
import sys

from . import autf2, braid3, intmat
from .errors import B3AutError, ParseError
from .verify import run_all

__all__ = ["main", "build_parser"]


def _out(kind, value, witness=None, text=None):
    return {"kind": kind, "value": value, "witness": witness}, text if text is not None else str(value)


def _nf_witness(nf):
    return {"nu1": nf.nu1, "W": braid3._fmt_positive(nf.W), "nu2": nf.nu2, "n": nf.n}


def cmd_braid_nf(a):
    nf = braid3.normal_form(braid3.parse_braid(a.word))
    return _out("braid-nf", str(nf), _nf_witness(nf))


def cmd_braid_eq(a):
    eq = braid3.braid_equal(braid3.parse_braid(a.word1), braid3.parse_braid(a.word2))
    return _out("braid-eq", eq, None, "equal" if eq else "different")


def cmd_braid_conj(a):
    case = braid3.conj_min_form(braid3.parse_braid(a.word))
    rep = case.representative()
    return _out("braid-conj", str(case), {"tag": case.tag, "n": case.n, "representative": str(rep)})


def cmd_mat2braid(a):
    nf = braid3.matrix_to_braid(intmat.parse_matrix(a.matrix))
    return _out("mat2braid", str(nf), _nf_witness(nf))


def cmd_braid2mat(a):
    m = braid3.sigma(braid3.parse_braid(a.word))
    return _out("braid2mat", str(m))


def cmd_f(a):
    return _out("f", str(intmat.f(a.n)))


def cmd_derived(a):
    ok = intmat.derived_membership(intmat.parse_matrix(a.matrix))
    return _out("derived", ok, None, "yes" if ok else "no")


def cmd_rewrite_f(a):
    m = intmat.parse_matrix(a.matrix)
    w = intmat.rewrite_in_f(m)
    return _out("rewrite-f", str(w), str(intmat.f_word_matrix(w)))


def cmd_torsion_sl(a):
    cls = intmat.torsion_class_sl(intmat.parse_matrix(a.matrix))
    rep = cls.representative
    return _out("torsion-sl", cls.value, str(rep) if rep is not None else None)


def cmd_torsion_gl(a):
    cls = intmat.torsion_class_gl(intmat.parse_matrix(a.matrix))
    rep = cls.representative
    return _out("torsion-gl", cls.value, str(rep) if rep is not None else None)


def cmd_aut_check(a):
    x = autf2.parse_endo(a.endo)
    verdict = autf2.commutator_condition(x)
    auto, direct = verdict.holds(), autf2.is_direct(x)
    text = f"automorphism: {'yes' if auto else 'no'}, direct: {'yes' if direct else 'no'}"
    witness = {"tag": verdict.tag, "conjugator": str(verdict.witness) if verdict.witness is not None else None}
    return _out("aut-check", {"automorphism": auto, "direct": direct}, witness, text)


def cmd_aut_decompose(a):
    dec = autf2.nielsen_decompose(autf2.parse_endo(a.endo))
    value = {"inner": str(dec.inner), "braid": str(dec.braid), "dihedral": dec.dihedral}
    return _out("aut-decompose", value, str(dec.recompose()), str(dec))


def cmd_aut_order(a):
    k = autf2.order_aut(autf2.parse_endo(a.endo))
    value = "inf" if k == math.inf else k
    return _out("aut-order", value)


def cmd_aut_torsion(a):
    cls = autf2.torsion_class_aut(autf2.parse_endo(a.endo))
    return _out("aut-torsion", cls.value, str(cls.representative))


def cmd_verify(a):
    results = run_all(seed=a.seed, max_size=a.max_size)
    rows = [f"{'PASS' if r.passed else 'FAIL'}  {r.name:<22} {r.detail}" for r in results]
    value = {r.name: r.passed for r in results}
    ok = all(r.passed for r in results)
    return _out("verify", value, {r.name: r.detail for r in results}, "\n".join(rows)), ok


_COMMANDS = [
    ("braid-nf", cmd_braid_nf, ["word"], "normal form of a braid word"),
    ("braid-eq", cmd_braid_eq, ["word1", "word2"], "decide equality of two braid words"),
    ("braid-conj", cmd_braid_conj, ["word"], "minimal conjugacy representative"),
    ("mat2braid", cmd_mat2braid, ["matrix"], "braid lift of an SL(2,Z) matrix"),
    ("braid2mat", cmd_braid2mat, ["word"], "image of a braid word in SL(2,Z)"),
    ("f", cmd_f, [], "the matrix f_n"),
    ("derived", cmd_derived, ["matrix"], "membership in the commutator subgroup"),
    ("rewrite-f", cmd_rewrite_f, ["matrix"], "word in f_-2, f_-1 for a derived matrix"),
    ("torsion-sl", cmd_torsion_sl, ["matrix"], "conjugacy class in SL(2,Z)"),
    ("torsion-gl", cmd_torsion_gl, ["matrix"], "conjugacy class in GL(2,Z)"),
    ("aut-check", cmd_aut_check, ["endo"], "automorphism test and directness"),
    ("aut-decompose", cmd_aut_decompose, ["endo"], "inner x braid x dihedral decomposition"),
    ("aut-order", cmd_aut_order, ["endo"], "order of an automorphism"),
    ("aut-torsion", cmd_aut_torsion, ["endo"], "torsion class of an automorphism"),
    ("verify", cmd_verify, [], "run the identity suites"),
]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ParseError(message)


def _flags(parser, suppress):
    # subcommands repeat the flags without defaults so either position works
    dflt = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--format", choices=("text", "json"), default=dflt("text"))
    parser.add_argument("--seed", type=int, default=dflt(0))
    parser.add_argument("--max-size", type=int, default=dflt(20))


def build_parser():
    p = _Parser(prog="b3aut", description=__doc__.splitlines()[0])
    _flags(p, False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, fn, args, help_ in _COMMANDS:
        sp = sub.add_parser(name, help=help_)
        _flags(sp, True)
        if name == "f":
            sp.add_argument("n", type=int)
        for arg in args:
            sp.add_argument(arg)
        sp.set_defaults(func=fn)
    return p


def main(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        res = args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (B3AutError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    ok = True
    if isinstance(res[1], bool):
        res, ok = res
    obj, text = res
    print(json.dumps(obj) if args.format == "json" else text, file=stdout)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
