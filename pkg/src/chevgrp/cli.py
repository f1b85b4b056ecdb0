"""Command-line interface.

Every command writes one JSON object per result to stdout.  When stderr is a
terminal a short human-readable summary is written there too.

Exit codes: 0 success, 1 corpus failure, 2 input error, 3 precondition violated.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .chevbasis import WordSyntaxError, parse_word
from .exact import check_ring
from .involutions import (IDENTITY, INVOLUTION, NEITHER, NoMatchingClass, NotAnInvolution,
                          classify, is_involution_mod_center, jordan_partition, order_status)
from .rootsys import build_root_system
from .tables import dump_data, elusive_rows

EXIT_OK, EXIT_CORPUS, EXIT_INPUT, EXIT_MATH = 0, 1, 2, 3
ORBIT_CAP = 100_000      # twisted-class size above which centralizers are not counted


class InputError(Exception):
    pass


class PreconditionError(Exception):
    def __init__(self, msg: str, record: dict | None = None):
        super().__init__(msg)
        self.record = record


@dataclass
class Output:
    out: object = None
    err: object = None

    def __post_init__(self):
        self.out = self.out or sys.stdout
        self.err = self.err or sys.stderr

    def emit(self, rec: dict) -> None:
        self.out.write(json.dumps(rec, ensure_ascii=False, sort_keys=True) + "\n")

    def human(self, text: str) -> None:
        isatty = getattr(self.err, "isatty", None)
        if isatty is not None and isatty():
            self.err.write(text + "\n")


# ---------------------------------------------------------------------------
# classify
# ---------------------------------------------------------------------------

def _group_name(g: str) -> str:
    try:
        return build_root_system(g).name
    except (ValueError, KeyError) as e:
        raise InputError(f"unknown group {g!r}") from e


def _char(c: int) -> int:
    try:
        return check_ring(c)
    except ValueError as e:
        raise InputError(str(e)) from e


def classify_report(group: str, char: int, module: str, word_text: str) -> dict:
    from .weylmod import build_module
    group = _group_name(group)
    char = _char(char)
    try:
        w = parse_word(word_text)
    except WordSyntaxError as e:
        raise InputError(f"cannot parse word: {e}") from e
    try:
        m = build_module(group, module, char)
        g = m.evaluate(w)
    except (ValueError, IndexError, ZeroDivisionError) as e:
        raise InputError(str(e)) from e
    rec = {"group": group, "char": char, "module": module, "word": w.text(), "dim": m.dim,
           "fixed_dim": g.fixed_dim(), "jordan": None, "class_label": None}
    try:
        status = is_involution_mod_center(group, w, char)
    except NotAnInvolution as e:
        rec["order_status"] = NEITHER
        raise PreconditionError(str(e), rec) from e
    rec["order_status"] = status
    if status == NEITHER:
        raise PreconditionError("not an involution modulo the center", rec)
    if order_status(g) in (IDENTITY, INVOLUTION):
        j = jordan_partition(g, 2 if char == 2 else char)
        rec["jordan"] = str(j) if char == 2 else {"plus": j.plus, "minus": j.minus}
    if status != IDENTITY:
        try:
            rec["class_label"] = classify(group, char, w)
        except NoMatchingClass as e:
            rec["class_error"] = str(e)
    return rec


def cmd_classify(args, io: Output) -> int:
    rec = classify_report(args.group, args.char, args.module, args.word)
    io.emit(rec)
    io.human(f"{rec['group']} char {rec['char']} {rec['module']}: fixed dim {rec['fixed_dim']}"
             f"/{rec['dim']}, {rec['order_status']}, class {rec['class_label']}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# corpus
# ---------------------------------------------------------------------------

def cmd_verify_corpus(args, io: Output) -> int:
    from .corpus import CORPUS, run_corpus
    entries = [e for e in CORPUS if not args.only or args.only in e.id]
    results = run_corpus(entries)
    bad = 0
    for r in results:
        if not r.ok:
            bad += 1
        if args.verbose or not r.ok:
            io.emit(r.to_dict())
    io.emit({"summary": True, "total": len(results), "passed": len(results) - bad,
             "failed": bad})
    io.human(f"corpus: {len(results) - bad}/{len(results)} passed")
    return EXIT_OK if bad == 0 else EXIT_CORPUS


# ---------------------------------------------------------------------------
# torus
# ---------------------------------------------------------------------------

def _weyl_word(rs, text: str):
    from .weyl import weyl_group
    W = weyl_group(rs)
    text = text.strip()
    if not text:
        return W.identity
    if "(" in text:
        w = parse_word(text)
        elem = W.identity
        for t in w.tokens:
            if t.kind != "n":
                raise InputError("torus words may only contain n(r) tokens")
            elem = W.compose(elem, W.reflection(abs(t.index)))
        return elem
    try:
        ix = [int(t) for t in text.replace(",", " ").split()]
    except ValueError as e:
        raise InputError(f"cannot parse reflection word {text!r}") from e
    if any(i < 1 or i > rs.rank for i in ix):
        raise InputError("reflection indices must be simple")
    return W.from_word(ix)


def _torus_record(rs, w, twist: str, size: int | None = None) -> dict:
    from .weyl import factor_str, poly_str, sigma_centralizer, torus_order_poly, weyl_group
    W = weyl_group(rs)
    rec = {"group": rs.name, "twist": twist, "rep": list(W.reduced_word(w))}
    try:
        rec["centralizer"] = sigma_centralizer(rs, w, twist, max_orbit=ORBIT_CAP).order
    except ValueError as e:
        rec["centralizer"] = None
        rec["centralizer_note"] = str(e)
    if size is not None:
        rec["class_size"] = size
    try:
        p = torus_order_poly(rs, w, twist)
        rec["torus"] = poly_str(p)
        rec["torus_factored"] = factor_str(p)
    except ValueError as e:
        rec["torus"] = None
        rec["torus_note"] = str(e)
    return rec


def cmd_torus(args, io: Output) -> int:
    from .weyl import sigma_classes
    rs = build_root_system(_group_name(args.group))
    try:
        from .weyl import make_twist
        make_twist(rs, args.twist)
    except ValueError as e:
        raise InputError(str(e)) from e
    if args.word is not None:
        w = _weyl_word(rs, args.word)
        rec = _torus_record(rs, w, args.twist)
        io.emit(rec)
        io.human(f"{rs.name} {args.twist}: |C| = {rec['centralizer']}, torus {rec.get('torus')}")
        return EXIT_OK
    if rs.rank > 4:
        raise InputError("full listing is limited to rank <= 4")
    cs = sigma_classes(rs, args.twist)
    for rep, size in cs.classes:
        rec = _torus_record(rs, rep, args.twist, size)
        io.emit(rec)
        io.human(f"{rec['rep']!s:>30}  |C|={rec['centralizer']:<6} {rec.get('torus_factored')}")
    io.emit({"summary": True, "group": rs.name, "twist": args.twist, "classes": len(cs),
             "weyl_order": cs.group_order})
    return EXIT_OK


# ---------------------------------------------------------------------------
# elusive, propp, dump-data
# ---------------------------------------------------------------------------

def cmd_elusive(args, io: Output) -> int:
    try:
        rows = elusive_rows(args.socle, args.filter)
    except ValueError as e:
        raise InputError(str(e)) from e
    for r in rows:
        io.emit({"table": r.table, "verdict": r.verdict, "socle": r.socle, "h0": r.h0,
                 "conditions": r.conditions})
        io.human(f"[{r.table}] {r.socle}  {r.h0}  {r.conditions}")
    return EXIT_OK


def cmd_propp(args, io: Output) -> int:
    from .propp import FactorFormatError, has_property_P, parse_factors
    try:
        text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
    except OSError as e:
        raise InputError(str(e)) from e
    try:
        factors = parse_factors(text)
    except FactorFormatError as e:
        raise InputError(str(e)) from e
    res = has_property_P(factors)
    io.emit({"verdict": res.verdict, "m": res.m, "S": res.S, "factors": len(factors)})
    io.human(f"property (P): {res.verdict} (m = {res.m}, S = {res.S})")
    return EXIT_OK


def cmd_dump_data(args, io: Output) -> int:
    from .corpus import CORPUS
    io.out.write(dump_data(CORPUS))
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="chevgrp", description=__doc__.splitlines()[0])
    ap.add_argument("--dump-data", action="store_true",
                    help="print the embedded tables and corpus as JSON and exit")
    sub = ap.add_subparsers(dest="cmd")

    p = sub.add_parser("classify", help="fixed points, Jordan data and class of a word")
    p.add_argument("--group", required=True)
    p.add_argument("--char", type=int, default=0, help="0 for Q, else a prime")
    p.add_argument("--module", default="adjoint", choices=("adjoint", "vmin", "natural"))
    p.add_argument("--word", default="")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-corpus", help="replay the embedded regression corpus")
    p.add_argument("--only", default="", help="substring filter on entry ids")
    p.add_argument("--verbose", action="store_true", help="emit passing entries too")
    p.set_defaults(func=cmd_verify_corpus)

    p = sub.add_parser("torus", help="sigma-classes, centralizers and torus orders")
    p.add_argument("--group", required=True)
    p.add_argument("--twist", default="none", choices=("none", "tau", "tau2", "psi"))
    g = p.add_mutually_exclusive_group()
    g.add_argument("--rank-full", action="store_true", help="list every sigma-class")
    g.add_argument("--word", help="simple reflection indices or an n(r) word")
    p.set_defaults(func=cmd_torus)

    p = sub.add_parser("elusive", help="look up the 2-elusivity tables")
    p.add_argument("--socle", required=True)
    p.add_argument("--filter", default=None)
    p.set_defaults(func=cmd_elusive)

    p = sub.add_parser("propp", help="evaluate property (P) on a factor file")
    p.add_argument("--input", required=True, help="path, or - for stdin")
    p.set_defaults(func=cmd_propp)

    p = sub.add_parser("dump-data", help="same as --dump-data")
    p.set_defaults(func=cmd_dump_data)
    return ap


def main(argv=None, out=None, err=None) -> int:
    io = Output(out, err)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK
    if args.dump_data:
        return cmd_dump_data(args, io)
    if not args.cmd:
        ap.print_usage(io.err)
        return EXIT_INPUT
    try:
        return args.func(args, io)
    except InputError as e:
        io.emit({"error": "input", "message": str(e)})
        return EXIT_INPUT
    except PreconditionError as e:
        rec = dict(e.record or {})
        rec.update({"error": "precondition", "message": str(e)})
        io.emit(rec)
        return EXIT_MATH


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
