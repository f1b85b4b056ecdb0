#!/usr/bin/env python3
"""Recompute the involution class tables from their representative words.

Prints one row per class with the tabulated and the computed invariants.
Exit status is nonzero if any row disagrees.
"""

import argparse
import sys

from chevgrp.config import TableRunConfig
from chevgrp.involutions import classify, jordan_partition
from chevgrp.tables import JordanType, class_records
from chevgrp.weylmod import build_module


def invariant(group, which, ring, word):
    g = build_module(group, which, ring).evaluate(word)
    return jordan_partition(g, 2) if ring == 2 else g.fixed_dim()


def agrees(tab, got):
    if tab is None:
        return True
    if isinstance(tab, tuple):
        return got in tab
    return tab == got


def run(cfg: TableRunConfig) -> int:
    bad = 0
    for rec in class_records():
        if rec.group not in cfg.groups:
            continue
        rings = (2,) if rec.parity == "even" else cfg.odd_rings
        small = "natural" if rec.group == "D4" else "vmin"
        for ring in rings:
            got_v = invariant(rec.group, small, ring, rec.word) \
                if cfg.include_vmin and rec.vmin is not None else None
            got_a = invariant(rec.group, "adjoint", ring, rec.word) \
                if rec.adjoint is not None else None
            ok = (agrees(rec.vmin, got_v) if got_v is not None else True) and \
                agrees(rec.adjoint, got_a)
            # the D4 natural module alone cannot see the label at p odd
            label = classify(rec.group, ring, rec.word) if rec.group != "D4" or ring == 2 else "-"
            ok = ok and label in (rec.label, "-")
            bad += not ok
            fmt = lambda v: "" if v is None else (str(v) if isinstance(v, (int, JordanType))
                                                  else "/".join(map(str, v)))
            print(f"{'ok ' if ok else 'BAD'} {rec.group:3} p={ring or 'Q':<2} {rec.label:10} "
                  f"{rec.word:40} vmin {fmt(got_v):14} adj {fmt(got_a)}")
    print(f"{bad} disagreement(s)")
    return 1 if bad else 0


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--groups", nargs="*", default=list(TableRunConfig.groups))
    ap.add_argument("--odd-rings", nargs="*", type=int, default=list(TableRunConfig.odd_rings))
    ap.add_argument("--no-vmin", action="store_true")
    a = ap.parse_args()
    cfg = TableRunConfig(tuple(a.groups), tuple(a.odd_rings), not a.no_vmin)
    sys.exit(run(cfg))


if __name__ == "__main__":
    main()
