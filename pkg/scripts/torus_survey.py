#!/usr/bin/env python3
"""Survey sigma-classes of small Weyl groups: centralizers, tori, and torus orders at small q."""

import argparse

from chevgrp.config import TorusSurveyConfig
from chevgrp.weyl import factor_str, sigma_centralizer, sigma_classes, torus_order_poly, weyl_group


def survey(cfg: TorusSurveyConfig):
    for group, twist in cfg.cases:
        cs = sigma_classes(group, twist)
        W = weyl_group(group)
        print(f"# {group} twist={twist}: {len(cs)} classes, |W| = {cs.group_order}")
        check = 0
        for rep, size in cs.classes:
            c = sigma_centralizer(group, rep, twist).order
            check += cs.group_order // c
            p = torus_order_poly(group, rep, twist)
            vals = " ".join(f"{int(p(q)):>8}" for q in cfg.sample_q)
            word = "".join(map(str, W.reduced_word(rep))) or "e"
            print(f"  {word:>24} |C|={c:<5} {factor_str(p):36} {vals}")
        assert check == cs.group_order, "class equation failed"


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--case", action="append", metavar="GROUP:TWIST",
                    help="e.g. F4:none or D4:tau; repeatable")
    ap.add_argument("--q", nargs="*", type=int, default=list(TorusSurveyConfig.sample_q))
    a = ap.parse_args()
    cases = tuple(tuple(c.split(":")) for c in a.case) if a.case else TorusSurveyConfig.cases
    survey(TorusSurveyConfig(cases, tuple(a.q)))


if __name__ == "__main__":
    main()
