#!/usr/bin/env python3
"""E7: the longest-element lift w, the E6 longest element h and t = h(2,-1).

Checks that w centralizes every n(i) and h(i,-1) on V_min and reports the
adjoint fixed-point dimensions of t, thw and w over each configured ring.
"""

import argparse

from chevgrp.config import E7ExampleConfig
from chevgrp.involutions import classify
from chevgrp.weylmod import build_module

W_WORD = "n(1)*n(2)*n(5)*n(7)*n(37)*n(55)*n(61)"
H_WORD = "n(2)*n(28)*n(38)*n(46)"


def run(cfg: E7ExampleConfig):
    if cfg.battery:
        m = build_module("E7", "vmin", 0)
        w = m.evaluate(W_WORD)
        n_ok = sum(w.commutes_with(m.n_matrix(i)) for i in range(1, 64))
        h_ok = sum(w.commutes_with(m.h_matrix(i, -1)) for i in range(1, 64))
        print(f"w commutes with {n_ok}/63 n(i) and {h_ok}/63 h(i,-1)")
    elems = {"t": "h(2,-1)", "thw": f"h(2,-1)*{H_WORD}*{W_WORD}", "w": W_WORD}
    for ring in cfg.rings:
        adj = build_module("E7", "adjoint", ring)
        dims = {k: adj.evaluate(v).fixed_dim() for k, v in elems.items()}
        labels = {k: classify("E7", ring, v) for k, v in elems.items()}
        print(f"ring {ring or 'Q'}: " + ", ".join(f"{k} {dims[k]} ({labels[k]})" for k in elems))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rings", nargs="*", type=int, default=list(E7ExampleConfig.rings))
    ap.add_argument("--no-battery", action="store_true")
    a = ap.parse_args()
    run(E7ExampleConfig(tuple(a.rings), not a.no_battery))


if __name__ == "__main__":
    main()
