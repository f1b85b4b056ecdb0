import io
import json

import pytest

from chevgrp.cli import main
from chevgrp.corpus import CORPUS
from chevgrp.propp import format_factors
from chevgrp.tables import load_data

from .test_propp import PGL27


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    rc = main(list(argv), out, err)
    recs = [json.loads(line) for line in out.getvalue().splitlines() if line.strip()]
    return rc, recs, err.getvalue()


def test_classify_e8():
    rc, [r], err = run("classify", "--group", "E8", "--char", "0", "--word", "h(1,-1)")
    assert rc == 0 and r["fixed_dim"] == 136 and r["class_label"] == "A₁E₇"
    assert r["jordan"] == {"plus": 136, "minus": 112}
    assert err == ""        # not a terminal


def test_classify_f4_p2():
    rc, [r], _ = run("classify", "--group", "F4", "--char", "2", "--module", "vmin",
                     "--word", "x(1,1)*x(4,1)")
    assert rc == 0 and r["jordan"] == "(2^12, 1^2)" and r["fixed_dim"] == 14
    assert r["class_label"] == "A₁Ã₁" and r["order_status"] == "involution"


def test_classify_identity():
    rc, [r], _ = run("classify", "--group", "G2", "--module", "vmin", "--word", "")
    assert rc == 0 and r["fixed_dim"] == r["dim"] == 7
    assert r["order_status"] == "identity" and r["class_label"] is None


def test_classify_order4():
    rc, [r], _ = run("classify", "--group", "E7", "--module", "vmin", "--word", "n(2)*n(5)*n(7)")
    assert rc == 0 and r["order_status"] == "order-4-central-square"
    assert r["jordan"] is None and r["class_label"] == "E₆T₁"


@pytest.mark.parametrize("argv", [
    ("classify", "--group", "Q9"),
    ("classify", "--group", "G2", "--word", "x(1"),
    ("classify", "--group", "G2", "--char", "4", "--word", "n(1)"),
    ("classify", "--group", "G2", "--word", "n(99)"),
    ("torus", "--group", "E6", "--rank-full"),
    ("torus", "--group", "G2", "--word", "9"),
    ("elusive", "--socle", "H4"),
    ("propp", "--input", "/nonexistent/file"),
    ("nosuchcommand",),
    (),
])
def test_input_errors(argv):
    rc, _, _ = run(*argv)
    assert rc == 2


def test_precondition_error():
    rc, [r], _ = run("classify", "--group", "G2", "--word", "x(1,1)")
    assert rc == 3 and r["error"] == "precondition" and r["order_status"] == "neither"


def test_torus_f4_listing():
    rc, recs, _ = run("torus", "--group", "F4", "--rank-full")
    assert rc == 0
    summary = recs[-1]
    assert summary["classes"] == 25 and summary["weyl_order"] == 1152
    body = recs[:-1]
    assert sum(r["class_size"] for r in body) == 1152
    assert any(r["torus"] == "q^4 + 2q^2 + 1" and r["centralizer"] == 96 for r in body)


def test_torus_g2_identity():
    rc, recs, _ = run("torus", "--group", "G2")
    ident = next(r for r in recs[:-1] if r["rep"] == [])
    assert ident["torus_factored"] == "(q - 1)^2"


def test_torus_3d4():
    rc, recs, _ = run("torus", "--group", "D4", "--twist", "tau", "--rank-full")
    assert rc == 0 and recs[-1]["classes"] == 7
    assert {r["torus"] for r in recs[:-1]} >= {"q^4 - q^2 + 1"}


def test_torus_word_and_cap():
    rc, [r], _ = run("torus", "--group", "E6", "--twist", "tau", "--word", "")
    assert r["torus_factored"] == "(q - 1)^4(q + 1)^2"
    rc, [r], _ = run("torus", "--group", "E8", "--word", "1 2 3 4 5 6 7 8")
    assert rc == 0 and r["centralizer"] is None and "centralizer_note" in r
    assert "q^8 + q^7 - q^5 - q^4 - q^3 + q + 1" == r["torus"]
    rc, [r], _ = run("torus", "--group", "G2", "--word", "n(1)*n(2)")
    assert r["centralizer"] == 6


def test_torus_is_deterministic():
    assert run("torus", "--group", "B3") == run("torus", "--group", "B3")


def test_elusive():
    rc, recs, _ = run("elusive", "--socle", "3D4")
    assert rc == 0 and any("(q⁴−q²+1).4" in r["h0"] for r in recs)
    rc, recs, _ = run("elusive", "--socle", "2B2")
    assert rc == 0 and recs == []


def test_propp_file_replay(tmp_path):
    f = tmp_path / "pgl27.txt"
    f.write_text(format_factors(PGL27))
    rc, [r], _ = run("propp", "--input", str(f))
    assert rc == 0 and (r["verdict"], r["m"], r["S"]) == ("holds", 5, 10)
    f.write_text("1 3 0 0 yes\n")
    assert run("propp", "--input", str(f))[1][0]["verdict"] == "fails(a)"
    f.write_text("1 1 0 0 yes\n5 1 1 1 no yes\n")
    assert run("propp", "--input", str(f))[1][0]["verdict"] == "fails(b)"
    f.write_text("1 1 0\n")
    assert run("propp", "--input", str(f))[0] == 2


def test_dump_data_flag():
    out = io.StringIO()
    assert main(["--dump-data"], out) == 0
    text = out.getvalue()
    b = load_data(text)
    assert b.corpus == list(CORPUS)
    out2 = io.StringIO()
    main(["dump-data"], out2)
    assert out2.getvalue() == text


def test_verify_corpus_subset():
    rc, recs, _ = run("verify-corpus", "--only", "f4-example", "--verbose")
    assert rc == 0 and recs[-1] == {"summary": True, "total": 3, "passed": 3, "failed": 0}
