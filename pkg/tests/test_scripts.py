import runpy
import sys
from pathlib import Path

import pytest

SCRIPTS = Path(__file__).resolve().parents[1] / "scripts"


def run_script(name, *argv, monkeypatch):
    monkeypatch.setattr(sys, "argv", [name, *argv])
    runpy.run_path(str(SCRIPTS / name), run_name="__main__")


def test_reproduce_tables(capsys, monkeypatch):
    with pytest.raises(SystemExit) as e:
        run_script("reproduce_tables.py", "--groups", "G2", "F4", "--odd-rings", "0", "5",
                   monkeypatch=monkeypatch)
    assert e.value.code == 0
    assert "0 disagreement(s)" in capsys.readouterr().out


def test_torus_survey(capsys, monkeypatch):
    run_script("torus_survey.py", "--case", "D4:tau", "--q", "2", monkeypatch=monkeypatch)
    out = capsys.readouterr().out
    assert "7 classes" in out and "(q^4 - q^2 + 1)" in out


def test_e7_example(capsys, monkeypatch):
    run_script("e7_example.py", "--rings", "0", monkeypatch=monkeypatch)
    out = capsys.readouterr().out
    assert "63/63 n(i) and 63/63 h(i,-1)" in out
    assert "t 69 (A₁D₆), thw 79 (E₆T₁), w 63 (A₇)" in out
