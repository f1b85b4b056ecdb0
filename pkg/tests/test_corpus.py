import dataclasses

import pytest

from chevgrp.chevbasis import parse_word
from chevgrp.corpus import CORPUS, CorpusEntry, ModuleCache, run_corpus, run_entry
from chevgrp.involutions import INVOLUTION, order_status


@pytest.fixture(scope="module")
def results():
    return run_corpus()


def test_full_corpus_passes(results):
    bad = [r.to_dict() for r in results if not r.ok]
    assert bad == []
    assert len(results) == len(CORPUS)


def test_ids_unique():
    ids = [e.id for e in CORPUS]
    assert len(ids) == len(set(ids))


def test_battery_included():
    bat = [e for e in CORPUS if e.id.startswith("e7-battery")]
    assert len(bat) == 126 and all(e.expected is True for e in bat)


def test_one_corruption_one_failure(results):
    target = next(e for e in CORPUS if e.id == "e8-d8-label")
    bad = dataclasses.replace(target, expected="A₁E₇")
    entries = [bad if e is target else e for e in CORPUS
               if e.kind != "commutes" or e is target]
    out = run_corpus(entries)
    assert [r.entry.id for r in out if not r.ok] == ["e8-d8-label"]


def test_corrupt_jordan_constant():
    e = next(e for e in CORPUS if e.id == "f4-w0-p2")
    assert run_entry(e).ok
    assert not run_entry(dataclasses.replace(e, expected="(2^23, 1^6)")).ok


def test_entry_validation():
    with pytest.raises(ValueError):
        CorpusEntry("x", "G2", 0, "vmin", "n(1)", "eigen", 1, "")
    with pytest.raises(TypeError):
        CorpusEntry("x", "G2", 0, "vmin", "n(1)", "fixed_dim", "7", "")


def _unit_signs(word: str) -> bool:
    return all(t.kind == "n" or t.coeff in (1, -1) for t in parse_word(word).tokens)


def rational_vs_odd_cases():
    seen = set()
    for e in CORPUS:
        if e.char == 0 and e.kind != "commutes" and _unit_signs(e.word):
            key = (e.group, "vmin" if e.module == "natural" else e.module, e.word)
            if key not in seen:
                seen.add(key)
                yield key


@pytest.mark.slow
def test_char0_matches_odd_p():
    cache = ModuleCache()
    checked = 0
    for group, module, word in rational_vs_odd_cases():
        g0 = cache.get(group, module, 0).evaluate(word)
        if order_status(g0) != INVOLUTION:
            continue
        for p in (3, 5, 7):
            gp = cache.get(group, module, p).evaluate(word)
            assert gp.fixed_dim() == g0.fixed_dim(), (group, module, word, p)
        checked += 1
    assert checked >= 20
