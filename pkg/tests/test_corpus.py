import pytest

from src.config import Verdict
from src.corpus import CORPUS, DEFAULT_N, load_corpus, load_entry, screen_entry, split_structure
from src.errors import PresentationError


def test_corpus_names():
    assert sorted(CORPUS) == [
        "dual-numbers", "split-1-id", "split-2-swap", "two-simple-id", "two-simple-swap", "zero",
    ]


def test_entries_honour_n():
    assert load_entry("split-1-id").structure.n == DEFAULT_N
    entry = load_entry("split-2-swap", n=5)
    assert entry.structure.n == 5
    assert entry.name == "split-p2-g2-swap-n5"


def test_unknown_entry_is_rejected():
    with pytest.raises(ValueError, match="Unknown corpus entry"):
        load_entry("klein-bottle")


def test_unsupported_prime_is_rejected():
    with pytest.raises(PresentationError):
        split_structure(7, 1)


def test_describe_lists_subcategories():
    info = load_entry("two-simple-swap").describe()
    assert info['name'] == "two-simple-swap-p2-n4"
    assert info['Z'] == ["s0", "s1"]
    assert info['D'] == []
    assert info['angles'] == "split"


def test_corpus_loads_every_entry(small_budget):
    entries = load_corpus(budget=small_budget, n=3)
    assert len(entries) == len(CORPUS)
    assert all(entry.structure.n == 3 for entry in entries)


@pytest.mark.parametrize("name", ["split-1-id", "two-simple-id", "zero"])
def test_split_entries_pass_the_screen(name, small_budget):
    assert screen_entry(load_entry(name), small_budget).verdict == Verdict.PASS
