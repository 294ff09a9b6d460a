"""Shared fixtures: small corpus structures and tight budgets."""

import pytest

from src.corpus import load_entry, local_algebra_category
from src.models import Budget


@pytest.fixture
def small_budget():
    return Budget(cap_objects=1, cap_solutions=32, cap_instances=6, seed=0)


@pytest.fixture
def split_one():
    return load_entry("split-1-id")


@pytest.fixture
def split_swap():
    return load_entry("split-2-swap")


@pytest.fixture
def dual_numbers():
    return local_algebra_category()


DUAL_NUMBERS_FILE = """\
# free modules over F_2[x]/(x^2)
field p=2
n=4
name dual-numbers
gen P
hom P P dim=2 basis=id,x
comp id id = id
comp x id = x
comp id x = x
rel x x = 0
angles wrap-exact
sub Z = P
sub D =
"""


@pytest.fixture
def dual_numbers_text():
    return DUAL_NUMBERS_FILE
