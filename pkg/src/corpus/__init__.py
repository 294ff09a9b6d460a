"""
Built-in example structures exercising every pipeline.
"""

from .entries import (
    CORPUS,
    DEFAULT_N,
    CorpusEntry,
    export_entry,
    load_corpus,
    load_entry,
    local_algebra_candidate,
    local_algebra_category,
    screen_entry,
    semisimple_category,
    split_structure,
    two_simple_structure,
    zero_structure,
)

__all__ = [
    'CORPUS',
    'CorpusEntry',
    'DEFAULT_N',
    'export_entry',
    'load_corpus',
    'load_entry',
    'local_algebra_candidate',
    'local_algebra_category',
    'screen_entry',
    'semisimple_category',
    'split_structure',
    'two_simple_structure',
    'zero_structure',
]
