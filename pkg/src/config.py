"""
Configuration settings for the verification engine.
"""

from typing import List, Sequence


class Config:
    """Configuration constants and settings."""

    # Field settings
    SUPPORTED_PRIMES = (2, 3, 5)
    MIN_N = 3

    # Budget defaults
    DEFAULT_CAP_OBJECTS = 2
    DEFAULT_CAP_SOLUTIONS = 256
    DEFAULT_CAP_INSTANCES = 24
    DEFAULT_SEED = 0

    # Search limits
    ISO_SEARCH_LIMIT = 256
    WRAP_DFS_NODE_LIMIT = 4096
    SQUARES_PER_PAIR = 2

    # Report settings
    REPORT_INDENT = 2
    OUTPUT_FILENAME_PREFIX = "report"


class Task:
    """Enumeration of batch tasks."""
    VALIDATE_CATEGORY = "validate-category"
    CHECK_AXIOMS = "check-axioms"
    VALIDATE_MUTATION_PAIR = "validate-mutation-pair"
    BUILD_QUOTIENT = "build-quotient"
    VERIFY_THEOREM = "verify-theorem"
    VERIFY_FROBENIUS = "verify-frobenius"

    ALL = (
        VALIDATE_CATEGORY,
        CHECK_AXIOMS,
        VALIDATE_MUTATION_PAIR,
        BUILD_QUOTIENT,
        VERIFY_THEOREM,
        VERIFY_FROBENIUS,
    )


class OutputFormat:
    """Enumeration of output formats."""
    JSON = "JSON"
    CSV = "CSV"
    TXT = "TXT"


class Verdict:
    """Three-valued verdicts of bounded checks."""
    PASS = "pass"
    FAIL = "fail"
    INCONCLUSIVE = "inconclusive"

    @staticmethod
    def combine(verdicts: Sequence[str]) -> str:
        """Fail dominates inconclusive, which dominates pass."""
        if Verdict.FAIL in verdicts:
            return Verdict.FAIL
        if Verdict.INCONCLUSIVE in verdicts:
            return Verdict.INCONCLUSIVE
        return Verdict.PASS


class Membership:
    """Answers of an angle-class membership oracle."""
    IN = "in"
    OUT = "out"
    INCONCLUSIVE = "inconclusive"


class EReading:
    """Readings of the internal angle class used for Frobenius data."""
    EXACT = "exact"
    ALL = "all"


class AngleOracle:
    """Built-in angle class selectors of the category file."""
    SPLIT = "split"
    WRAP_EXACT = "wrap-exact"
    LIST = "list"


def parse_generator_list(text: str) -> List[str]:
    """Parse a comma or whitespace separated list of generator names."""
    if not text:
        return []

    names = []
    for chunk in text.replace(",", " ").split():
        chunk = chunk.strip()
        if chunk and chunk not in names:
            names.append(chunk)
    return names
