"""Lyndon and Nyldon words: factorizations, conjugacy, eliminations, codes."""

from .words import (
    Alphabet,
    Word,
    apply_permutation,
    format_factorization,
    is_primitive,
    lex_compare,
    reverse_permutation,
    rotations,
)
from .lyndon import enumerate_lyndon, is_lyndon, lyndon_conjugate, lyndon_factorize
from .factorization import (
    StandardFactorization,
    check_prefix_constraint,
    enumerate_nyldon,
    forbidden_prefix_family,
    is_forbidden_prefix_upto,
    is_nyldon,
    longest_nyldon_suffix,
    nyldon_factorize,
    standard_factorization,
)
from .conjugacy import (
    lyndon_to_nyldon,
    melancon_nyldon_conjugate,
    nyldon_conjugate_bruteforce,
    nyldon_to_lyndon,
)
from .lazard import (
    LazardStep,
    LazardTerminationError,
    LazardTrace,
    lazard_extract,
    lazard_run,
    lazard_stepcount_nyldon,
)
from .codes import (
    CodeVerdict,
    in_code_star,
    is_circular_bounded,
    is_comma_free_definitional,
    is_comma_free_uniform,
    nyldon_code,
    nyldon_comma_free_classification,
    nyldon_comma_free_table,
)
from .oracle import (
    count_by_length,
    counting_bijection,
    exhaustive_factorizations,
    necklace_count,
    recursive_is_lyndon,
    recursive_is_nyldon,
)

__all__ = [
    "Alphabet",
    "CodeVerdict",
    "LazardStep",
    "LazardTerminationError",
    "LazardTrace",
    "StandardFactorization",
    "Word",
    "apply_permutation",
    "check_prefix_constraint",
    "count_by_length",
    "counting_bijection",
    "enumerate_lyndon",
    "enumerate_nyldon",
    "exhaustive_factorizations",
    "forbidden_prefix_family",
    "format_factorization",
    "in_code_star",
    "is_circular_bounded",
    "is_comma_free_definitional",
    "is_comma_free_uniform",
    "is_forbidden_prefix_upto",
    "is_lyndon",
    "is_nyldon",
    "is_primitive",
    "lazard_extract",
    "lazard_run",
    "lazard_stepcount_nyldon",
    "lex_compare",
    "longest_nyldon_suffix",
    "lyndon_conjugate",
    "lyndon_factorize",
    "lyndon_to_nyldon",
    "melancon_nyldon_conjugate",
    "necklace_count",
    "nyldon_code",
    "nyldon_comma_free_classification",
    "nyldon_comma_free_table",
    "nyldon_conjugate_bruteforce",
    "nyldon_factorize",
    "nyldon_to_lyndon",
    "recursive_is_lyndon",
    "recursive_is_nyldon",
    "reverse_permutation",
    "rotations",
    "standard_factorization",
]
