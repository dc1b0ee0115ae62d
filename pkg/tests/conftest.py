"""Shared fixtures: exhaustive membership tables reused across files."""

import pytest

from nyldon import Alphabet, is_lyndon, is_nyldon

BINARY = Alphabet(2)


@pytest.fixture(scope="session")
def binary_nyldon_upto_12():
    """Every binary word of length 1..12 mapped to its Nyldon status."""
    return {w: is_nyldon(w) for w in BINARY.words_upto(12)}


@pytest.fixture(scope="session")
def binary_lyndon_upto_12():
    return {w: is_lyndon(w) for w in BINARY.words_upto(12)}
