"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from b3aut.braid3 import BraidWord
from b3aut.words import FreeWord

letters = st.sampled_from((1, -1, 2, -2))
raw_words = st.lists(letters, max_size=30)


def free_words(max_size=20):
    return st.lists(letters, max_size=max_size).map(FreeWord)


def braid_words(max_size=40):
    return st.lists(letters, max_size=max_size).map(BraidWord)
