from hypothesis import given, strategies as st

from ybx.perm import Permutation, all_perms, from_code


perms = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1))))


@given(perms)
def test_inverse_and_length(w):
    w = Permutation(w)
    assert (w * w.inverse()) == Permutation.identity(w.n)
    assert w.length() == w.inverse().length() == sum(w.code())


@given(perms)
def test_code_roundtrip(w):
    w = Permutation(w)
    assert from_code(w.code()).trimmed() == w.trimmed()


@given(perms)
def test_reduced_word_has_length(w):
    w = Permutation(w)
    assert len(w.reduced_word()) == w.length()


def test_counts():
    assert sum(1 for _ in all_perms(5)) == 120
    assert Permutation.longest(4).length() == 6
    # dominant permutations are the 132-avoiding ones, counted by Catalan numbers
    assert sum(1 for w in all_perms(5) if w.is_dominant()) == 42
