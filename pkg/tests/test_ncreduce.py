import pytest
from hypothesis import given, settings, strategies as st

from ybx.exactpoly import BETA, ExactPoly, var
from ybx.ncreduce import (AlgebraParams, NonTermination, B_poly, coxeter_grothendieck_check,
                          coxeter_reduced, count_words, dominant_reduced, fold_reduce,
                          is_reduced, lagrange_check, longest_reduced, multiparam_narayana,
                          parse_word, reduce_specialized, reversal_check, specialize_nc)
from ybx.numfam import catalan, narayana_poly

compositions = st.lists(st.integers(0, 3), min_size=1, max_size=4).filter(lambda c: sum(c) <= 7)


def test_two_letter_base_case():
    # x12 x23 = x13 x12 + x23 x13 + beta x13 + alpha
    red = fold_reduce(parse_word("12,23"))
    assert red == {((1, 3),): ExactPoly.from_varid(BETA), ((1, 3), (1, 2)): 1,
                   ((2, 3), (1, 3)): 1, (): var("α")}
    assert all(is_reduced(w) for w in red)
    assert () not in fold_reduce(parse_word("12,23"), AlgebraParams(alpha=0))


def test_empty_word():
    assert fold_reduce(()) == {(): 1}
    assert reduce_specialized((), AlgebraParams()) == 1


@pytest.mark.parametrize("m", range(1, 7))
def test_coxeter_word_narayana(m):
    P = specialize_nc(coxeter_reduced(m, AlgebraParams(alpha=0)))
    assert P.subs({BETA: ExactPoly.from_varid(BETA) - 1}) == narayana_poly(m)
    assert count_words(coxeter_reduced(m, AlgebraParams(alpha=0))) >= catalan(m) // 2


@settings(max_examples=25, deadline=None)
@given(compositions)
def test_reversal_symmetry(ms):
    assert reversal_check(ms)


@settings(max_examples=25, deadline=None)
@given(compositions)
def test_dominant_nonnegative_in_beta_plus_one(ms):
    cs = dominant_reduced(ms).int_coeffs(BETA, -1)
    assert min(cs) >= 0


@pytest.mark.parametrize("n", range(2, 6))
def test_longest_nonnegative_shifted(n):
    assert min(longest_reduced(n).int_coeffs(BETA, -1)) >= 0


@pytest.mark.parametrize("m", range(1, 5))
def test_coxeter_grothendieck(m):
    assert coxeter_grothendieck_check(m)


@pytest.mark.parametrize("m", range(1, 6))
def test_lagrange(m):
    assert lagrange_check(m)


def test_b_poly_counts_dissections():
    # dissections of a convex (m+2)-gon: little Schroder numbers 1, 3, 11, 45
    assert [B_poly(m).evaluate({v: 1 for v in B_poly(m).variables()}) for m in (1, 2, 3, 4)] == \
        [1, 3, 11, 45]


def test_multiparam_narayana_specializes():
    P = multiparam_narayana(4)
    flat = P.subs({var("β", i).variables()[0]: var("β") for i in range(1, 4)})
    assert flat == narayana_poly(4)


def test_fuel_exhaustion():
    with pytest.raises(NonTermination):
        fold_reduce(parse_word("12,23,34,45,56"), AlgebraParams(), fuel=3)
