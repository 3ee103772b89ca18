import pytest
from hypothesis import given, strategies as st

from ybx.exactpoly import BETA, Q, T, ExactPoly
from ybx.numfam import (FAMILIES, HILB_FORMS, IDENTITY_SUITES, bell, catalan, catalan_hankel,
                        catalan_hankel_product, delannoy, egf_check, family, fine,
                        fuss_catalan, hilbert_series, identity_suite, koszul_check,
                        lagrange_inverse, lagrange_inverse_poly, motzkin, narayana,
                        narayana_poly, q_catalan, q_schroder, riordan, schroder_large,
                        schroder_poly, schroder_small)


@given(st.integers(1, 12))
def test_narayana_rows(n):
    assert sum(narayana(n, k) for k in range(n)) == catalan(n)
    cs = narayana_poly(n).int_coeffs(BETA)
    assert cs == cs[::-1]


@given(st.integers(0, 10))
def test_q_catalan_at_one(n):
    assert q_catalan(n).evaluate({Q: 1}) == catalan(n)


@given(st.integers(1, 6))
def test_q_schroder_specializations(n):
    S = q_schroder(n)
    assert S.subs({Q: 1}) == schroder_poly(n)
    assert S.subs({BETA: 0}) == q_catalan(n)


def test_small_values():
    assert [motzkin(n) for n in range(8)] == [1, 1, 2, 4, 9, 21, 51, 127]
    assert [riordan(n) for n in range(8)] == [1, 0, 1, 1, 3, 6, 15, 36]
    assert [fine(n) for n in range(6)] == [1, 0, 1, 2, 6, 18]
    assert [bell(n) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]
    assert [schroder_large(n) for n in range(5)] == [1, 2, 6, 22, 90]
    assert [schroder_small(n) for n in range(1, 5)] == [1, 3, 11, 45]
    assert delannoy(3, 3) == 63
    assert fuss_catalan(3, 3) == 12


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in range(0, 4) if k <= n])
def test_catalan_hankel(n, k):
    assert catalan_hankel(n, k) == catalan_hankel_product(n, k)


def test_family_dispatch():
    assert family("narayana_poly", 4).tuple_form(BETA) == "(1,6,6,1)_β"
    with pytest.raises(ValueError):
        family("nope", 1)
    assert set(FAMILIES) >= {"catalan", "q_schroder", "vsasm"}


@pytest.mark.parametrize("form", ["6T", "CYB", "4NT"])
@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_koszul(form, n):
    assert koszul_check(form, n)


def test_hilbert_forms_run():
    for form in HILB_FORMS:
        m = 2 if form == "super6Tdual" else None
        assert hilbert_series(form, 3, m) is not None
    with pytest.raises(ValueError):
        hilbert_series("nope", 3)


def test_anc_dimension():
    h = hilbert_series("ANC", 4)
    assert h.evaluate({T: 1}) == 144


def test_egf():
    assert egf_check("6T") and egf_check("CYB")


@pytest.mark.parametrize("n", range(1, 7))
def test_lagrange_two_ways(n):
    P = lagrange_inverse_poly(n)
    ys = [ExactPoly.from_varid(v) for v in sorted(
        {v for k in range(1, n + 1) for v in lagrange_inverse_poly(k).variables()})]
    W = lagrange_inverse(ys, n)
    assert W[n] == P


@pytest.mark.parametrize("name", IDENTITY_SUITES)
def test_identity_suites(name):
    assert all(r["status"] == "pass" for r in identity_suite(name))
