import pytest

from arczeta import (
    MINUS,
    NAIVE,
    PLUS,
    SELECTORS,
    LaurentPolynomial,
    QuadraticGerm,
    QuadricAffine,
    TruncatedSeries,
    beta_eval,
    coefficient_closed_form,
    naive_t2_coefficient,
    signed_t2_coefficient,
    stratify,
    zeta_closed_form,
    zeta_series,
)
from arczeta.errors import InvalidGerm
from util import signature_pairs


def mono(exp, coeff=1):
    return LaurentPolynomial.monomial(exp, coeff)


def test_germ_validation():
    QuadraticGerm(dim=3, plus=2, minus=1)
    with pytest.raises(InvalidGerm):
        QuadraticGerm(dim=0, plus=1, minus=0)
    with pytest.raises(InvalidGerm):
        QuadraticGerm(dim=3, plus=0, minus=0)
    with pytest.raises(InvalidGerm):
        QuadraticGerm(dim=2, plus=2, minus=1)
    with pytest.raises(InvalidGerm):
        QuadraticGerm(dim=2, plus=-1, minus=2)


def test_stratify_examples():
    report = stratify(QuadraticGerm(dim=3, plus=2, minus=1), 2, PLUS)
    assert report.total_beta == mono(5) + mono(4)
    assert len(report.strata) == 1
    _, expression = report.strata[0]
    assert QuadricAffine(1, 2, 1) in expression.children

    report = stratify(QuadraticGerm(dim=2, plus=1, minus=1), 3, PLUS)
    assert report.total_beta == mono(4, 2) - mono(3, 2)

    report = stratify(QuadraticGerm(dim=1, plus=1, minus=0), 3, PLUS)
    assert report.total_beta == LaurentPolynomial.zero()


def test_stratify_report_invariants():
    for dim in range(1, 5):
        for plus, minus in signature_pairs(dim):
            germ = QuadraticGerm(dim=dim, plus=plus, minus=minus)
            for selector in SELECTORS:
                for n in range(1, 7):
                    report = stratify(germ, n, selector)
                    total = LaurentPolynomial.zero()
                    for _, expression in report.strata:
                        total = total + beta_eval(expression)
                    assert total == report.total_beta
                    if not report.total_beta.is_zero():
                        assert report.total_beta.degree() <= n * dim


def test_stratify_rejects_bad_input():
    germ = QuadraticGerm(dim=2, plus=1, minus=1)
    with pytest.raises(ValueError):
        stratify(germ, 0, PLUS)
    with pytest.raises(ValueError):
        stratify(germ, 2, "sideways")
    with pytest.raises(InvalidGerm):
        stratify("not a germ", 2, PLUS)


def test_zeta_of_one_variable_square():
    germ = QuadraticGerm(dim=1, plus=1, minus=0)
    expected = TruncatedSeries(6, {2: mono(-1, 2), 4: mono(-2, 2), 6: mono(-3, 2)})
    assert zeta_series(germ, PLUS, 6) == expected
    assert zeta_series(germ, MINUS, 6).is_zero()


def test_zeta_example_series():
    germ = QuadraticGerm(dim=3, plus=2, minus=1)
    series = zeta_series(germ, PLUS, 2)
    assert series == TruncatedSeries(2, {2: mono(-1) + mono(-2)})


def test_first_coefficient_always_vanishes():
    for dim in range(1, 6):
        for plus, minus in signature_pairs(dim):
            germ = QuadraticGerm(dim=dim, plus=plus, minus=minus)
            for selector in SELECTORS:
                assert zeta_series(germ, selector, 1).is_zero()


def test_stratified_coefficients_match_closed_form():
    for dim in range(1, 6):
        for plus, minus in signature_pairs(dim):
            germ = QuadraticGerm(dim=dim, plus=plus, minus=minus)
            for selector in SELECTORS:
                series = zeta_series(germ, selector, 6)
                assert series == zeta_closed_form(germ, selector, 6)
                for n in range(1, 7):
                    assert series.coefficient(n) == coefficient_closed_form(
                        germ, n, selector
                    )


def test_stabilization_under_extra_coordinates():
    for dim in range(1, 6):
        for plus, minus in signature_pairs(dim):
            germ = QuadraticGerm(dim=dim, plus=plus, minus=minus)
            grown = QuadraticGerm(dim=dim + 1, plus=plus, minus=minus)
            for selector in SELECTORS:
                assert zeta_series(germ, selector, 6) == zeta_series(grown, selector, 6)


def test_odd_coefficients_ignore_the_sign():
    for dim in range(1, 6):
        for plus, minus in signature_pairs(dim):
            germ = QuadraticGerm(dim=dim, plus=plus, minus=minus)
            plus_series = zeta_series(germ, PLUS, 7)
            minus_series = zeta_series(germ, MINUS, 7)
            for n in range(1, 8, 2):
                assert plus_series.coefficient(n) == minus_series.coefficient(n)


def test_sign_swap_exchanges_signed_zetas():
    for dim in range(1, 6):
        for plus, minus in signature_pairs(dim):
            germ = QuadraticGerm(dim=dim, plus=plus, minus=minus)
            swapped = QuadraticGerm(dim=dim, plus=minus, minus=plus)
            assert zeta_series(germ, PLUS, 6) == zeta_series(swapped, MINUS, 6)
            assert zeta_series(germ, NAIVE, 6) == zeta_series(swapped, NAIVE, 6)


def test_coefficients_never_have_positive_degree():
    for dim in range(1, 6):
        for plus, minus in signature_pairs(dim):
            germ = QuadraticGerm(dim=dim, plus=plus, minus=minus)
            for selector in SELECTORS:
                series = zeta_series(germ, selector, 6)
                for n, coefficient in series.coefficients().items():
                    assert coefficient.degree() <= 0, (dim, plus, minus, selector, n)


def test_signed_t2_closed_values():
    assert signed_t2_coefficient(2, 1, PLUS) == mono(-1) + mono(-2)
    assert signed_t2_coefficient(1, 1, PLUS) == mono(-1) - mono(-2)
    for t in range(1, 7):
        assert signed_t2_coefficient(0, t, PLUS).is_zero()
    with pytest.raises(InvalidGerm):
        signed_t2_coefficient(0, 0, PLUS)
    with pytest.raises(ValueError):
        signed_t2_coefficient(1, 1, NAIVE)


def test_t2_closed_forms_match_series():
    for dim in range(1, 7):
        for plus, minus in signature_pairs(dim):
            germ = QuadraticGerm(dim=dim, plus=plus, minus=minus)
            assert zeta_series(germ, PLUS, 2).coefficient(2) == signed_t2_coefficient(
                plus, minus, PLUS
            )
            assert zeta_series(germ, MINUS, 2).coefficient(2) == signed_t2_coefficient(
                plus, minus, MINUS
            )
            assert zeta_series(germ, NAIVE, 2).coefficient(2) == naive_t2_coefficient(
                plus, minus
            )


def test_naive_t2_values():
    one = LaurentPolynomial.one()
    assert naive_t2_coefficient(2, 2) == one - mono(-1) - mono(-2) + mono(-3)
    assert naive_t2_coefficient(1, 2) == one - mono(-1)
    assert naive_t2_coefficient(2, 3) == one - mono(-1)
    assert naive_t2_coefficient(1, 3) == one - mono(-1) + mono(-2) - mono(-3)
    assert naive_t2_coefficient(0, 3) == one - mono(-3)
