"""Validation of branching construction parameters."""

import math
from fractions import Fraction

import pytest

from fracspec.cantor.params import (
    CantorParams,
    middle_thirds_params,
    similarity_dimension,
    tapered_eta,
    validate_params,
)
from fracspec.errors import DomainError


def test_middle_thirds_defaults():
    p = middle_thirds_params()
    assert p.branches == 2
    assert p.ratio == Fraction(1, 3)
    assert p.offsets == (Fraction(0), Fraction(2, 3))
    assert abs(p.dimension - math.log(2) / math.log(3)) < 1e-15
    assert p.eta_rule == "constant"
    assert p.level_length(3) == Fraction(1, 27)


def test_similarity_dimension_solves_moran():
    beta = similarity_dimension(3, Fraction(1, 5))
    assert abs(3 * 0.2**beta - 1.0) < 1e-12


def test_offsets_must_fit_and_separate():
    # gap exactly equal to eta is rejected: children would touch
    report = validate_params(2, Fraction(1, 3), [Fraction(0), Fraction(1, 3)])
    assert not report.ok
    assert any("gap" in v for v in report.violations)
    with pytest.raises(DomainError):
        report.require()

    # offset outside [0, 1 - eta]
    report = validate_params(2, Fraction(1, 3), [Fraction(0), Fraction(3, 4)])
    assert any("leaves" in v for v in report.violations)

    # too much total contraction
    report = validate_params(2, Fraction(1, 2), [Fraction(0), Fraction(1, 2)])
    assert any("branches * ratio" in v for v in report.violations)

    # wrong offset count
    report = validate_params(3, Fraction(1, 5), [Fraction(0), Fraction(1, 2)])
    assert any("exactly 3 offsets" in v for v in report.violations)


def test_three_branch_feasibility():
    # eta = 2/5: no room for three children and two mandatory gaps
    report = validate_params(
        3, Fraction(2, 5), [Fraction(0), Fraction(1, 4), Fraction(1, 2)]
    )
    assert not report.ok
    # eta = 1/5 with comfortable gaps is fine
    good = CantorParams.create(
        3, Fraction(1, 5), [Fraction(0), Fraction(3, 10), Fraction(61, 100)]
    )
    assert good.dimension == similarity_dimension(3, Fraction(1, 5))


def test_tapered_rule_values():
    eta = Fraction(1, 3)
    assert tapered_eta(eta, 1) == Fraction(1, 4)
    assert tapered_eta(eta, 2) == Fraction(8, 27)
    with pytest.raises(DomainError):
        tapered_eta(eta, 0)
    p = CantorParams.create(
        2, eta, (Fraction(0), Fraction(2, 3)), eta_rule="tapered"
    )
    assert p.eta_at(1) == Fraction(1, 4)
    assert p.level_length(2) == Fraction(1, 4) * Fraction(8, 27)


def test_custom_etas_window():
    eta = Fraction(1, 3)
    # each custom value must stay within [tapered floor, eta]
    good = CantorParams.create(
        2,
        eta,
        (Fraction(0), Fraction(2, 3)),
        eta_rule="custom",
        custom_etas=[Fraction(1, 4), Fraction(3, 10)],
    )
    assert good.eta_at(2) == Fraction(3, 10)
    with pytest.raises(DomainError):
        good.eta_at(3)  # list exhausted

    report = validate_params(
        2, eta, (Fraction(0), Fraction(2, 3)), "custom", [Fraction(1, 5)]
    )
    assert any("leaves" in v for v in report.violations)

    report = validate_params(
        2, eta, (Fraction(0), Fraction(2, 3)), "custom",
        [Fraction(3, 10), Fraction(1, 4)],
    )
    assert any("non-decreasing" in v for v in report.violations)

    report = validate_params(2, eta, (Fraction(0), Fraction(2, 3)), "custom", None)
    assert any("nonempty" in v for v in report.violations)

    report = validate_params(
        2, eta, (Fraction(0), Fraction(2, 3)), "constant", [Fraction(1, 4)]
    )
    assert any("eta_rule" in v for v in report.violations)


def test_declared_dimension_crosscheck():
    beta = math.log(2) / math.log(3)
    ok = validate_params(
        2, Fraction(1, 3), (Fraction(0), Fraction(2, 3)),
        declared_dimension=beta,
    )
    assert ok.ok
    bad = validate_params(
        2, Fraction(1, 3), (Fraction(0), Fraction(2, 3)),
        declared_dimension=0.5,
    )
    assert any("disagrees" in v for v in bad.violations)


def test_dimension_log_ratio_exactness():
    p = middle_thirds_params()
    lr = p.dimension_log_ratio()
    assert (lr.num, lr.den) == (2, 3)
    assert lr.exact_power(Fraction(1, 27)) == Fraction(1, 8)
    irrational = CantorParams.create(
        2, Fraction(2, 7), (Fraction(0), Fraction(5, 7))
    )
    with pytest.raises(DomainError):
        irrational.dimension_log_ratio()


def test_branch_count_validation():
    report = validate_params(1, Fraction(1, 3), [Fraction(0)])
    assert not report.ok
