#!/usr/bin/env python

from fractions import Fraction

import pytest

from spectral_sumrules.sumrule import (QuadPoly, CheckReport, p_poly, q_poly, generalized_p_poly, gap_indices, partial_moments,
                                       check_identity, check_inequality, batch_check, check_gap_condition, recurrence_counts)
from spectral_sumrules.spectrum import Spectrum, CrossSpace, cross_spectrum
from spectral_sumrules.errors import EmptyInput, InsufficientLevels, NotAGap, GrowthConditionViolated

def test_polynomial_arithmetic():
    p = QuadPoly(5, -15, 10)
    assert p(1) == 0
    assert p(2) == 0
    assert p - p == QuadPoly()
    assert (p - p).degree() == -1
    assert (2 * p) / 2 == p
    assert -p + p == QuadPoly()
    assert QuadPoly.product(1, 2, leading=5) == p

def test_polynomial_str():
    assert str(QuadPoly(5, -15, 10)) == '5z^2 - 15z + 10'
    assert str(QuadPoly(0, -6, 6)) == '-6z + 6'
    assert str(QuadPoly(1, 0, -1)) == 'z^2 - 1'
    assert str(QuadPoly()) == '0'

def test_scaling():
    # Multiplying every eigenvalue by c multiplies the affine residual's value at c z by c^2.
    p = QuadPoly(0, -6, 6)
    assert p.scaled(4)(8) == 16 * p(2)

def test_json():
    p = QuadPoly(0, Fraction(-4), Fraction(16, 3))
    assert QuadPoly.from_json(p.to_json()) == p
    report = CheckReport('identity', False, p, [(Fraction(4, 3), 0)], 'notes', N=7)
    restored = CheckReport.from_json(report.to_json())
    assert (restored.kind, restored.holds, restored.residual, restored.witnesses, restored.N) == ('identity', False, p, [(Fraction(4, 3), 0)], 7)
    assert not report

def test_p_poly_square_torus():
    # The first five eigenvalues of the square torus in units of 4 pi^2.
    P = p_poly([0, 1, 1, 1, 1], 2, 1)
    assert P == QuadPoly(5, -21, 16)
    assert q_poly(1, 2, 5) == QuadPoly(5, -15, 10)

def test_generalized_p_poly():
    assert generalized_p_poly([1, 2], 1, 0) == QuadPoly.product(1, 1) + QuadPoly.product(2, 2)
    with pytest.raises(EmptyInput):
        generalized_p_poly([], 3, 1)

def test_partial_moments():
    s = cross_spectrum(CrossSpace('sphere', 2), 3)
    assert partial_moments(s, 3) == (4, 8, 2, 2)
    assert partial_moments(s, 4) == (6, 12, 2, 6)
    with pytest.raises(InsufficientLevels):
        partial_moments(s, 16)

def test_gap_indices():
    s = cross_spectrum(CrossSpace('sphere', 2), 4)
    assert gap_indices(s, 16) == [1, 4, 9, 16]
    assert gap_indices(s, 10) == [1, 4, 9]
    with pytest.raises(InsufficientLevels):
        gap_indices(s, 25)

def test_not_a_gap():
    s = cross_spectrum(CrossSpace('sphere', 2), 3)
    with pytest.raises(NotAGap):
        check_identity(s, 2, 2)

def test_sphere_identity_and_inequality():
    s = cross_spectrum(CrossSpace('sphere', 2), 5)
    for N in (1, 4, 9, 16):
        assert check_identity(s, 2, N).holds
        assert check_inequality(s, 2, N).holds

def test_explicit_lambda1_changes_the_verdict():
    # The identity needs the true Lambda_1.
    s = cross_spectrum(CrossSpace('sphere', 2), 3)
    assert not check_identity(s, 2, 4, Lambda1=3).holds

def test_batch():
    s = cross_spectrum(CrossSpace('real_projective', 3), 6)
    reports = batch_check(s, 3, gap_indices(s, 100), 'inequality')
    assert all(reports)
    assert [r.N for r in reports] == gap_indices(s, 100)
    with pytest.raises(ValueError):
        batch_check(s, 3, [1], 'nonsense')

def test_gap_condition_needs_levels():
    with pytest.raises(InsufficientLevels):
        check_gap_condition([0, 1], 3, 2)

def test_gap_condition_fails_off_family():
    assert not check_gap_condition([1, 2, 5], 3, 2)

def test_growth_condition():
    # a Lambda_{n+1} <= Lambda_{n+2} at the first step.
    with pytest.raises(GrowthConditionViolated) as violation:
        recurrence_counts([1, 2, 10], 3, 0)
    assert violation.value.step == 0

def test_growth_condition_with_a_shift():
    # The shift h/(a-1) = 1/2 gives 3/2·3 <= 21/2 at the first step.
    with pytest.raises(GrowthConditionViolated) as violation:
        recurrence_counts([0, 1, 10], 3, 1)
    assert violation.value.step == 0

def test_recurrence_needs_a_above_one():
    with pytest.raises(ValueError):
        recurrence_counts([0, 1, 2], 1, 0)
    with pytest.raises(ValueError):
        recurrence_counts([0, 2, 1], 3, 0)

def test_non_integer_counts():
    # a=5, h=0 on Lambda = l + 1/4 gives N_1 = 3/2.
    counts = recurrence_counts([Fraction(1, 4), Fraction(5, 4), Fraction(9, 4)], 5, 0)
    assert counts[1] == (Fraction(3, 2), False)
