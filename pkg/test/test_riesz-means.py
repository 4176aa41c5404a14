#!/usr/bin/env python

from fractions import Fraction

import mpmath
import pytest

from spectral_sumrules.exactnum import PiPower
from spectral_sumrules.spectrum import CrossSpace, cross_spectrum
from spectral_sumrules.torus import SQUARE, EQUILATERAL, torus_spectrum
from spectral_sumrules.riesz import (riesz_mean, r2_monotonicity_check, semiclassical_constant, weyl_bound_check, weyl_ratio, default_z_grid)
from spectral_sumrules.errors import InsufficientLevels, SampleOutOfRange

def test_riesz_means_of_the_sphere():
    s = cross_spectrum(CrossSpace('sphere', 2), 3)
    # Strictly below: the level at 2 does not count at z=2.
    assert riesz_mean(s, 0, 2) == 1
    assert riesz_mean(s, 0, 3) == 4
    assert riesz_mean(s, 1, 6) == 18
    assert riesz_mean(s, 2, 6) == 84
    with pytest.raises(InsufficientLevels):
        riesz_mean(s, 2, 13)
    with pytest.raises(ValueError):
        riesz_mean(s, -1, 1)

def test_default_grid():
    s = cross_spectrum(CrossSpace('sphere', 2), 2)
    assert default_z_grid(s) == [0, 1, 2, 4, 6]
    assert default_z_grid(s, 3) == [0, 1, 2]

@pytest.mark.parametrize('d', (2, 3))
def test_sphere_monotonicity(d):
    s = cross_spectrum(CrossSpace('sphere', d), 20)
    report = r2_monotonicity_check(s, d, s.first_positive_level(), default_z_grid(s, 400))
    assert report.holds

def test_sphere_equality():
    s = cross_spectrum(CrossSpace('sphere', 2), 3)
    report = r2_monotonicity_check(s, 2, 2, [6, 7])
    # 2 * 18 * 7 = 252 = 3 * 84
    assert report.margins[0] == 0
    assert 6 in report.equalities
    assert report.margins[1] > 0

def test_square_torus_monotonicity():
    s, _ = torus_spectrum(SQUARE, 11)
    report = r2_monotonicity_check(s, 2, 1, default_z_grid(s, 10))
    assert report.holds
    assert 1 in report.equalities

def test_negative_sample():
    s = cross_spectrum(CrossSpace('sphere', 2), 3)
    with pytest.raises(SampleOutOfRange):
        r2_monotonicity_check(s, 2, 2, [-1])

def test_semiclassical_constants():
    assert semiclassical_constant(2) == PiPower(Fraction(1, 12), -1)
    assert semiclassical_constant(4) == PiPower(Fraction(1, 192), -2)
    assert mpmath.almosteq(semiclassical_constant(3), 2 / ((4 * mpmath.pi)**1.5 * mpmath.gamma(4.5)))

def test_weyl_sphere():
    s = cross_spectrum(CrossSpace('sphere', 2), 3)
    report = weyl_bound_check(s, 2, 2, '4pi', [6])
    assert report.holds
    # 84 <= 343/3
    assert report.margins == [PiPower(Fraction(91, 3))]
    assert report.constant_used == str(PiPower(Fraction(1, 12), -1))

def test_weyl_square_torus_first_level():
    s, _ = torus_spectrum(SQUARE, 2)
    report = weyl_bound_check(s, 2, 1, 1, [1])
    # 16 pi^4 <= 18 pi^5
    assert report.samples == [(1, PiPower(16, 4))]
    assert report.holds

def test_weyl_square_torus():
    s, _ = torus_spectrum(SQUARE, 500)
    report = weyl_bound_check(s, 2, 1, 1, default_z_grid(s, 500))
    assert report.holds
    assert weyl_ratio(s, 2, 1, 1, 500) >= 0.90

def test_weyl_equilateral_torus_irrational_area():
    s, _ = torus_spectrum(EQUILATERAL, 60)
    area = mpmath.sqrt(3) / 2
    report = weyl_bound_check(s, 2, Fraction(4, 3), area, default_z_grid(s, 60))
    assert report.holds
    assert all(isinstance(value, mpmath.mpf) for _, value in report.samples)
    assert 0 < weyl_ratio(s, 2, Fraction(4, 3), area, 60) <= 1

def test_weyl_odd_dimension():
    s = cross_spectrum(CrossSpace('sphere', 3), 3)
    report = weyl_bound_check(s, 3, 3, '2pi^2', [3])
    assert report.holds
    assert report.constant_used.startswith('2/((4pi)^(3/2)')
