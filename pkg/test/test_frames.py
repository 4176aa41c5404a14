#!/usr/bin/env python

from fractions import Fraction

import pytest

from spectral_sumrules.torus import TorusModuli, DualVector, SQUARE, EQUILATERAL, torus_spectrum, norm_sq
from spectral_sumrules.frames import (frame_check, addition_formula_check, first_shell, verify_sum_rule_identity,
                                      sign_bound_check, averaged_sum_rule_check)
from spectral_sumrules.sumrule import QuadPoly
from spectral_sumrules.errors import EmptyEigenspace, InsufficientCutoff, ZeroVector, SampleOutOfRange

import harness

@pytest.mark.parametrize('mod, constant', ((SQUARE, 2), (EQUILATERAL, 4)), ids=('square', 'equilateral'))
def test_tight_first_shells(mod, constant):
    # 8 pi^2 and 16 pi^2 in absolute units.
    report = frame_check(mod, norm_sq(mod, first_shell(mod)[0]))
    assert report.tight
    assert report.frame_constant_unnormalized == constant
    assert report.predicted_constant == constant

@pytest.mark.parametrize('mod', (TorusModuli(0, 2), TorusModuli(0, 4), TorusModuli(0, 9), TorusModuli(Fraction(1, 4), Fraction(15, 16))), ids=str)
def test_loose_first_shells(mod):
    report = frame_check(mod, norm_sq(mod, first_shell(mod)[0]))
    assert not report.tight
    assert report.frame_constant_unnormalized is None
    assert report.to_json()['tight'] is False

def test_every_square_shell_is_tight():
    s, _ = torus_spectrum(SQUARE, 25)
    for nu in s.values[1:]:
        assert frame_check(SQUARE, nu).tight

def test_empty_eigenspace():
    with pytest.raises(EmptyEigenspace):
        frame_check(SQUARE, 3)

@harness.for_each_named_torus
def test_addition_formulas(mod):
    s, _ = torus_spectrum(mod, 5)
    for nu in s.values[1:4]:
        assert addition_formula_check(mod, nu)

def test_addition_formulas_count_coincident_vectors():
    # On b^2 = 4 the level nu = 1 collects (+-1, 0) and (0, +-2).
    mod = TorusModuli(0, 4)
    assert len(first_shell(mod)) == 2
    assert addition_formula_check(mod, 1)
    s, _ = torus_spectrum(mod, 1)
    assert dict(s.levels)[1] == 4

def test_addition_formulas_reject_empty_levels():
    with pytest.raises(EmptyEigenspace):
        addition_formula_check(SQUARE, 3)

####
#### The sum rule itself
####

@pytest.mark.parametrize('mod', (SQUARE, EQUILATERAL, TorusModuli(0, 2), TorusModuli(0, 4)), ids=str)
@pytest.mark.parametrize('shell', (1, 2))
@pytest.mark.parametrize('L', (1, 2, 3))
def test_sum_rule_is_exact(mod, shell, L):
    _, shells = torus_spectrum(mod, 4)
    q = shells[shell][0]
    report = verify_sum_rule_identity(mod, q, L)
    assert report.holds, report.notes
    assert report.residual.is_zero()
    assert all(value == 0 for _, value in report.witnesses)

def test_sum_rule_with_constant_G():
    report = verify_sum_rule_identity(SQUARE, DualVector(0, 0), 2)
    assert report.holds
    assert report.residual.is_zero()

def test_sum_rule_cutoff_too_small():
    with pytest.raises(InsufficientCutoff):
        verify_sum_rule_identity(SQUARE, DualVector(1, 0), 2, nu_max=2)

def test_sign_bound_square():
    report = sign_bound_check(SQUARE, DualVector(1, 0), 2)
    assert report.holds
    assert report.N == 5
    assert report.residual == QuadPoly(0, -12, 12)
    assert report.witnesses == [(1, 0), (Fraction(3, 2), -6), (2, -12)]

@pytest.mark.parametrize('mod', (SQUARE, EQUILATERAL), ids=str)
@pytest.mark.parametrize('L', (1, 2, 3))
def test_sign_bound_irreducible(mod, L):
    q = first_shell(mod)[0]
    assert sign_bound_check(mod, q, L).holds

def test_sign_bound_rejects():
    with pytest.raises(ZeroVector):
        sign_bound_check(SQUARE, DualVector(0, 0), 1)
    with pytest.raises(SampleOutOfRange):
        sign_bound_check(SQUARE, DualVector(1, 0), 2, z_samples=[3])

@pytest.mark.parametrize('mod', (SQUARE, EQUILATERAL, TorusModuli(0, 3)), ids=str)
def test_averaged_sum_rule(mod):
    assert averaged_sum_rule_check(mod, 2).holds
