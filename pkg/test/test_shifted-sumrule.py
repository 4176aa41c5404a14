#!/usr/bin/env python

from fractions import Fraction

import pytest

from spectral_sumrules.torus import TorusModuli, DualVector, SQUARE, EQUILATERAL
from spectral_sumrules.sumrule import QuadPoly, shifted_sumrule_check, orthogonal_pair_check
from spectral_sumrules.sumrule.shifted import gap_samples
from spectral_sumrules.errors import ZeroVector, NotAGap, SampleOutOfRange

def test_gap_samples():
    assert gap_samples(1, 2) == [1, Fraction(3, 2), 2]
    assert gap_samples(1, 2, ['5/4']) == [Fraction(5, 4)]
    with pytest.raises(SampleOutOfRange):
        gap_samples(1, 2, [0])

def test_rectangular_orthogonal_pair():
    report = orthogonal_pair_check(TorusModuli(0, 4), 3)
    assert report.holds
    assert report.residual == QuadPoly(0, Fraction(-1, 8), Fraction(-1, 16))

def test_explicit_pair_matches_orthogonal_pair():
    mod = TorusModuli(0, 4)
    explicit = shifted_sumrule_check(mod, [DualVector(1, 0), DualVector(0, 1)], 3)
    assert explicit.residual == orthogonal_pair_check(mod, 3).residual

@pytest.mark.parametrize('mod, N', ((SQUARE, 5), (SQUARE, 9), (EQUILATERAL, 7)), ids=str)
def test_orthogonal_pair_on_irreducible_tori(mod, N):
    assert orthogonal_pair_check(mod, N).holds

def test_rejects():
    with pytest.raises(ZeroVector):
        shifted_sumrule_check(SQUARE, [DualVector(0, 0)], 5)
    with pytest.raises(NotAGap):
        orthogonal_pair_check(TorusModuli(0, 4), 2)
    with pytest.raises(ValueError):
        shifted_sumrule_check(SQUARE, [], 5)
